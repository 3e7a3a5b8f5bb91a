// Command-line front end for the halving toolkit.
//
// Every subcommand writes its result to stdout (or --output) and reports
// failures on stderr as one machine-parsable line
//   error code=<Code> class=<validation|internal>
// followed by a human-readable diagnostic. Exit codes: 0 success,
// 2 validation failure, 3 internal assertion breach or golden mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halving/combinatorics.hpp"
#include "halving/errors.hpp"
#include "halving/io.hpp"
#include "halving/orbit_arith.hpp"
#include "halving/rationality.hpp"
#include "halving/series.hpp"
#include "halving/system.hpp"
#include "halving/zeta.hpp"

#ifndef HALVING_GOLDEN_DIR
#define HALVING_GOLDEN_DIR "golden"
#endif

using namespace halving;
using json = nlohmann::json;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_internal = 3;

struct Options {
    std::string format = "csv";
    std::string output;
    std::size_t horizon = 0;
    std::size_t degree = 0;
    std::size_t threshold = 1;
};

// A bounds or golden check that failed without an exception.
struct CheckFailure {
    std::string code;
    ErrorClass cls;
    std::string detail;
};

void report(const std::string& code, ErrorClass cls, const std::string& detail)
{
    std::cerr << "error code=" << code
              << " class=" << (cls == ErrorClass::validation ? "validation" : "internal") << '\n'
              << detail << '\n';
}

int exit_code_for(ErrorClass cls)
{
    return cls == ErrorClass::validation ? exit_validation : exit_internal;
}

json to_json(const CountSequence& seq)
{
    return json::parse(io::sequence_json(seq));
}

std::string rational_text(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void write_table(std::ostream& os, const std::vector<std::string>& names,
                 const std::vector<const CountSequence*>& columns)
{
    os << "n";
    for (const auto& name : names)
        os << ',' << name;
    os << '\n';
    std::size_t horizon = 0;
    for (const auto* c : columns)
        horizon = std::max(horizon, c->horizon());
    for (std::size_t n = 1; n <= horizon; ++n) {
        os << n;
        for (const auto* c : columns)
            os << ',' << c->value_or_zero(n).get_str();
        os << '\n';
    }
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InternalError("InvariantBreach", what);
}

// ---------------------------------------------------------------- construct

void cmd_construct(std::ostream& os, const Options& opt, const std::string& path)
{
    BehaviorDecomposition dec = io::load_decomposition(path);
    if (opt.horizon > 0)
        dec = dec.resized(opt.horizon);

    const sim::FiniteSystem sys = sim::build_system(dec);
    const sim::QuotientSystem q = sim::quotient(sys);
    const std::size_t big = 2 * dec.horizon();

    const CountSequence a = big_system_counts(dec.resized(big));
    const CountSequence b = quotient_counts(dec);
    const RawBehavior raw = to_raw(dec);
    const RawBehavior seen = sim::classify_orbits(sys);

    require(sim::count_orbits(sys).resized(big) == a,
            "simulated orbit counts of T differ from the analytic a_n");
    require(sim::count_orbits(q).resized(dec.horizon()) == b,
            "simulated orbit counts of the quotient differ from the analytic b_n");
    require(seen.surviving.resized(big) == raw.surviving &&
                seen.glued.resized(big) == raw.glued &&
                seen.halving.resized(big) == raw.halving,
            "orbit classification differs from the decomposition");

    if (io::parse_format(opt.format) == io::Format::json) {
        std::ostringstream dump;
        sim::write_system(dump, sys);
        json out{{"points", sys.size()},
                 {"a", to_json(a)},
                 {"b", to_json(b)},
                 {"surviving", to_json(raw.surviving)},
                 {"glued", to_json(raw.glued)},
                 {"halving", to_json(raw.halving)},
                 {"system", dump.str()}};
        os << out.dump(2) << '\n';
        return;
    }
    os << "# system\n";
    sim::write_system(os, sys);
    os << "# counts\n";
    write_table(os, {"a", "b"}, {&a, &b});
    os << "# classification\n";
    write_table(os, {"surviving", "glued", "halving"},
                {&raw.surviving, &raw.glued, &raw.halving});
}

// ---------------------------------------------------------------- decompose

void cmd_decompose(std::ostream& os, const Options& opt, const std::string& a_arg,
                   const std::string& b_arg)
{
    const CountSequence a = io::load_sequence(a_arg);
    CountSequence b = io::load_sequence(b_arg);
    if (opt.horizon > 0) {
        if (opt.horizon > b.horizon())
            throw HorizonMismatch("--horizon exceeds the horizon of b");
        b = b.resized(opt.horizon);
    }
    const BehaviorDecomposition dec = decompose(a, b, opt.threshold);

    require(quotient_counts(dec) == b, "b_n != s_n + g_n + h_n after decomposition");
    const std::size_t check = std::min(a.horizon(), dec.horizon());
    require(big_system_counts(dec).resized(check) == a.resized(check),
            "a_n != s_n + 2 g_n + h_{n/2} after decomposition");

    if (io::parse_format(opt.format) == io::Format::json) {
        json out{{"surviving", to_json(dec.surviving)},
                 {"glued", to_json(dec.glued)},
                 {"halving", to_json(dec.halving)}};
        os << out.dump(2) << '\n';
        return;
    }
    io::write_decomposition_csv(os, dec);
}

// ------------------------------------------------------------- bounds-check

std::optional<CheckFailure> cmd_bounds(std::ostream& os, const Options& opt,
                                       const std::string& a_arg, const std::string& b_arg)
{
    const CountSequence a = io::load_sequence(a_arg);
    CountSequence b = io::load_sequence(b_arg);
    if (opt.horizon > 0) {
        if (opt.horizon > b.horizon())
            throw HorizonMismatch("--horizon exceeds the horizon of b");
        b = b.resized(opt.horizon);
    }
    const auto violations = check_bounds(a, b);

    if (io::parse_format(opt.format) == io::Format::json) {
        json arr = json::array();
        for (const auto& v : violations)
            arr.push_back({{"rule", v.rule}, {"n", v.index}, {"detail", v.detail}});
        os << json{{"horizon", b.horizon()}, {"violations", arr}}.dump(2) << '\n';
    } else {
        os << "rule,n,detail\n";
        for (const auto& v : violations)
            os << v.rule << ',' << v.index << ',' << v.detail << '\n';
    }
    if (violations.empty())
        return std::nullopt;
    return CheckFailure{"BoundViolated", ErrorClass::validation,
                        std::to_string(violations.size()) + " bound violation(s), first: " +
                            violations.front().rule + " at n=" +
                            std::to_string(violations.front().index)};
}

// --------------------------------------------------------------------- zeta

void write_series(std::ostream& os, const Options& opt, const FormalPowerSeries& s)
{
    if (io::parse_format(opt.format) == io::Format::json)
        os << io::series_json(s) << '\n';
    else
        io::write_series_csv(os, s);
}

void cmd_zeta(std::ostream& os, const Options& opt, const std::string& counts,
              const std::string& form)
{
    const CountSequence seq = io::load_sequence(counts);
    const std::size_t degree = opt.degree > 0 ? opt.degree : seq.horizon();
    FormalPowerSeries z;
    if (form == "orbits")
        z = zeta::zeta_from_orbits(seq, degree);
    else if (form == "fixed-points")
        z = zeta::zeta_from_fixed_points(seq, degree);
    else
        throw InvalidArgument("unknown --form '" + form + "'");
    write_series(os, opt, z);
}

// -------------------------------------------------------------- rationality

void write_report(std::ostream& os, const Options& opt, const zeta::RationalityReport& r)
{
    std::vector<std::string> rec;
    for (const auto& q : r.recurrence)
        rec.push_back(rational_text(q));
    if (io::parse_format(opt.format) == io::Format::json) {
        json out{{"verdict", zeta::to_string(r.verdict)},
                 {"heuristic", true},
                 {"order", r.order},
                 {"max_order", r.max_order},
                 {"recurrence", rec},
                 {"fit_degree", r.fit_degree},
                 {"validation_degree", r.validation_degree},
                 {"linear_complexity_profile", r.linear_complexity_profile}};
        os << out.dump(2) << '\n';
        return;
    }
    auto join = [](const auto& items) {
        std::ostringstream s;
        bool first = true;
        for (const auto& x : items) {
            s << (first ? "" : " ") << x;
            first = false;
        }
        return s.str();
    };
    os << "field,value\n"
       << "verdict," << zeta::to_string(r.verdict) << '\n'
       << "heuristic,true\n"
       << "order," << r.order << '\n'
       << "max_order," << r.max_order << '\n'
       << "recurrence," << join(rec) << '\n'
       << "fit_degree," << r.fit_degree << '\n'
       << "validation_degree," << r.validation_degree << '\n'
       << "linear_complexity_profile," << join(r.linear_complexity_profile) << '\n';
}

void cmd_rationality(std::ostream& os, const Options& opt, const std::string& path,
                     std::size_t max_order, double fit_fraction)
{
    FormalPowerSeries s = io::load_series(path);
    if (opt.degree > 0) {
        if (opt.degree > s.degree())
            throw HorizonTooSmall("series has degree " + std::to_string(s.degree()));
        s = s.truncated(opt.degree);
    }
    write_report(os, opt, zeta::rationality_probe(s, fit_fraction, max_order));
}

// ------------------------------------------------------------------- growth

void cmd_growth(std::ostream& os, const Options& opt, const std::string& lambda,
                const std::string& eta, const std::string& c, bool threshold_given)
{
    const mpq_class l = io::parse_rational(lambda), e = io::parse_rational(eta),
                    k = io::parse_rational(c);
    const std::size_t threshold = threshold_given ? opt.threshold : admissible_threshold(l, e, k);
    const std::size_t horizon = opt.horizon > 0 ? opt.horizon : 20;
    const auto [a, b] = growth_sequences(GrowthSpec(l, e, k, horizon, threshold));
    if (io::parse_format(opt.format) == io::Format::json) {
        os << json{{"threshold", threshold}, {"a", to_json(a)}, {"b", to_json(b)}}.dump(2)
           << '\n';
        return;
    }
    os << "# threshold " << threshold << '\n';
    write_table(os, {"a", "b"}, {&a, &b});
}

// ----------------------------------------------------------------- examples

CountSequence from_function(std::size_t horizon, const std::function<mpz_class(std::size_t)>& f)
{
    CountSequence out(horizon);
    for (std::size_t n = 1; n <= horizon; ++n)
        out.set(n, f(n));
    return out;
}

mpz_class pow2(std::size_t n)
{
    return mpz_class(1) << static_cast<mp_bitcnt_t>(n);
}

mpz_class necklaces(std::size_t n)
{
    return zeta::mobius_power_sum(n, nullptr) / static_cast<unsigned long>(n);
}

void write_series_columns(std::ostream& os, const std::vector<std::string>& names,
                          const std::vector<const FormalPowerSeries*>& columns)
{
    os << "degree";
    for (const auto& name : names)
        os << ',' << name;
    os << '\n';
    for (std::size_t k = 0; k <= columns.front()->degree(); ++k) {
        os << k;
        for (const auto* c : columns)
            os << ',' << rational_text((*c)[k]);
        os << '\n';
    }
}

void probe_line(std::ostream& os, const std::string& label, const FormalPowerSeries& s,
                std::size_t max_order)
{
    const auto r = zeta::rationality_probe(s, 0.5, max_order);
    os << label << ',' << zeta::to_string(r.verdict) << ',' << r.order << ','
       << r.linear_complexity_profile.back() << '\n';
}

void example_tent(std::ostream& os)
{
    const std::size_t d = 20;
    const CountSequence tent = from_function(d, [](std::size_t n) -> mpz_class { return pow2(n) - 1; });
    const CountSequence doubling = from_function(d, pow2);
    const FormalPowerSeries zt = zeta::zeta_from_fixed_points(tent, d);
    const FormalPowerSeries zd = zeta::zeta_from_fixed_points(doubling, d);
    require(zt == rational_series({1, -1}, {1, -2}, d), "tent zeta is not (1-z)/(1-2z)");
    require(zd == rational_series({1}, {1, -2}, d), "doubling zeta is not 1/(1-2z)");
    require(zeta::zeta_from_orbits(orbits_from_fixed_points(tent), d) == zt,
            "product form disagrees for the tent map");

    const CountSequence ot = orbits_from_fixed_points(tent);
    const CountSequence od = orbits_from_fixed_points(doubling);
    os << "# periodic points and orbits: F = 2^n - 1 and F = 2^n\n";
    write_table(os, {"F_tent", "O_tent", "F_doubling", "O_doubling"}, {&tent, &ot, &doubling, &od});
    os << "# zeta coefficients: (1-z)/(1-2z) and 1/(1-2z)\n";
    write_series_columns(os, {"tent", "doubling"}, {&zt, &zd});
}

void example_double_reprise(std::ostream& os)
{
    const std::size_t d = 30;
    const CountSequence fs = zeta::reprise_fixed_points(d);
    const CountSequence os_counts = orbits_from_fixed_points(fs); // throws if not realizable
    const CountSequence ft = zeta::doubled_fixed_points(fs);
    const FormalPowerSeries zt = zeta::zeta_from_fixed_points(ft, d);
    require(zeta::doubling_zeta_identity_check(fs, d), "zeta_T != zeta_S(z) zeta_S(-z)");
    const FormalPowerSeries closed = rational_series({1}, {1, 0, -5, 0, 4}, d);
    require(zt == closed, "zeta_T is not 1/((1-z^2)(1-4z^2))");

    const FormalPowerSeries phi = zeta::phi_series(d);
    const FormalPowerSeries p1 = rational_series({0, 1}, {1, -1}, d);
    const FormalPowerSeries p2 = rational_series({0, 0, 4}, {1, 0, -4}, d);
    const FormalPowerSeries p3 = rational_series({0, 0, 0, 6, 0, -4}, {1, 0, -4, 0, 4}, d);
    for (std::size_t n = 1; n <= d; ++n) {
        require(fs[n] == p1[n] + p2[n] + p3[n] + phi[n],
                "F_S(" + std::to_string(n) + ") does not split into the rational parts plus phi");
        const bool vanishes = n % 2 == 0 || n == 1 || is_prime(n);
        require((phi[n] == 0) == vanishes, "phi vanishing pattern fails at " + std::to_string(n));
    }

    CountSequence phi_seq(d);
    for (std::size_t n = 1; n <= d; ++n)
        phi_seq.set(n, phi[n].get_num());
    os << "# F_S, O_S, F_T and phi\n";
    write_table(os, {"F_S", "O_S", "F_T", "phi"}, {&fs, &os_counts, &ft, &phi_seq});
    os << "# zeta_T against 1/((1-z^2)(1-4z^2))\n";
    write_series_columns(os, {"zeta_T", "closed_form"}, {&zt, &closed});
    os << "# probe,verdict,order,final_complexity\n";
    probe_line(os, "zeta_T", zt, 10);
}

void example_irrational_quotient(std::ostream& os)
{
    const std::size_t d = 200, h = 10;

    // One glued pair in every length; the quotient is the full 2-shift.
    const BehaviorDecomposition forward{
        from_function(h, [](std::size_t n) -> mpz_class { return necklaces(n) - 1; }),
        from_function(h, [](std::size_t) -> mpz_class { return mpz_class(1); }), CountSequence(h)};
    const CountSequence a = big_system_counts(forward);
    const CountSequence b = quotient_counts(forward);
    const CountSequence fa = fixed_points_from_orbits(a), fb = fixed_points_from_orbits(b);
    for (std::size_t n = 1; n <= h; ++n) {
        require(fa[n] == pow2(n) + sigma(n), "F_T != 2^n + sigma(n)");
        require(fb[n] == pow2(n), "F_Tbar != 2^n");
    }
    const sim::FiniteSystem sys = sim::build_system(forward);
    require(sim::count_orbits(sys).resized(2 * h) == big_system_counts(forward.resized(2 * h)),
            "simulated T counts differ");
    require(sim::count_orbits(sim::quotient(sys)).resized(h) == b, "simulated quotient differs");

    // Reverse direction: the quotient sees 2^n + 1 - sigma(n).
    const CountSequence frev =
        from_function(d, [](std::size_t n) -> mpz_class { return pow2(n) + 1 - sigma(n); });
    const CountSequence orev = orbits_from_fixed_points(frev);

    const FormalPowerSeries geometric = rational_series({1}, {1, -2}, d);
    const FormalPowerSeries zt = zeta::theta_series(d) * geometric;
    require(zeta::zeta_from_fixed_points(from_function(d, [](std::size_t n) -> mpz_class {
                                             return pow2(n) + sigma(n);
                                         }),
                                         d) == zt,
            "zeta_T != theta(z)/(1-2z)");
    const FormalPowerSeries zrev = zeta::zeta_from_fixed_points(frev, d);
    require(zrev * zeta::theta_series(d) == rational_series({1}, {1, -3, 2}, d),
            "reverse quotient zeta != 1/((1-z)(1-2z) theta(z))");

    const CountSequence frev_h = frev.resized(h), orev_h = orev.resized(h);
    os << "# forward: surviving = necklaces - 1, one glued pair per length\n";
    write_table(os, {"s", "g", "a", "b", "F_T", "F_Tbar"},
                {&forward.surviving, &forward.glued, &a, &b, &fa, &fb});
    os << "# reverse quotient: F = 2^n + 1 - sigma(n)\n";
    write_table(os, {"F_Tbar", "O_Tbar"}, {&frev_h, &orev_h});
    os << "# probe,verdict,order,final_complexity\n";
    probe_line(os, "forward_zeta_Tbar", geometric, 40);
    probe_line(os, "forward_zeta_T", zt, 40);
    probe_line(os, "reverse_zeta_T", rational_series({1}, {1, -3, 2}, d), 40);
    probe_line(os, "reverse_zeta_Tbar", zrev, 40);
}

void example_natural_boundary(std::ostream& os)
{
    const std::size_t h = 16;
    const zeta::AuxiliarySequence c = zeta::c_sequence(2 * h);
    require(!zeta::first_c_violation(c).has_value(), "c sequence violates its definition");
    const auto [a, b] = zeta::natural_boundary_sequences(2 * h);
    require(a[8] == 30 && b[4] == 19, "checkpoint a_8 = 30, b_4 = 19 failed");

    const CountSequence bh = b.resized(h / 2 + 4); // n <= 12
    const BehaviorDecomposition dec = decompose(a, bh, 2);
    require(quotient_counts(dec) == bh, "decomposition does not reproduce b");

    CountSequence cs(h);
    for (std::size_t n = 1; n <= h; ++n)
        cs.set(n, static_cast<unsigned long>(c[n]));
    const CountSequence ah = a.resized(h), bt = b.resized(h);
    os << "# c_n, a_n, b_n\n";
    write_table(os, {"c", "a", "b"}, {&cs, &ah, &bt});
    os << "# checkpoint\n"
       << "a_8," << a[8].get_str() << '\n'
       << "b_4," << b[4].get_str() << '\n';
    os << "# decomposition for n <= 12 with threshold 2\n";
    io::write_decomposition_csv(os, dec);
}

void example_growth(std::ostream& os)
{
    struct Case {
        const char* lambda;
        const char* eta;
        const char* c;
    };
    const Case cases[] = {{"2", "2", "1"}, {"2", "3", "1"}, {"3/2", "9/4", "1/2"}};
    for (const auto& k : cases) {
        const mpq_class l(k.lambda), e(k.eta), c(k.c);
        const std::size_t threshold = admissible_threshold(l, e, c);
        const auto [a, b] = growth_sequences(GrowthSpec(l, e, c, 12, threshold));
        const BehaviorDecomposition dec = decompose(a, b, threshold);
        require(big_system_counts(dec) == a && quotient_counts(dec) == b,
                "growth decomposition does not reproduce (a, b)");
        os << "# lambda=" << k.lambda << " eta=" << k.eta << " c=" << k.c
           << " threshold=" << threshold << '\n';
        write_table(os, {"a", "b", "s", "g", "h"},
                    {&a, &b, &dec.surviving, &dec.glued, &dec.halving});
    }
}

const std::vector<std::pair<std::string, void (*)(std::ostream&)>>& examples()
{
    static const std::vector<std::pair<std::string, void (*)(std::ostream&)>> table{
        {"tent", example_tent},
        {"double-reprise", example_double_reprise},
        {"irrational-quotient", example_irrational_quotient},
        {"natural-boundary", example_natural_boundary},
        {"growth", example_growth},
    };
    return table;
}

std::optional<CheckFailure> cmd_example(std::ostream& os, const std::string& name,
                                        const std::string& golden_dir, bool write_golden)
{
    for (const auto& [key, fn] : examples()) {
        if (key != name)
            continue;
        std::ostringstream text;
        fn(text);
        os << text.str();

        const std::filesystem::path golden = std::filesystem::path(golden_dir) /
                                             ("example_" + name + ".txt");
        if (write_golden) {
            std::ofstream(golden) << text.str();
            return std::nullopt;
        }
        std::ifstream in(golden);
        if (!in)
            return CheckFailure{"GoldenMissing", ErrorClass::internal,
                                "cannot read golden file " + golden.string()};
        std::stringstream expected;
        expected << in.rdbuf();
        if (expected.str() == text.str())
            return std::nullopt;
        std::istringstream got_lines(text.str()), want_lines(expected.str());
        std::string got, want;
        for (std::size_t line = 1;; ++line) {
            const bool g = static_cast<bool>(std::getline(got_lines, got));
            const bool w = static_cast<bool>(std::getline(want_lines, want));
            if (!g || !w || got != want)
                return CheckFailure{"GoldenMismatch", ErrorClass::internal,
                                    golden.string() + " line " + std::to_string(line) +
                                        ": expected '" + (w ? want : "<eof>") + "', got '" +
                                        (g ? got : "<eof>") + "'"};
        }
    }
    throw InvalidArgument("unknown example '" + name + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Periodic-orbit counting, halving quotients and dynamical zeta functions"};
    app.require_subcommand(1);

    Options opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", opt.output, "Write the result to PATH instead of stdout");
    };

    std::string path, a_arg, b_arg, form = "fixed-points", name, lambda, eta, c = "1";
    std::string golden_dir = HALVING_GOLDEN_DIR;
    std::size_t max_order = 10;
    double fit_fraction = 0.5;
    bool write_golden = false;

    auto* construct = app.add_subcommand("construct", "Build the literal system of a decomposition");
    construct->add_option("decomposition", path, "Decomposition CSV")->required();
    construct->add_option("--horizon", opt.horizon, "Truncate the decomposition");
    common(construct);

    auto* dec = app.add_subcommand("decompose", "Recover surviving/glued/halving counts");
    dec->add_option("a", a_arg, "Orbit counts of T (CSV file or literal)")->required();
    dec->add_option("b", b_arg, "Orbit counts of the quotient (CSV file or literal)")->required();
    dec->add_option("--threshold", opt.threshold, "Halving threshold N0")->default_val(1);
    dec->add_option("--horizon", opt.horizon, "Truncate b");
    common(dec);

    auto* bounds = app.add_subcommand("bounds-check", "Check the halving bounds for (a, b)");
    bounds->add_option("a", a_arg, "Orbit counts of T")->required();
    bounds->add_option("b", b_arg, "Orbit counts of the quotient")->required();
    bounds->add_option("--horizon", opt.horizon, "Truncate b");
    common(bounds);

    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta coefficients from a count sequence");
    zeta_cmd->add_option("counts", path, "Counts (CSV file or literal)")->required();
    zeta_cmd->add_option("--form", form, "Meaning of the counts")
        ->check(CLI::IsMember({"orbits", "fixed-points"}));
    zeta_cmd->add_option("--degree", opt.degree, "Truncation degree (default: horizon)");
    common(zeta_cmd);

    auto* rat = app.add_subcommand("rationality", "Heuristic linear-recurrence probe of a series");
    rat->add_option("series", path, "Series CSV")->required();
    rat->add_option("--max-order", max_order, "Largest recurrence order accepted");
    rat->add_option("--fit-fraction", fit_fraction, "Share of coefficients used for fitting");
    rat->add_option("--degree", opt.degree, "Truncate the series");
    common(rat);

    auto* ex = app.add_subcommand("example", "Regenerate a worked example and diff it against its golden file");
    ex->add_option("name", name, "tent, double-reprise, irrational-quotient, natural-boundary, growth")
        ->required();
    ex->add_option("--golden-dir", golden_dir, "Directory holding the golden files");
    ex->add_flag("--write-golden", write_golden, "Overwrite the golden file instead of diffing");
    ex->add_option("--output", opt.output, "Write the result to PATH instead of stdout");

    auto* growth = app.add_subcommand("growth", "Exponential growth pair a_n, b_n");
    growth->add_option("--lambda", lambda, "Growth rate of a (rational)")->required();
    growth->add_option("--eta", eta, "Growth rate of b (rational)")->required();
    growth->add_option("--c", c, "Constant factor of b (rational)");
    auto* threshold_opt = growth->add_option("--threshold", opt.threshold, "Threshold N0");
    growth->add_option("--horizon", opt.horizon, "Horizon (default 20)");
    common(growth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report("UsageError", ErrorClass::validation, e.what());
        return exit_validation;
    }

    std::ostringstream out;
    std::optional<CheckFailure> failure;
    try {
        if (construct->parsed())
            cmd_construct(out, opt, path);
        else if (dec->parsed())
            cmd_decompose(out, opt, a_arg, b_arg);
        else if (bounds->parsed())
            failure = cmd_bounds(out, opt, a_arg, b_arg);
        else if (zeta_cmd->parsed())
            cmd_zeta(out, opt, path, form);
        else if (rat->parsed())
            cmd_rationality(out, opt, path, max_order, fit_fraction);
        else if (ex->parsed())
            failure = cmd_example(out, name, golden_dir, write_golden);
        else if (growth->parsed())
            cmd_growth(out, opt, lambda, eta, c, threshold_opt->count() > 0);
    } catch (const Error& e) {
        report(e.code(), e.error_class(), e.what());
        return exit_code_for(e.error_class());
    } catch (const std::exception& e) {
        report("Unexpected", ErrorClass::internal, e.what());
        return exit_internal;
    }

    if (opt.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(opt.output);
        if (!(file << out.str())) {
            report("OutputFailed", ErrorClass::validation, "cannot write '" + opt.output + "'");
            return exit_validation;
        }
    }
    if (failure) {
        report(failure->code, failure->cls, failure->detail);
        return exit_code_for(failure->cls);
    }
    return 0;
}
