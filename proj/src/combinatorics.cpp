#include "halving/combinatorics.hpp"

#include <algorithm>

#include "halving/errors.hpp"

namespace halving {

namespace {

mpq_class power(const mpq_class& q, std::size_t n)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

void require_horizon(const CountSequence& seq, std::size_t horizon, const char* what)
{
    if (seq.horizon() != horizon)
        throw InvalidArgument(std::string(what) + " horizon " + std::to_string(seq.horizon()) +
                              " differs from " + std::to_string(horizon));
}

} // namespace

BehaviorDecomposition::BehaviorDecomposition(CountSequence s, CountSequence g, CountSequence h)
    : surviving(std::move(s)), glued(std::move(g)), halving(std::move(h))
{
    require_horizon(glued, surviving.horizon(), "glued");
    require_horizon(halving, surviving.horizon(), "halving");
}

bool BehaviorDecomposition::has_fixed_point() const
{
    return horizon() >= 1 && surviving[1] >= 1;
}

BehaviorDecomposition BehaviorDecomposition::resized(std::size_t horizon) const
{
    return {surviving.resized(horizon), glued.resized(horizon), halving.resized(horizon)};
}

CountSequence big_system_counts(const BehaviorDecomposition& dec)
{
    CountSequence a(dec.horizon());
    for (std::size_t n = 1; n <= dec.horizon(); ++n) {
        mpz_class value = dec.surviving[n] + 2 * dec.glued[n];
        if (n % 2 == 0)
            value += dec.halving[n / 2];
        a.set(n, std::move(value));
    }
    return a;
}

CountSequence quotient_counts(const BehaviorDecomposition& dec)
{
    CountSequence b(dec.horizon());
    for (std::size_t n = 1; n <= dec.horizon(); ++n)
        b.set(n, dec.surviving[n] + dec.glued[n] + dec.halving[n]);
    return b;
}

RawBehavior to_raw(const BehaviorDecomposition& dec)
{
    const std::size_t raw_horizon = 2 * dec.horizon();
    RawBehavior raw{CountSequence(raw_horizon), CountSequence(raw_horizon),
                    CountSequence(raw_horizon)};
    for (std::size_t n = 1; n <= dec.horizon(); ++n) {
        raw.surviving.set(n, dec.surviving[n]);
        raw.glued.set(n, 2 * dec.glued[n]);
        raw.halving.set(2 * n, dec.halving[n]);
    }
    return raw;
}

std::vector<Violation> check_constraints(const CountSequence& raw_halving,
                                         const CountSequence& raw_glued)
{
    std::vector<Violation> out;
    for (std::size_t n = 1; n <= raw_halving.horizon(); n += 2) {
        if (raw_halving[n] != 0)
            out.push_back({"halving-odd-length", n,
                           "O^h(" + std::to_string(n) + ") = " + raw_halving[n].get_str()});
    }
    for (std::size_t n = 1; n <= raw_glued.horizon(); ++n) {
        if (mpz_odd_p(raw_glued[n].get_mpz_t()))
            out.push_back({"glued-odd-count", n,
                           "O^g(" + std::to_string(n) + ") = " + raw_glued[n].get_str()});
    }
    return out;
}

std::vector<Violation> check_bounds(const CountSequence& a, const CountSequence& b)
{
    const std::size_t horizon = b.horizon();
    if (a.horizon() < 2 * horizon)
        throw HorizonMismatch("big-system horizon " + std::to_string(a.horizon()) +
                              " is below twice the quotient horizon " + std::to_string(horizon));

    const CountSequence fa = fixed_points_from_orbits(a);
    const CountSequence fb = fixed_points_from_orbits(b);
    std::vector<Violation> out;
    auto report = [&](const char* rule, std::size_t n, const std::string& detail) {
        out.push_back({rule, n, detail});
    };

    for (std::size_t n = 1; n <= horizon; ++n) {
        const mpz_class twice_fb = 2 * fb[n];
        if (twice_fb < fa[n])
            report("fixed-lower", n,
                   "2*F_b = " + twice_fb.get_str() + " < F_a = " + fa[n].get_str());
        const mpz_class upper = fa[n] + fa[2 * n];
        if (twice_fb > upper)
            report("fixed-upper", n,
                   "2*F_b = " + twice_fb.get_str() + " > F_a(n)+F_a(2n) = " + upper.get_str());
        const mpz_class orbit_upper = a[n] + a[2 * n];
        if (b[n] > orbit_upper)
            report("orbit-upper", n,
                   "b = " + b[n].get_str() + " > a(n)+a(2n) = " + orbit_upper.get_str());
        if (n % 2 == 1 && 2 * b[n] < a[n])
            report("orbit-lower-odd", n,
                   "2*b = " + mpz_class(2 * b[n]).get_str() + " < a = " + a[n].get_str());
    }
    return out;
}

BehaviorDecomposition decompose(const CountSequence& a, const CountSequence& b,
                                std::size_t threshold)
{
    if (threshold < 1)
        throw InvalidArgument("threshold must be at least 1");
    const std::size_t horizon = b.horizon();
    if (horizon < 1)
        throw InvalidArgument("empty quotient sequence");
    if (a.horizon() < horizon)
        throw HorizonMismatch("big-system horizon " + std::to_string(a.horizon()) +
                              " is below the quotient horizon " + std::to_string(horizon));

    if (a[1] < 1)
        throw HypothesisViolated(1, "a_1 >= 1");
    if (2 * b[1] <= a[1])
        throw HypothesisViolated(1, "b_1 > a_1/2");
    for (std::size_t n = threshold; 2 * n <= a.horizon(); ++n) {
        if (2 * a[2 * n] < a[n])
            throw HypothesisViolated(n, "a_2n >= a_n/2 for n >= threshold");
    }
    for (std::size_t n = 1; n <= horizon; ++n) {
        if (2 * b[n] < a[n])
            throw HypothesisViolated(n, "b_n >= a_n/2");
        if (n < threshold) {
            if (b[n] > a[n])
                throw HypothesisViolated(n, "b_n <= a_n for n < threshold");
        } else if (2 * n <= a.horizon() && b[n] > a[2 * n]) {
            throw HypothesisViolated(n, "b_n <= a_2n for n >= threshold");
        }
    }

    BehaviorDecomposition dec{CountSequence(horizon), CountSequence(horizon),
                              CountSequence(horizon)};
    auto checked = [](mpz_class v, std::size_t k, const char* what) {
        if (sgn(v) < 0)
            throw InternalError("NegativeCount", std::string(what) + " at k=" +
                                                     std::to_string(k) + " is " + v.get_str());
        return v;
    };
    for (std::size_t k = 1; k <= horizon; ++k) {
        const mpz_class carried = (k % 2 == 0) ? dec.halving[k / 2] : mpz_class(0);
        const mpz_class room = a[k] - carried;
        if (b[k] <= room) {
            const mpz_class g = checked(room - b[k], k, "glued");
            dec.surviving.set(k, checked(b[k] - g, k, "surviving"));
            dec.glued.set(k, g);
        } else {
            if (k < threshold)
                throw InternalError("NegativeCount",
                                    "second branch below threshold at k=" + std::to_string(k));
            const mpz_class s = checked(room, k, "surviving");
            dec.surviving.set(k, s);
            dec.halving.set(k, checked(b[k] - s, k, "halving"));
        }
    }
    if (!dec.has_fixed_point())
        throw InternalError("NegativeCount", "recursion produced s_1 = 0");
    return dec;
}

GrowthSpec::GrowthSpec(mpq_class lambda, mpq_class eta, mpq_class c, std::size_t horizon,
                       std::size_t threshold)
    : lambda_(std::move(lambda)), eta_(std::move(eta)), c_(std::move(c)), horizon_(horizon),
      threshold_(threshold)
{
    if (lambda_ <= 1)
        throw InvalidArgument("lambda must exceed 1");
    if (eta_ <= 0 || c_ <= 0)
        throw InvalidArgument("eta and c must be positive");
    if (horizon_ < 1 || threshold_ < 1)
        throw InvalidArgument("horizon and threshold must be at least 1");
    const mpq_class lambda_sq = lambda_ * lambda_;
    const bool equal_rate = eta_ == lambda_ && 2 * c_ >= 1;
    const bool interior = eta_ > lambda_ && eta_ < lambda_sq;
    const bool squared_rate = eta_ == lambda_sq && c_ <= 1;
    if (!equal_rate && !interior && !squared_rate)
        throw InvalidArgument("(lambda, eta, c) outside the admissible regimes");
    if (c_ * power(eta_, threshold_) > power(lambda_, 2 * threshold_))
        throw InvalidArgument("threshold too small: c*eta^N exceeds lambda^(2N)");
}

std::size_t admissible_threshold(const mpq_class& lambda, const mpq_class& eta,
                                 const mpq_class& c)
{
    constexpr std::size_t search_limit = 100000;
    mpq_class eta_pow = eta * eta;
    mpq_class lambda_pow = lambda * lambda;
    for (std::size_t n = 2; n <= search_limit; ++n) {
        if (c * eta_pow <= lambda_pow * lambda_pow && 2 * c * eta_pow >= lambda_pow)
            return n;
        eta_pow *= eta;
        lambda_pow *= lambda;
    }
    throw InvalidArgument("no admissible threshold below " + std::to_string(search_limit));
}

mpz_class ceil_power(const mpq_class& q, std::size_t n)
{
    const mpq_class value = power(q, n);
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

std::pair<CountSequence, CountSequence> growth_sequences(const GrowthSpec& spec)
{
    CountSequence a(spec.horizon()), b(spec.horizon());
    for (std::size_t n = 1; n <= spec.horizon(); ++n) {
        a.set(n, ceil_power(spec.lambda(), n));
        if (n < spec.threshold()) {
            b.set(n, a[n]);
        } else {
            const mpq_class value = spec.c() * power(spec.eta(), n);
            mpz_class ceiling;
            mpz_cdiv_q(ceiling.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
            b.set(n, std::move(ceiling));
        }
    }
    return {std::move(a), std::move(b)};
}

} // namespace halving
