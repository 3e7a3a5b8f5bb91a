#include "halving/io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "halving/errors.hpp"

namespace halving::io {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

mpz_class parse_integer(const std::string& text, std::size_t line_no)
{
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw InvalidArgument("line " + std::to_string(line_no) + ": '" + text +
                              "' is not an integer");
    return v;
}

std::size_t parse_index(const std::string& text, std::size_t line_no)
{
    const mpz_class v = parse_integer(text, line_no);
    if (v < 1 || !v.fits_ulong_p())
        throw InvalidArgument("line " + std::to_string(line_no) + ": index '" + text +
                              "' must be a positive integer");
    return v.get_ui();
}

// Reads data rows after the expected header; blank and '#' lines are skipped.
std::vector<std::pair<std::size_t, std::vector<std::string>>>
read_rows(std::istream& is, const std::string& header, std::size_t columns)
{
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (!seen_header) {
            if (t != header)
                throw InvalidArgument("line " + std::to_string(line_no) + ": expected header '" +
                                      header + "'");
            seen_header = true;
            continue;
        }
        auto fields = split(t, ',');
        if (fields.size() != columns)
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(columns) + " fields");
        rows.emplace_back(line_no, std::move(fields));
    }
    if (!seen_header)
        throw InvalidArgument("missing header '" + header + "'");
    return rows;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    return in;
}

std::string rational_text(const mpq_class& q)
{
    if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

CountSequence read_sequence_csv(std::istream& is)
{
    std::map<std::size_t, mpz_class> entries;
    for (auto& [line_no, fields] : read_rows(is, "n,value", 2)) {
        const std::size_t n = parse_index(fields[0], line_no);
        if (!entries.emplace(n, parse_integer(fields[1], line_no)).second)
            throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate n=" +
                                  std::to_string(n));
    }
    CountSequence seq(entries.empty() ? 0 : entries.rbegin()->first);
    for (auto& [n, v] : entries)
        seq.set(n, v);
    return seq;
}

void write_sequence_csv(std::ostream& os, const CountSequence& seq)
{
    os << "n,value\n";
    for (std::size_t n = 1; n <= seq.horizon(); ++n)
        os << n << ',' << seq[n].get_str() << '\n';
}

CountSequence parse_sequence_literal(std::string_view text)
{
    std::vector<mpz_class> values;
    for (const auto& field : split(text, ','))
        values.push_back(parse_integer(field, 1));
    return CountSequence(std::move(values));
}

CountSequence load_sequence(const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        auto in = open_input(arg);
        return read_sequence_csv(in);
    }
    return parse_sequence_literal(arg);
}

BehaviorDecomposition read_decomposition_csv(std::istream& is)
{
    std::map<std::string, std::map<std::size_t, mpz_class>> sections{
        {"surviving", {}}, {"glued", {}}, {"halving", {}}};
    std::size_t horizon = 0;
    for (auto& [line_no, fields] : read_rows(is, "section,n,value", 3)) {
        auto it = sections.find(fields[0]);
        if (it == sections.end())
            throw InvalidArgument("line " + std::to_string(line_no) + ": unknown section '" +
                                  fields[0] + "'");
        const std::size_t n = parse_index(fields[1], line_no);
        if (!it->second.emplace(n, parse_integer(fields[2], line_no)).second)
            throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate " +
                                  fields[0] + " n=" + std::to_string(n));
        horizon = std::max(horizon, n);
    }
    auto build = [&](const std::string& name) {
        CountSequence seq(horizon);
        for (auto& [n, v] : sections[name])
            seq.set(n, v);
        return seq;
    };
    return {build("surviving"), build("glued"), build("halving")};
}

void write_decomposition_csv(std::ostream& os, const BehaviorDecomposition& dec)
{
    os << "section,n,value\n";
    const std::pair<const char*, const CountSequence*> parts[] = {
        {"surviving", &dec.surviving}, {"glued", &dec.glued}, {"halving", &dec.halving}};
    for (auto [name, seq] : parts)
        for (std::size_t n = 1; n <= seq->horizon(); ++n)
            os << name << ',' << n << ',' << (*seq)[n].get_str() << '\n';
}

BehaviorDecomposition load_decomposition(const std::string& path)
{
    auto in = open_input(path);
    return read_decomposition_csv(in);
}

FormalPowerSeries read_series_csv(std::istream& is)
{
    std::map<std::size_t, mpq_class> entries;
    for (auto& [line_no, fields] : read_rows(is, "degree,numerator,denominator", 3)) {
        const mpz_class deg = parse_integer(fields[0], line_no);
        if (deg < 0 || !deg.fits_ulong_p())
            throw InvalidArgument("line " + std::to_string(line_no) + ": bad degree");
        const mpz_class den = parse_integer(fields[2], line_no);
        if (den == 0)
            throw InvalidArgument("line " + std::to_string(line_no) + ": zero denominator");
        mpq_class q(parse_integer(fields[1], line_no), den);
        q.canonicalize();
        if (!entries.emplace(deg.get_ui(), q).second)
            throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate degree");
    }
    if (entries.empty())
        throw InvalidArgument("series file has no coefficients");
    FormalPowerSeries out(entries.rbegin()->first);
    for (auto& [k, q] : entries)
        out.set(k, q);
    return out;
}

void write_series_csv(std::ostream& os, const FormalPowerSeries& series)
{
    os << "degree,numerator,denominator\n";
    for (std::size_t k = 0; k <= series.degree(); ++k)
        os << k << ',' << series[k].get_num().get_str() << ','
           << series[k].get_den().get_str() << '\n';
}

FormalPowerSeries load_series(const std::string& path)
{
    auto in = open_input(path);
    return read_series_csv(in);
}

std::string sequence_json(const CountSequence& seq)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : seq.values())
        arr.push_back(v.get_str());
    return arr.dump();
}

std::string series_json(const FormalPowerSeries& series)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : series.coefficients())
        arr.push_back(rational_text(q));
    return arr.dump();
}

mpq_class parse_rational(std::string_view text)
{
    mpq_class q;
    const std::string s = trim(text);
    if (s.empty() || q.set_str(s, 10) != 0)
        throw InvalidArgument("'" + s + "' is not a rational number");
    if (q.get_den() == 0)
        throw InvalidArgument("'" + s + "' has a zero denominator");
    q.canonicalize();
    return q;
}

} // namespace halving::io
