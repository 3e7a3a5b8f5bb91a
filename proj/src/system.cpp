#include "halving/system.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "halving/errors.hpp"

namespace halving::sim {

namespace {

std::uint64_t to_u64(const mpz_class& v, const char* what)
{
    if (!v.fits_ulong_p())
        throw InvalidArgument(std::string(what) + " " + v.get_str() + " too large to realize");
    return v.get_ui();
}

bool same_block(const Point& x, const Point& y)
{
    return x.kind == y.kind && x.length == y.length && x.copy == y.copy &&
           x.sheets.size() == y.sheets.size();
}

std::string group_token(const std::optional<GroupElement>& g)
{
    if (!g)
        return "-";
    return *g == GroupElement::e ? "e" : "i";
}

} // namespace

std::string to_string(PointKind kind)
{
    switch (kind) {
    case PointKind::surviving: return "surviving";
    case PointKind::glued: return "glued";
    case PointKind::halving: return "halving";
    case PointKind::infinity: return "infinity";
    }
    return "?";
}

std::string to_string(const Point& p)
{
    std::ostringstream os;
    os << to_string(p.kind) << ' ' << p.length << ' ' << p.copy << ' ' << group_token(p.group)
       << ' ' << p.phase << ' ';
    if (p.sheets.empty())
        os << '-';
    for (auto s : p.sheets)
        os << static_cast<int>(s);
    return os.str();
}

FiniteSystem::FiniteSystem(std::vector<Point> points, std::vector<std::size_t> t,
                           std::vector<std::size_t> iota)
    : points_(std::move(points)), t_(std::move(t)), iota_(std::move(iota))
{
    const std::size_t n = points_.size();
    if (t_.size() != n || iota_.size() != n)
        throw InvalidArgument("map sizes differ from the point count");

    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (t_[x] >= n || iota_[x] >= n)
            throw InvalidArgument("map image out of range at point " + std::to_string(x));
        if (hit[t_[x]])
            throw InvalidArgument("T is not injective at point " + std::to_string(t_[x]));
        hit[t_[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (iota_[iota_[x]] != x)
            throw InvalidArgument("iota is not an involution at point " + std::to_string(x));
        if (t_[iota_[x]] != iota_[t_[x]])
            throw InvalidArgument("T and iota do not commute at point " + std::to_string(x));
        if (!same_block(points_[x], points_[t_[x]]))
            throw InvalidArgument("T leaves the block of point " + std::to_string(x));
        const Point& p = points_[x];
        if ((p.kind == PointKind::glued) != p.group.has_value())
            throw InvalidArgument("exactly the glued points carry a group element (point " +
                                  std::to_string(x) + ")");
        if (p.kind == PointKind::halving && p.length % 2 != 0)
            throw InvalidArgument("halving point of odd length at " + std::to_string(x));
    }
    if (std::count_if(points_.begin(), points_.end(),
                      [](const Point& p) { return p.kind == PointKind::infinity && p.sheets.empty(); }) > 1)
        throw InvalidArgument("more than one infinity point");
    const CountSequence cycles = count_cycles(t_);
    horizon_ = cycles.horizon();
}

std::optional<std::size_t> FiniteSystem::infinity() const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].kind == PointKind::infinity)
            return i;
    return std::nullopt;
}

mpz_class point_count(const BehaviorDecomposition& dec)
{
    mpz_class total = 0;
    for (std::size_t n = 1; n <= dec.horizon(); ++n) {
        total += mpz_class(dec.surviving[n] + 2 * dec.glued[n]) * static_cast<unsigned long>(n);
        total += dec.halving[n] * static_cast<unsigned long>(2 * n);
    }
    return total;
}

FiniteSystem build_system(const BehaviorDecomposition& dec)
{
    if (!dec.has_fixed_point())
        throw EmptyFixedPoint();
    const std::uint64_t total = to_u64(point_count(dec), "point count");

    std::vector<Point> points;
    std::vector<std::size_t> t, iota;
    points.reserve(total);
    t.reserve(total);
    iota.reserve(total);

    // Appends one cycle of the given length; returns the index of phase 0.
    auto add_cycle = [&](PointKind kind, std::uint64_t length, std::uint64_t copy,
                         std::optional<GroupElement> group) {
        const std::size_t base = points.size();
        for (std::uint64_t k = 0; k < length; ++k) {
            points.push_back({kind, length, copy, group, k, {}});
            t.push_back(base + (k + 1) % length);
            iota.push_back(base + k);
        }
        return base;
    };

    for (std::size_t n = 1; n <= dec.horizon(); ++n) {
        const std::uint64_t s = to_u64(dec.surviving[n], "surviving count");
        for (std::uint64_t i = 1; i <= s; ++i) {
            const bool is_infinity = n == 1 && i == 1;
            add_cycle(is_infinity ? PointKind::infinity : PointKind::surviving, n, i,
                      std::nullopt);
        }

        const std::uint64_t g = to_u64(dec.glued[n], "glued count");
        for (std::uint64_t i = 1; i <= g; ++i) {
            const std::size_t first = add_cycle(PointKind::glued, n, i, GroupElement::e);
            const std::size_t second = add_cycle(PointKind::glued, n, i, GroupElement::iota);
            for (std::uint64_t k = 0; k < n; ++k) {
                iota[first + k] = second + k;
                iota[second + k] = first + k;
            }
        }

        const std::uint64_t length = 2 * n;
        const std::uint64_t h = to_u64(dec.halving[n], "halving count");
        for (std::uint64_t i = 1; i <= h; ++i) {
            const std::size_t base = add_cycle(PointKind::halving, length, i, std::nullopt);
            for (std::uint64_t k = 0; k < length; ++k)
                iota[base + k] = base + (k + n) % length;
        }
    }
    return FiniteSystem(std::move(points), std::move(t), std::move(iota));
}

CountSequence count_cycles(const std::vector<std::size_t>& perm)
{
    std::vector<bool> visited(perm.size(), false);
    std::vector<std::size_t> lengths;
    std::size_t longest = 0;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (visited[start])
            continue;
        std::size_t len = 0;
        for (std::size_t x = start; !visited[x]; x = perm[x]) {
            visited[x] = true;
            ++len;
        }
        lengths.push_back(len);
        longest = std::max(longest, len);
    }
    std::vector<mpz_class> counts(longest, mpz_class(0));
    for (auto len : lengths)
        ++counts[len - 1];
    return CountSequence(std::move(counts));
}

CountSequence count_orbits(const FiniteSystem& sys)
{
    return count_cycles(sys.t());
}

CountSequence count_orbits(const QuotientSystem& q)
{
    return count_cycles(q.tbar);
}

RawBehavior classify_orbits(const FiniteSystem& sys)
{
    const std::size_t horizon = sys.horizon();
    RawBehavior raw{CountSequence(horizon), CountSequence(horizon), CountSequence(horizon)};
    const auto& t = sys.t();
    const auto& iota = sys.iota();

    // cycle_id[x] identifies the T-cycle through x by its first-visited point.
    std::vector<std::size_t> cycle_id(sys.size(), sys.size());
    std::vector<std::size_t> starts;
    for (std::size_t start = 0; start < sys.size(); ++start) {
        if (cycle_id[start] != sys.size())
            continue;
        for (std::size_t x = start; cycle_id[x] == sys.size(); x = t[x])
            cycle_id[x] = start;
        starts.push_back(start);
    }

    auto bump = [](CountSequence& seq, std::size_t n) { seq.set(n, seq[n] + 1); };

    for (auto start : starts) {
        std::vector<std::size_t> cycle;
        for (std::size_t x = start;;) {
            cycle.push_back(x);
            x = t[x];
            if (x == start)
                break;
        }
        const std::size_t n = cycle.size();
        const bool pointwise_fixed =
            std::all_of(cycle.begin(), cycle.end(), [&](std::size_t x) { return iota[x] == x; });
        if (pointwise_fixed) {
            bump(raw.surviving, n);
            continue;
        }
        const bool preserved = std::all_of(cycle.begin(), cycle.end(), [&](std::size_t x) {
            return cycle_id[iota[x]] == start;
        });
        if (preserved) {
            // iota must act as T^(n/2) on the cycle.
            if (n % 2 != 0)
                throw InternalError("InvariantBreach",
                                    "odd cycle of length " + std::to_string(n) +
                                        " preserved but not fixed by iota");
            for (std::size_t k = 0; k < n; ++k) {
                if (iota[cycle[k]] != cycle[(k + n / 2) % n])
                    throw InternalError("InvariantBreach",
                                        "iota is not the half-turn on a preserved cycle");
            }
            bump(raw.halving, n);
            continue;
        }
        const std::size_t partner = cycle_id[iota[start]];
        const bool glued = std::all_of(cycle.begin(), cycle.end(), [&](std::size_t x) {
            return cycle_id[iota[x]] == partner && partner != start;
        });
        if (!glued)
            throw InternalError("InvariantBreach", "iota splits a T-cycle across several cycles");
        bump(raw.glued, n);
    }
    return raw;
}

QuotientSystem quotient(const FiniteSystem& sys)
{
    QuotientSystem q;
    const std::size_t none = sys.size();
    q.class_of.assign(sys.size(), none);
    for (std::size_t x = 0; x < sys.size(); ++x) {
        if (q.class_of[x] != none)
            continue;
        const std::size_t partner = sys.iota()[x];
        const std::size_t id = q.members.size();
        q.class_of[x] = id;
        q.class_of[partner] = id;
        if (partner == x)
            q.members.push_back({x});
        else
            q.members.push_back({std::min(x, partner), std::max(x, partner)});
    }

    q.tbar.assign(q.members.size(), none);
    for (std::size_t x = 0; x < sys.size(); ++x) {
        const std::size_t image = q.class_of[sys.t()[x]];
        std::size_t& slot = q.tbar[q.class_of[x]];
        if (slot == none)
            slot = image;
        else if (slot != image)
            throw InternalError("IllDefined",
                                "pi(T x) depends on the representative of class " +
                                    std::to_string(q.class_of[x]));
    }
    q.horizon = count_cycles(q.tbar).horizon();
    return q;
}

mpq_class distance(const Point& x, const Point& y)
{
    if (x.sheets.size() != y.sheets.size())
        throw InvalidArgument("points belong to systems of different doubling depth");
    mpq_class sheet_part = 0;
    for (std::size_t i = 0; i < x.sheets.size(); ++i)
        if (x.sheets[i] != y.sheets[i])
            sheet_part += 1;

    Point bx = x, by = y;
    bx.sheets.clear();
    by.sheets.clear();
    if (bx == by)
        return sheet_part;
    const bool x_inf = bx.kind == PointKind::infinity;
    const bool y_inf = by.kind == PointKind::infinity;
    mpq_class base;
    if (x_inf)
        base = mpq_class(1, by.length);
    else if (y_inf)
        base = mpq_class(1, bx.length);
    else
        base = mpq_class(1, std::min(bx.length, by.length));
    return base + sheet_part;
}

namespace {

FiniteSystem double_from(const std::vector<Point>& labels, const std::vector<std::size_t>& s)
{
    const std::size_t n = labels.size();
    std::vector<Point> points;
    std::vector<std::size_t> t(2 * n), iota(2 * n);
    points.reserve(2 * n);
    // (y, e) lives at index 2y + e.
    for (std::size_t y = 0; y < n; ++y) {
        for (std::uint8_t e = 0; e < 2; ++e) {
            Point p = labels[y];
            p.sheets.push_back(e);
            points.push_back(std::move(p));
            t[2 * y + e] = 2 * s[y] + (e ^ 1);
            iota[2 * y + e] = 2 * y + (e ^ 1);
        }
    }
    return FiniteSystem(std::move(points), std::move(t), std::move(iota));
}

} // namespace

FiniteSystem double_system(const FiniteSystem& sys)
{
    return double_from(sys.points(), sys.t());
}

FiniteSystem double_system(const QuotientSystem& q, const FiniteSystem& parent)
{
    std::vector<Point> labels;
    labels.reserve(q.size());
    for (const auto& m : q.members)
        labels.push_back(parent.point(m.front()));
    return double_from(labels, q.tbar);
}

void write_system(std::ostream& os, const FiniteSystem& sys)
{
    os << "halving-system 1\n";
    os << "points " << sys.size() << '\n';
    for (std::size_t i = 0; i < sys.size(); ++i)
        os << i << ' ' << to_string(sys.point(i)) << '\n';
    os << "T " << sys.size() << '\n';
    for (std::size_t i = 0; i < sys.size(); ++i)
        os << i << ' ' << sys.t()[i] << '\n';
    os << "iota " << sys.size() << '\n';
    for (std::size_t i = 0; i < sys.size(); ++i)
        os << i << ' ' << sys.iota()[i] << '\n';
}

namespace {

PointKind parse_kind(const std::string& token)
{
    if (token == "surviving") return PointKind::surviving;
    if (token == "glued") return PointKind::glued;
    if (token == "halving") return PointKind::halving;
    if (token == "infinity") return PointKind::infinity;
    throw InvalidArgument("unknown point kind '" + token + "'");
}

void expect_section(std::istream& is, const std::string& name, std::size_t& count)
{
    std::string word;
    if (!(is >> word >> count) || word != name)
        throw InvalidArgument("expected section '" + name + "'");
}

std::vector<std::size_t> read_map(std::istream& is, const std::string& name, std::size_t n)
{
    std::size_t count = 0;
    expect_section(is, name, count);
    if (count != n)
        throw InvalidArgument(name + " lists " + std::to_string(count) + " pairs, expected " +
                              std::to_string(n));
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t from = 0, to = 0;
        if (!(is >> from >> to) || from != i)
            throw InvalidArgument("malformed " + name + " pair at line " + std::to_string(i));
        map[i] = to;
    }
    return map;
}

} // namespace

FiniteSystem read_system(std::istream& is)
{
    std::string magic;
    int version = 0;
    if (!(is >> magic >> version) || magic != "halving-system" || version != 1)
        throw InvalidArgument("not a halving-system v1 dump");
    std::size_t n = 0;
    expect_section(is, "points", n);
    std::vector<Point> points(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = 0;
        std::string kind, group, sheets;
        Point& p = points[i];
        if (!(is >> idx >> kind >> p.length >> p.copy >> group >> p.phase >> sheets) || idx != i)
            throw InvalidArgument("malformed point line " + std::to_string(i));
        p.kind = parse_kind(kind);
        if (group == "e")
            p.group = GroupElement::e;
        else if (group == "i")
            p.group = GroupElement::iota;
        else if (group != "-")
            throw InvalidArgument("unknown group element '" + group + "'");
        if (sheets != "-") {
            for (char c : sheets) {
                if (c != '0' && c != '1')
                    throw InvalidArgument("bad sheet string '" + sheets + "'");
                p.sheets.push_back(static_cast<std::uint8_t>(c - '0'));
            }
        }
    }
    auto t = read_map(is, "T", n);
    auto iota = read_map(is, "iota", n);
    return FiniteSystem(std::move(points), std::move(t), std::move(iota));
}

} // namespace halving::sim
