#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "halving/errors.hpp"
#include "halving/system.hpp"
#include "halving/zeta.hpp"
#include "support.hpp"

using namespace halving;
using namespace halving::sim;

namespace {

BehaviorDecomposition dec(CountSequence s, CountSequence g, CountSequence h)
{
    return {std::move(s), std::move(g), std::move(h)};
}

} // namespace

TEST_CASE("minimal systems")
{
    const FiniteSystem one = build_system(dec({1}, {0}, {0}));
    REQUIRE(one.size() == 1);
    CHECK(one.point(0).kind == PointKind::infinity);
    CHECK(one.t()[0] == 0);
    CHECK(one.iota()[0] == 0);
    CHECK(one.infinity() == std::optional<std::size_t>(0));

    const FiniteSystem glued = build_system(dec({1}, {1}, {0}));
    REQUIRE(glued.size() == 3);
    CHECK(glued.point(1).group == GroupElement::e);
    CHECK(glued.point(2).group == GroupElement::iota);
    CHECK(glued.iota()[1] == 2);
    CHECK(glued.t()[1] == 1);

    const FiniteSystem halved = build_system(dec({1}, {0}, {1}));
    REQUIRE(halved.size() == 3);
    CHECK(halved.t()[1] == 2);
    CHECK(halved.t()[2] == 1);
    CHECK(halved.iota()[1] == 2);
    CHECK(halved.point(1).length == 2);

    CHECK_THROWS_AS(build_system(dec({0}, {1}, {0})), EmptyFixedPoint);
}

TEST_CASE("point count formula")
{
    const auto d = dec({1, 2, 0}, {1, 0, 3}, {0, 1, 1});
    const FiniteSystem sys = build_system(d);
    // sum n (s_n + 2 g_n) + sum 2n h_n
    const std::size_t expected = 1 * (1 + 2) + 2 * (2 + 0) + 3 * (0 + 6) + 2 * 2 * 1 + 2 * 3 * 1;
    CHECK(sys.size() == expected);
    CHECK(point_count(d) == expected);
}

TEST_CASE("count orbits")
{
    CHECK(count_orbits(build_system(dec({1}, {0}, {0}))) == CountSequence{1});
    CHECK(count_orbits(build_system(dec({1, 0, 2}, {0, 0, 0}, {0, 0, 0}))) ==
          CountSequence{1, 0, 2});
}

TEST_CASE("classification of the three behaviours")
{
    const RawBehavior g = classify_orbits(build_system(dec({1}, {1}, {0})));
    CHECK(g.surviving == CountSequence{1});
    CHECK(g.glued == CountSequence{2});
    CHECK(g.halving == CountSequence{0});

    const RawBehavior h = classify_orbits(build_system(dec({1}, {0}, {1})));
    CHECK(h.halving[2] == 1);
    CHECK(h.surviving[1] == 1);

    const RawBehavior s = classify_orbits(build_system(dec({3, 1, 1}, {0, 0, 0}, {0, 0, 0})));
    CHECK(s.surviving == CountSequence{3, 1, 1});
    CHECK(s.glued == CountSequence{0, 0, 0});
}

TEST_CASE("classification rejects an involution that is not a half-turn")
{
    // A 4-cycle with iota = T^2 is fine; iota swapping 0<->1, 2<->3 does not
    // commute with T, so the constructor rejects it first.
    std::vector<Point> pts;
    for (std::uint64_t k = 0; k < 4; ++k)
        pts.push_back({PointKind::halving, 4, 1, std::nullopt, k, {}});
    CHECK_NOTHROW(FiniteSystem(pts, {1, 2, 3, 0}, {2, 3, 0, 1}));
    CHECK_THROWS_AS(FiniteSystem(pts, {1, 2, 3, 0}, {1, 0, 3, 2}), InvalidArgument);
    CHECK_THROWS_AS(FiniteSystem(pts, {1, 1, 3, 0}, {0, 1, 2, 3}), InvalidArgument);
    CHECK_THROWS_AS(FiniteSystem(pts, {1, 2, 3, 0}, {1, 2, 3, 0}), InvalidArgument);
}

TEST_CASE("quotients")
{
    const FiniteSystem glued = build_system(dec({1}, {1}, {0}));
    const QuotientSystem qg = quotient(glued);
    CHECK(qg.size() == 2);
    CHECK(count_orbits(qg) == CountSequence{2});

    const QuotientSystem qh = quotient(build_system(dec({1}, {0}, {1})));
    CHECK(qh.size() == 2);
    CHECK(count_orbits(qh) == CountSequence{2});

    const FiniteSystem surviving = build_system(dec({1, 0, 0, 0, 1}, {0, 0, 0, 0, 0},
                                                    {0, 0, 0, 0, 0}));
    const QuotientSystem qs = quotient(surviving);
    CHECK(qs.size() == 6);
    CHECK(count_orbits(qs) == CountSequence{1, 0, 0, 0, 1});
    for (const auto& m : qs.members)
        CHECK(m.size() == 1);
}

TEST_CASE("simulator agrees with the analytic counts")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        const auto d = testing::random_decomposition(rng, 10, 5);
        const FiniteSystem sys = build_system(d);
        const std::size_t big_horizon = 2 * d.horizon();

        REQUIRE(count_orbits(sys).resized(big_horizon) ==
                big_system_counts(d.resized(big_horizon)));
        const QuotientSystem q = quotient(sys);
        REQUIRE(count_orbits(q).resized(d.horizon()) == quotient_counts(d));
        REQUIRE(count_orbits(q).horizon() <= d.horizon());

        const RawBehavior raw = classify_orbits(sys);
        const RawBehavior expected = to_raw(d);
        REQUIRE(raw.surviving.resized(big_horizon) == expected.surviving);
        REQUIRE(raw.glued.resized(big_horizon) == expected.glued);
        REQUIRE(raw.halving.resized(big_horizon) == expected.halving);

        // pi is at most 2-to-1 and maps orbits with the right multiplicities.
        for (const auto& m : q.members)
            REQUIRE((m.size() == 1 || m.size() == 2));
        for (std::size_t x = 0; x < sys.size(); ++x)
            REQUIRE(q.class_of[sys.t()[x]] == q.tbar[q.class_of[x]]);
    }
}

TEST_CASE("projection multiplicities per orbit")
{
    const auto d = dec({2, 1}, {1, 2}, {1, 1});
    const FiniteSystem sys = build_system(d);
    const QuotientSystem q = quotient(sys);

    // Label quotient cycles by their smallest class; count preimage T-cycles.
    auto cycle_rep = [](const std::vector<std::size_t>& perm, std::size_t x) {
        std::size_t best = x;
        for (std::size_t y = perm[x]; y != x; y = perm[y])
            best = std::min(best, y);
        return best;
    };
    std::map<std::size_t, std::set<std::size_t>> preimages;
    std::map<std::size_t, PointKind> kind_of;
    for (std::size_t x = 0; x < sys.size(); ++x) {
        const std::size_t big = cycle_rep(sys.t(), x);
        const std::size_t small = cycle_rep(q.tbar, q.class_of[x]);
        preimages[small].insert(big);
        kind_of[small] = sys.point(x).kind;
    }
    for (const auto& [small, bigs] : preimages) {
        if (kind_of[small] == PointKind::glued)
            CHECK(bigs.size() == 2);
        else
            CHECK(bigs.size() == 1);
    }
}

TEST_CASE("metric")
{
    Point inf{PointKind::infinity, 1, 1, std::nullopt, 0, {}};
    Point x3{PointKind::surviving, 3, 1, std::nullopt, 0, {}};
    Point x2{PointKind::surviving, 2, 1, std::nullopt, 1, {}};
    Point x5{PointKind::halving, 6, 1, std::nullopt, 0, {}};
    Point y5{PointKind::surviving, 5, 2, std::nullopt, 4, {}};
    CHECK(distance(x3, inf) == mpq_class(1, 3));
    CHECK(distance(inf, x3) == mpq_class(1, 3));
    CHECK(distance(x3, x3) == 0);
    CHECK(distance(x2, y5) == mpq_class(1, 2));
    CHECK(distance(x5, y5) == mpq_class(1, 5));
}

TEST_CASE("metric axioms and isometries on a built system")
{
    const auto d = dec({2, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1});
    const FiniteSystem sys = build_system(d);
    REQUIRE(sys.size() <= 1000);
    const auto& pts = sys.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const mpq_class dij = distance(pts[i], pts[j]);
            REQUIRE(dij == distance(pts[j], pts[i]));
            REQUIRE((dij == 0) == (i == j));
            REQUIRE(distance(pts[sys.t()[i]], pts[sys.t()[j]]) == dij);
            REQUIRE(distance(pts[sys.iota()[i]], pts[sys.iota()[j]]) == dij);
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            for (std::size_t k = 0; k < pts.size(); ++k)
                REQUIRE(distance(pts[i], pts[k]) <=
                        distance(pts[i], pts[j]) + distance(pts[j], pts[k]));
}

TEST_CASE("doubling a single fixed point gives a halving 2-cycle")
{
    const FiniteSystem y = build_system(dec({1}, {0}, {0}));
    const FiniteSystem x = double_system(y);
    REQUIRE(x.size() == 2);
    CHECK(x.t()[0] == 1);
    CHECK(x.iota()[0] == 1);
    const RawBehavior raw = classify_orbits(x);
    CHECK(raw.halving == CountSequence{0, 1});
    const CountSequence f = fixed_points_from_orbits(count_orbits(x));
    CHECK(f == CountSequence{0, 2});
    CHECK(distance(x.point(0), x.point(1)) == 1);
}

TEST_CASE("doubled fixed-point counts")
{
    // F_S = (1, 3): one fixed point plus one 2-cycle.
    const FiniteSystem y = build_system(dec({1, 1}, {0, 0}, {0, 0}));
    CHECK(fixed_points_from_orbits(count_orbits(y)) == CountSequence{1, 3});
    const FiniteSystem x = double_system(y);
    CHECK(fixed_points_from_orbits(count_orbits(x)).resized(3) == CountSequence{0, 6, 0});

    const FiniteSystem xx = double_system(x);
    const CountSequence fy = fixed_points_from_orbits(count_orbits(y).resized(8));
    const CountSequence fxx = fixed_points_from_orbits(count_orbits(xx).resized(8));
    for (std::size_t n = 1; n <= 8; ++n) {
        // Doubling twice: T(y, e1, e2) moves both sheets, so odd n vanish and
        // even n pick up a factor 4 from the sheet pairs.
        if (n % 2 == 1)
            CHECK(fxx[n] == 0);
        else
            CHECK(fxx[n] == 4 * fy[n]);
    }
}

TEST_CASE("doubling then quotienting recovers the original counts")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = testing::random_decomposition(rng, 6, 3);
        const FiniteSystem y = build_system(d);
        const FiniteSystem x = double_system(y);
        const QuotientSystem q = quotient(x);
        REQUIRE(count_orbits(q) == count_orbits(y));

        const CountSequence fy = fixed_points_from_orbits(count_orbits(y).resized(12));
        const CountSequence fx = fixed_points_from_orbits(count_orbits(x).resized(12));
        REQUIRE(fx == zeta::doubled_fixed_points(fy));

        // The quotient of a built system doubles as well.
        const QuotientSystem qy = quotient(y);
        const FiniteSystem xq = double_system(qy, y);
        REQUIRE(count_orbits(quotient(xq)) == count_orbits(qy));
    }
}

TEST_CASE("system dump round trip and golden file")
{
    const FiniteSystem sys = build_system(dec({1, 0}, {1, 0}, {1, 0}));
    std::ostringstream out;
    write_system(out, sys);

    std::ifstream golden(HALVING_GOLDEN_DIR "/system_s1_g1_h1.txt");
    REQUIRE(golden);
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(out.str() == expected.str());

    std::istringstream in(out.str());
    const FiniteSystem back = read_system(in);
    CHECK(back.points() == sys.points());
    CHECK(back.t() == sys.t());
    CHECK(back.iota() == sys.iota());

    std::ostringstream doubled;
    write_system(doubled, double_system(sys));
    std::istringstream din(doubled.str());
    CHECK(read_system(din).size() == 2 * sys.size());

    std::istringstream bad("halving-system 2\n");
    CHECK_THROWS_AS(read_system(bad), InvalidArgument);
}
