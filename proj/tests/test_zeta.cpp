#include <doctest.h>

#include <random>

#include "halving/combinatorics.hpp"
#include "halving/errors.hpp"
#include "halving/rationality.hpp"
#include "halving/zeta.hpp"
#include "support.hpp"

using namespace halving;
using namespace halving::zeta;

namespace {

CountSequence powers_of_two(std::size_t horizon, long offset)
{
    std::vector<mpz_class> v;
    for (std::size_t n = 1; n <= horizon; ++n)
        v.push_back((mpz_class(1) << static_cast<unsigned>(n)) + offset);
    return CountSequence(std::move(v));
}

// Coefficients of 1/((1 - z)(1 - 2z)) = 2^(n+1) - 1, written out directly.
FormalPowerSeries two_root_series(std::size_t degree)
{
    FormalPowerSeries out(degree);
    for (std::size_t n = 0; n <= degree; ++n)
        out.set(n, mpq_class((mpz_class(1) << static_cast<unsigned>(n + 1)) - 1));
    return out;
}

} // namespace

TEST_CASE("series basics")
{
    const FormalPowerSeries f{1, 2, 3};
    CHECK(f.degree() == 2);
    CHECK(f.negated_argument() == FormalPowerSeries{1, -2, 3});
    CHECK(f * FormalPowerSeries{1, -1, 0} == FormalPowerSeries{1, 1, 1});
    CHECK(series_inverse(FormalPowerSeries{1, -2, 0, 0}) == FormalPowerSeries{1, 2, 4, 8});
    CHECK(series_inverse(FormalPowerSeries{2, 0}) ==
          FormalPowerSeries(std::vector<mpq_class>{mpq_class(1, 2), 0}));
    CHECK_THROWS_AS(series_inverse(FormalPowerSeries{0, 1}), InvalidArgument);
    CHECK(rational_series({1, -1}, {1, -2}, 3) == FormalPowerSeries{1, 1, 2, 4});
}

TEST_CASE("series exp")
{
    CHECK(series_exp(FormalPowerSeries(5)) == FormalPowerSeries::one(5));

    FormalPowerSeries z(6);
    z.set(1, 1);
    const FormalPowerSeries e = series_exp(z);
    mpz_class factorial = 1;
    for (unsigned n = 0; n <= 6; ++n) {
        if (n > 0)
            factorial *= n;
        CHECK(e[n] == mpq_class(1, factorial));
    }

    FormalPowerSeries log_geom(20);
    for (std::size_t n = 1; n <= 20; ++n)
        log_geom.set(n, mpq_class(mpz_class(1) << static_cast<unsigned>(n), n));
    const FormalPowerSeries g = series_exp(log_geom);
    CHECK(g == series_inverse(FormalPowerSeries(std::vector<mpq_class>(
                   {1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}))));
    CHECK_THROWS_AS(series_exp(FormalPowerSeries{1, 1}), InvalidArgument);
}

TEST_CASE("zeta of the doubling map and tent map")
{
    const std::size_t d = 40;
    CHECK(zeta_from_fixed_points(powers_of_two(d, -1), d) == rational_series({1, -1}, {1, -2}, d));
    CHECK(zeta_from_fixed_points(powers_of_two(d, 0), d) == rational_series({1}, {1, -2}, d));
    CHECK(zeta_from_fixed_points(CountSequence(d), d) == FormalPowerSeries::one(d));
    CHECK_THROWS_AS(zeta_from_fixed_points(CountSequence(3), 4), HorizonTooSmall);
}

TEST_CASE("zeta from orbits")
{
    const std::size_t d = 30;
    CountSequence single(d);
    single.set(1, 1);
    CHECK(zeta_from_orbits(single, d) == rational_series({1}, {1, -1}, d));
    CHECK(zeta_from_orbits(CountSequence(d), d) == FormalPowerSeries::one(d));

    std::vector<mpz_class> necklaces;
    for (unsigned n = 1; n <= 12; ++n)
        necklaces.emplace_back(static_cast<unsigned long>(testing::primitive_necklaces(2, n)));
    CHECK(zeta_from_orbits(CountSequence(necklaces), 12) == rational_series({1}, {1, -2}, 12));
    CHECK_THROWS_AS(zeta_from_orbits(CountSequence(3), 4), HorizonTooSmall);
}

TEST_CASE("exp and product forms agree")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> deg(1, 40);
        const std::size_t d = deg(rng);
        const CountSequence orbits = testing::random_sequence(rng, d, 50);
        REQUIRE(zeta_from_orbits(orbits, d) ==
                zeta_from_fixed_points(fixed_points_from_orbits(orbits), d));
    }
}

TEST_CASE("log-derivative inverts the exp form")
{
    CHECK(log_derivative_counts(rational_series({1}, {1, -2}, 20)) == powers_of_two(20, 0));
    CHECK(log_derivative_counts(FormalPowerSeries::one(10)) == CountSequence(10));
    CHECK(log_derivative_counts(two_root_series(25)) == powers_of_two(25, 1));
    CHECK_THROWS_AS(log_derivative_counts(FormalPowerSeries{2, 1}), InvalidArgument);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const CountSequence f = fixed_points_from_orbits(testing::random_sequence(rng, 30, 1000));
        REQUIRE(log_derivative_counts(zeta_from_fixed_points(f, 30)) == f);
    }
}

TEST_CASE("theta and the pentagonal numbers")
{
    const std::size_t d = 400;
    const FormalPowerSeries theta = theta_series(d);
    CHECK(theta[0] == 1);
    const FormalPowerSeries inv = series_inverse(theta);
    CHECK(inv.truncated(7) == FormalPowerSeries{1, -1, -1, 0, 0, 1, 0, 1});

    // Brute-force product expansion as the oracle.
    CHECK(inv == euler_product(d));
    CHECK(theta * euler_product(d) == FormalPowerSeries::one(d));

    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k <= 40; ++k)
        if (inv[k] != 0)
            nonzero.push_back(k);
    CHECK(nonzero == std::vector<std::size_t>{0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40});

    const auto terms = pentagonal_terms(d);
    std::vector<int> expected(d + 1, 0);
    for (auto [k, sign] : terms)
        expected[k] = sign;
    for (std::size_t k = 0; k <= d; ++k)
        REQUIRE(inv[k] == expected[k]);
}

TEST_CASE("phi series")
{
    const FormalPowerSeries phi = phi_series(60);
    CHECK(phi[9] == 6);
    CHECK(phi[7] == 0);
    CHECK(phi[4] == 0);
    CHECK(phi[15] == 3 * 2 + 5 * 4);
    for (std::size_t n = 1; n <= 60; ++n) {
        const bool vanishes = n % 2 == 0 || is_prime(n) || n == 1;
        CHECK_MESSAGE((phi[n] == 0) == vanishes, "n = " << n);
    }
}

TEST_CASE("reprise fixed points split into rational parts plus phi")
{
    const std::size_t d = 60;
    const CountSequence fs = reprise_fixed_points(d);
    // z/(1-z) + 4z^2/(1-4z^2) + (6z^3 - 4z^5)/(1-2z^2)^2 + phi(z)
    FormalPowerSeries rhs = rational_series({0, 1}, {1, -1}, d);
    const FormalPowerSeries second = rational_series({0, 0, 4}, {1, 0, -4}, d);
    const FormalPowerSeries third = rational_series({0, 0, 0, 6, 0, -4}, {1, 0, -4, 0, 4}, d);
    const FormalPowerSeries phi = phi_series(d);
    for (std::size_t n = 1; n <= d; ++n)
        CHECK(fs[n] == rhs[n] + second[n] + third[n] + phi[n]);
}

TEST_CASE("c sequence")
{
    const AuxiliarySequence c = c_sequence(2000);
    CHECK(c[1] == 0);
    CHECK(c[2] == 0);
    CHECK(c[3] == 0);
    CHECK(c[5] == 0);
    CHECK(c[4] == 4);
    CHECK(c[8] == 12);
    CHECK(c[6] == 6); // c_6 = 0 mod 2 and mod 3, in [6, 12)
    CHECK(!first_c_violation(c).has_value());

    // The checker does catch a tampered value.
    auto values = c.values();
    values[8 - 1] = 8;
    CHECK(first_c_violation(AuxiliarySequence(values)) == std::optional<std::size_t>(8));
    CHECK_THROWS_AS(c_sequence(0), InvalidArgument);
}

TEST_CASE("natural boundary sequences")
{
    const auto [a, b] = natural_boundary_sequences(8);
    CHECK(a[8] == 30);
    CHECK(b[4] == 19);
    CHECK(a[4] == 3);
    for (std::size_t n : {2, 3, 5, 7})
        CHECK(b[n] == a[n]);

    const AuxiliarySequence c = c_sequence(500);
    for (std::size_t n = 1; n <= 500; ++n)
        REQUIRE(mpz_divisible_ui_p(mobius_power_sum(n, &c).get_mpz_t(), n));
}

TEST_CASE("natural boundary bounds and hypotheses")
{
    const auto [a, b] = natural_boundary_sequences(128);
    for (std::size_t n = 6; n <= 64; ++n) {
        if (is_prime(n))
            continue;
        // (2^n - 2^(n/2+1)) < n a_n < 2^n + 2^(n/2+1), squared to stay exact
        // for odd n: |n a_n - 2^n| < 2^(n/2+1)  <=>  (n a_n - 2^n)^2 < 2^(n+2).
        const mpz_class gap = a[n] * static_cast<unsigned long>(n) -
                              (mpz_class(1) << static_cast<unsigned>(n));
        CHECK(gap * gap < (mpz_class(1) << static_cast<unsigned>(n + 2)));
        CHECK(b[n] - a[n] < (mpz_class(1) << static_cast<unsigned>(n + 1)));
    }
    for (std::size_t n = 6; n <= 64; ++n)
        CHECK(a[2 * n] > b[n]);

    const BehaviorDecomposition d = decompose(a, b.resized(64), 2);
    CHECK(big_system_counts(d) == a.resized(64));
    CHECK(quotient_counts(d) == b.resized(64));
}

TEST_CASE("doubling identity")
{
    CHECK(doubling_zeta_identity_check(powers_of_two(30, 0), 30));
    CHECK(zeta_from_fixed_points(doubled_fixed_points(powers_of_two(30, 0)), 30) ==
          rational_series({1}, {1, 0, -4}, 30));
    CHECK(doubling_zeta_identity_check(CountSequence(10), 10));

    const CountSequence fs = reprise_fixed_points(40);
    CHECK(doubling_zeta_identity_check(fs, 40));
    CHECK(zeta_from_fixed_points(doubled_fixed_points(fs), 40) ==
          rational_series({1}, {1, 0, -5, 0, 4}, 40));
    CHECK_NOTHROW(orbits_from_fixed_points(reprise_fixed_points(30)));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const CountSequence f = fixed_points_from_orbits(testing::random_sequence(rng, 40, 20));
        REQUIRE(doubling_zeta_identity_check(f, 40));
    }
}

TEST_CASE("berlekamp-massey")
{
    std::vector<mpq_class> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    const auto c = berlekamp_massey(fib);
    REQUIRE(c.size() == 3);
    CHECK(c[1] == -1);
    CHECK(c[2] == -1);

    std::vector<std::size_t> profile;
    berlekamp_massey(std::vector<mpq_class>{0, 0, 0, 1}, &profile);
    CHECK(profile == std::vector<std::size_t>{0, 0, 0, 4});
}

TEST_CASE("rationality probe")
{
    const auto geometric = rationality_probe(rational_series({1}, {1, -2}, 60), 0.5, 10);
    CHECK(geometric.verdict == Verdict::recurrence_found);
    CHECK(geometric.order == 1);
    REQUIRE(geometric.recurrence.size() == 1);
    CHECK(geometric.recurrence[0] == 2);

    const auto two_roots = rationality_probe(two_root_series(60), 0.5, 10);
    CHECK(two_roots.verdict == Verdict::recurrence_found);
    CHECK(two_roots.order == 2);
    CHECK(two_roots.recurrence == std::vector<mpq_class>{3, -2});
    CHECK(recurrence_reproduces(two_root_series(60), two_roots.recurrence));

    const FormalPowerSeries irrational = theta_series(200) * rational_series({1}, {1, -2}, 200);
    const auto report = rationality_probe(irrational, 0.5, 40);
    CHECK(report.verdict == Verdict::no_short_recurrence);
    CHECK(report.recurrence.empty());
    REQUIRE(report.linear_complexity_profile.size() == 201);
    CHECK(report.linear_complexity_profile.back() > 40);

    CHECK_THROWS_AS(rationality_probe(FormalPowerSeries::one(10), 0.5, 6), TooFewCoefficients);
    CHECK_THROWS_AS(rationality_probe(FormalPowerSeries::one(10), 0.0, 2), InvalidArgument);
}

TEST_CASE("a recurrence that only fits the fit window is rejected")
{
    // 1, 2, 4, ..., 2^29 followed by a break: fits order 1 on the first half only.
    FormalPowerSeries s(59);
    for (std::size_t n = 0; n <= 59; ++n)
        s.set(n, mpq_class(mpz_class(1) << static_cast<unsigned>(n)));
    s.set(45, 7);
    const auto report = rationality_probe(s, 0.5, 10);
    CHECK(report.verdict == Verdict::no_short_recurrence);
}
