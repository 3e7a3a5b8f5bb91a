#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "halving/combinatorics.hpp"
#include "halving/orbit_arith.hpp"

namespace halving::testing {

/// Number of prime factors with multiplicity, or -1 if a square divides n,
/// by naive trial division over all candidates.
inline int naive_mobius(std::uint64_t n)
{
    int count = 0;
    for (std::uint64_t d = 2; d <= n; ++d) {
        if (n % d != 0)
            continue;
        n /= d;
        if (n % d == 0)
            return 0;
        ++count;
    }
    return count % 2 == 0 ? 1 : -1;
}

inline std::uint64_t naive_sigma(std::uint64_t n)
{
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            total += d;
    return total;
}

/// Orbits of length n of the full shift on `alphabet` symbols: enumerates
/// all words of length n, keeps those of least period n and divides by the
/// n rotations.
inline std::uint64_t primitive_necklaces(unsigned alphabet, unsigned n)
{
    std::uint64_t words = 1;
    for (unsigned i = 0; i < n; ++i)
        words *= alphabet;
    std::uint64_t primitive = 0;
    std::vector<unsigned> w(n);
    for (std::uint64_t code = 0; code < words; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i) {
            w[i] = c % alphabet;
            c /= alphabet;
        }
        bool is_primitive = true;
        for (unsigned p = 1; p < n && is_primitive; ++p) {
            if (n % p != 0)
                continue;
            bool periodic = true;
            for (unsigned i = 0; i < n && periodic; ++i)
                periodic = w[i] == w[(i + p) % n];
            if (periodic)
                is_primitive = false;
        }
        if (is_primitive)
            ++primitive;
    }
    return primitive / n;
}

/// Points x = k/(2^n - 1) of the circle with 2^n x == x mod 1, counted by
/// iterating the doubling map on numerators.
inline std::uint64_t doubling_map_periodic_points(unsigned n)
{
    const std::uint64_t den = (std::uint64_t{1} << n) - 1;
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < den; ++k) {
        std::uint64_t x = k;
        for (unsigned i = 0; i < n; ++i)
            x = (2 * x) % den;
        if (x == k)
            ++count;
    }
    return count;
}

inline CountSequence random_sequence(std::mt19937_64& rng, std::size_t horizon,
                                     std::uint64_t max_value)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, max_value);
    std::vector<mpz_class> v;
    for (std::size_t i = 0; i < horizon; ++i)
        v.emplace_back(static_cast<unsigned long>(dist(rng)));
    return CountSequence(std::move(v));
}

/// Random decomposition with s_1 >= 1.
inline BehaviorDecomposition random_decomposition(std::mt19937_64& rng, std::size_t max_horizon,
                                                  std::uint64_t max_entry)
{
    std::uniform_int_distribution<std::size_t> horizon_dist(1, max_horizon);
    const std::size_t horizon = horizon_dist(rng);
    CountSequence s = random_sequence(rng, horizon, max_entry);
    if (s[1] == 0) {
        std::uniform_int_distribution<std::uint64_t> dist(1, std::max<std::uint64_t>(1, max_entry));
        s.set(1, static_cast<unsigned long>(dist(rng)));
    }
    return {std::move(s), random_sequence(rng, horizon, max_entry),
            random_sequence(rng, horizon, max_entry)};
}

/// Random exact-rational growth parameters drawn from the three admissible
/// regimes, lambda in (1, 3].
struct GrowthParams {
    mpq_class lambda, eta, c;
};

inline GrowthParams random_growth_params(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> lam_num(1, 16);
    mpq_class lambda(8 + lam_num(rng), 8);
    lambda.canonicalize();
    std::uniform_int_distribution<int> regime(0, 2);
    std::uniform_int_distribution<int> small(1, 8);
    GrowthParams p{lambda, lambda, 1};
    switch (regime(rng)) {
    case 0: // eta = lambda, c >= 1/2
        p.c = mpq_class(3 + small(rng), 8);
        break;
    case 1: { // lambda < eta < lambda^2
        mpq_class t(small(rng), 10);
        t.canonicalize();
        p.eta = lambda + t * (lambda * lambda - lambda);
        p.c = mpq_class(small(rng), 4);
        break;
    }
    default: // eta = lambda^2, 0 < c <= 1
        p.eta = lambda * lambda;
        p.c = mpq_class(small(rng), 8);
        break;
    }
    p.c.canonicalize();
    return p;
}

} // namespace halving::testing
