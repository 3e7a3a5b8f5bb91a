#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "halving/orbit_arith.hpp"
#include "halving/series.hpp"

namespace halving::zeta {

/// zeta(z) = exp(sum F(n) z^n / n) to degree D. Needs F.horizon() >= D.
FormalPowerSeries zeta_from_fixed_points(const CountSequence& fixed, std::size_t degree);

/// zeta(z) = prod (1 - z^n)^(-O(n)) to degree D. Needs O.horizon() >= D.
FormalPowerSeries zeta_from_orbits(const CountSequence& orbits, std::size_t degree);

/// Recovers F(1..D) from z zeta'/zeta. Throws InvalidArgument unless the
/// constant term is 1 and every recovered value is a non-negative integer.
CountSequence log_derivative_counts(const FormalPowerSeries& zeta);

/// theta(z) = exp(sum sigma(n) z^n / n).
FormalPowerSeries theta_series(std::size_t degree);

/// prod_{n=1..D} (1 - z^n), expanded factor by factor.
FormalPowerSeries euler_product(std::size_t degree);

/// Generalized pentagonal numbers (3k^2 -+ k)/2 up to `limit`, paired with
/// their sign (-1)^k, ascending.
std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t limit);

/// phi(z) = sum_n z^(2n+1) sum_{d | 2n+1, 1 < d < 2n+1} d 2^((d-1)/2).
FormalPowerSeries phi_series(std::size_t degree);

/// Auxiliary sequence c_1..c_N: zero at 1 and at primes; for composite n the
/// unique value in [n, 2n) congruent to c_{n/p} mod p^ord_p(n) for every
/// prime p | n.
class AuxiliarySequence {
public:
    explicit AuxiliarySequence(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

    std::size_t horizon() const noexcept { return values_.size(); }
    std::uint64_t operator[](std::size_t n) const { return values_.at(n - 1); }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

private:
    std::vector<std::uint64_t> values_;
};

AuxiliarySequence c_sequence(std::size_t horizon);

/// First n <= horizon where the sequence breaks its defining conditions,
/// checked directly from the definition (no CRT).
std::optional<std::size_t> first_c_violation(const AuxiliarySequence& c);

/// sum_{d | n} mu(n/d) weight(d) 2^d, the raw Möbius sum behind both
/// natural-boundary sequences.
mpz_class mobius_power_sum(std::size_t n, const AuxiliarySequence* weights);

/// a_n = (1/n) sum mu(n/d) 2^d and
/// b_n = a_n + (1/n) sum mu(n/d) c_d 2^d, with integrality and positivity
/// re-checked at runtime (InternalError on failure).
std::pair<CountSequence, CountSequence> natural_boundary_sequences(std::size_t horizon);

/// F_T for the doubled system: 0 at odd n, 2 F_S(n) at even n.
CountSequence doubled_fixed_points(const CountSequence& fixed_s);

/// Compares exp-form zeta of the doubled counts with zeta_S(z) zeta_S(-z).
bool doubling_zeta_identity_check(const CountSequence& fixed_s, std::size_t degree);

/// F_S(n) = 2^n + 1 for even n and sum_{d | n} d 2^((d-1)/2) for odd n.
CountSequence reprise_fixed_points(std::size_t horizon);

} // namespace halving::zeta
