#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace halving {

/// Dense 1-indexed sequence of non-negative integers x_1..x_N.
///
/// Used for closed-orbit counts O(n), periodic-point counts F(n) and the
/// a_n / b_n pair of a halving. Which of these a given instance holds is up
/// to the caller.
class CountSequence {
public:
    CountSequence() = default;
    explicit CountSequence(std::size_t horizon);
    explicit CountSequence(std::vector<mpz_class> values);
    CountSequence(std::initializer_list<long> values);

    std::size_t horizon() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 1-indexed access; throws InvalidArgument outside [1, horizon].
    const mpz_class& operator[](std::size_t n) const;
    void set(std::size_t n, mpz_class value);

    /// Entry n, or zero when n lies past the horizon.
    mpz_class value_or_zero(std::size_t n) const;

    /// Truncates or zero-pads to the given horizon.
    CountSequence resized(std::size_t horizon) const;

    std::span<const mpz_class> values() const noexcept { return values_; }

    friend bool operator==(const CountSequence&, const CountSequence&) = default;

private:
    std::vector<mpz_class> values_;
};

using PrimePower = std::pair<std::uint64_t, unsigned>;

/// Prime factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Exponent of p in n (n >= 1).
unsigned ord_p(std::uint64_t n, std::uint64_t p);

int mobius(std::uint64_t n);
mpz_class sigma(std::uint64_t n);

/// F(n) = sum over d | n of d * O(d); horizon preserved.
CountSequence fixed_points_from_orbits(const CountSequence& orbits);

/// O(n) = (1/n) sum over d | n of mu(n/d) F(d). Throws NotRealizable with
/// the first offending index when a value is negative or non-integral.
CountSequence orbits_from_fixed_points(const CountSequence& fixed);

/// r^m == r^(m/p) (mod p^ord_p(m)). Requires p prime and p | m.
bool euler_congruence_holds(const mpz_class& r, std::uint64_t m, std::uint64_t p);

} // namespace halving
