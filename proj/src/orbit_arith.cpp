#include "halving/orbit_arith.hpp"

#include <algorithm>
#include <string>

#include "halving/errors.hpp"

namespace halving {

CountSequence::CountSequence(std::size_t horizon) : values_(horizon, mpz_class(0)) {}

CountSequence::CountSequence(std::vector<mpz_class> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (sgn(values_[i]) < 0)
            throw InvalidArgument("negative count " + values_[i].get_str() + " at n=" +
                                  std::to_string(i + 1));
    }
}

CountSequence::CountSequence(std::initializer_list<long> values)
    : CountSequence(std::vector<mpz_class>(values.begin(), values.end()))
{
}

const mpz_class& CountSequence::operator[](std::size_t n) const
{
    if (n == 0 || n > values_.size())
        throw InvalidArgument("index " + std::to_string(n) + " outside horizon " +
                              std::to_string(values_.size()));
    return values_[n - 1];
}

void CountSequence::set(std::size_t n, mpz_class value)
{
    if (n == 0 || n > values_.size())
        throw InvalidArgument("index " + std::to_string(n) + " outside horizon " +
                              std::to_string(values_.size()));
    if (sgn(value) < 0)
        throw InvalidArgument("negative count " + value.get_str() + " at n=" + std::to_string(n));
    values_[n - 1] = std::move(value);
}

mpz_class CountSequence::value_or_zero(std::size_t n) const
{
    if (n == 0 || n > values_.size())
        return 0;
    return values_[n - 1];
}

CountSequence CountSequence::resized(std::size_t horizon) const
{
    CountSequence out(horizon);
    for (std::size_t i = 0; i < std::min(horizon, values_.size()); ++i)
        out.values_[i] = values_[i];
    return out;
}

std::vector<PrimePower> factorize(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("cannot factor 0");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("0 has no finite divisor list");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

unsigned ord_p(std::uint64_t n, std::uint64_t p)
{
    if (n == 0 || p < 2)
        throw InvalidArgument("ord_p needs n >= 1 and p >= 2");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

int mobius(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("mobius(0) is undefined");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

mpz_class sigma(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("sigma(0) is undefined");
    mpz_class total = 0;
    for (auto d : divisors(n))
        total += d;
    return total;
}

CountSequence fixed_points_from_orbits(const CountSequence& orbits)
{
    const std::size_t horizon = orbits.horizon();
    std::vector<mpz_class> fixed(horizon, mpz_class(0));
    // Sieve over multiples: every orbit of length d contributes d points to F(kd).
    for (std::size_t d = 1; d <= horizon; ++d) {
        const mpz_class contribution = orbits[d] * static_cast<unsigned long>(d);
        if (contribution == 0)
            continue;
        for (std::size_t n = d; n <= horizon; n += d)
            fixed[n - 1] += contribution;
    }
    return CountSequence(std::move(fixed));
}

CountSequence orbits_from_fixed_points(const CountSequence& fixed)
{
    const std::size_t horizon = fixed.horizon();
    std::vector<mpz_class> orbits(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) {
        mpz_class total = 0;
        for (auto d : divisors(n)) {
            switch (mobius(n / d)) {
            case 1: total += fixed[d]; break;
            case -1: total -= fixed[d]; break;
            default: break;
            }
        }
        if (sgn(total) < 0)
            throw NotRealizable(n, "negative sum " + total.get_str());
        if (!mpz_divisible_ui_p(total.get_mpz_t(), n))
            throw NotRealizable(n, "sum " + total.get_str() + " not divisible by " +
                                       std::to_string(n));
        mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), n);
        orbits[n - 1] = std::move(total);
    }
    return CountSequence(std::move(orbits));
}

bool euler_congruence_holds(const mpz_class& r, std::uint64_t m, std::uint64_t p)
{
    if (m == 0 || !is_prime(p))
        throw InvalidArgument("euler congruence needs m >= 1 and p prime");
    if (m % p != 0)
        throw InvalidArgument(std::to_string(p) + " does not divide " + std::to_string(m));
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), p, ord_p(m, p));
    mpz_class lhs, rhs;
    mpz_powm_ui(lhs.get_mpz_t(), r.get_mpz_t(), m, modulus.get_mpz_t());
    mpz_powm_ui(rhs.get_mpz_t(), r.get_mpz_t(), m / p, modulus.get_mpz_t());
    return lhs == rhs;
}

} // namespace halving
