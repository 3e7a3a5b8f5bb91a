#include "halving/zeta.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "halving/errors.hpp"

namespace halving::zeta {

namespace {

void require_horizon(const CountSequence& seq, std::size_t degree)
{
    if (seq.horizon() < degree)
        throw HorizonTooSmall("sequence horizon " + std::to_string(seq.horizon()) +
                              " is below degree " + std::to_string(degree));
}

mpz_class pow2(std::size_t e)
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

// Solves x == r1 (mod m1), x == r2 (mod m2) for coprime moduli.
std::pair<std::uint64_t, std::uint64_t> crt_step(std::uint64_t r1, std::uint64_t m1,
                                                 std::uint64_t r2, std::uint64_t m2)
{
    if (std::gcd(m1, m2) != 1)
        throw InternalError("NoSolution", "CRT moduli " + std::to_string(m1) + " and " +
                                              std::to_string(m2) + " are not coprime");
    mpz_class inv;
    const mpz_class zm1(static_cast<unsigned long>(m1)), zm2(static_cast<unsigned long>(m2));
    mpz_invert(inv.get_mpz_t(), zm1.get_mpz_t(), zm2.get_mpz_t());
    // x = r1 + m1 * ((r2 - r1) * m1^-1 mod m2)
    mpz_class t = (mpz_class(static_cast<unsigned long>(r2)) -
                   mpz_class(static_cast<unsigned long>(r1))) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), zm2.get_mpz_t());
    const mpz_class x = mpz_class(static_cast<unsigned long>(r1)) + zm1 * t;
    return {x.get_ui(), m1 * m2};
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
    std::uint64_t out = 1;
    while (e-- > 0)
        out *= base;
    return out;
}

} // namespace

FormalPowerSeries zeta_from_fixed_points(const CountSequence& fixed, std::size_t degree)
{
    require_horizon(fixed, degree);
    FormalPowerSeries exponent(degree);
    for (std::size_t n = 1; n <= degree; ++n)
        exponent.set(n, mpq_class(fixed[n], static_cast<unsigned long>(n)));
    return series_exp(exponent);
}

FormalPowerSeries zeta_from_orbits(const CountSequence& orbits, std::size_t degree)
{
    require_horizon(orbits, degree);
    std::vector<mpz_class> acc(degree + 1, mpz_class(0));
    acc[0] = 1;
    for (std::size_t n = 1; n <= degree; ++n) {
        const mpz_class& m = orbits[n];
        if (m == 0)
            continue;
        // (1 - z^n)^(-m) = sum_j C(m + j - 1, j) z^(nj)
        std::vector<mpz_class> factor;
        factor.reserve(degree / n + 1);
        mpz_class binom = 1;
        for (std::size_t j = 0; j * n <= degree; ++j) {
            if (j > 0) {
                binom *= m + static_cast<unsigned long>(j - 1);
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
            }
            factor.push_back(binom);
        }
        std::vector<mpz_class> next(degree + 1, mpz_class(0));
        for (std::size_t i = 0; i <= degree; ++i) {
            if (acc[i] == 0)
                continue;
            for (std::size_t j = 0; i + j * n <= degree; ++j)
                mpz_addmul(next[i + j * n].get_mpz_t(), acc[i].get_mpz_t(),
                           factor[j].get_mpz_t());
        }
        acc = std::move(next);
    }
    std::vector<mpq_class> coeffs(acc.begin(), acc.end());
    return FormalPowerSeries(std::move(coeffs));
}

CountSequence log_derivative_counts(const FormalPowerSeries& zeta)
{
    const auto coeffs = log_derivative(zeta);
    CountSequence out(zeta.degree());
    for (std::size_t n = 1; n <= zeta.degree(); ++n) {
        const mpq_class& v = coeffs[n];
        if (mpz_cmp_ui(v.get_den_mpz_t(), 1) != 0 || sgn(v) < 0)
            throw InvalidArgument("log-derivative coefficient " + v.get_str() + " at n=" +
                                  std::to_string(n) + " is not a count");
        out.set(n, v.get_num());
    }
    return out;
}

FormalPowerSeries theta_series(std::size_t degree)
{
    FormalPowerSeries exponent(degree);
    for (std::size_t n = 1; n <= degree; ++n)
        exponent.set(n, mpq_class(sigma(n), static_cast<unsigned long>(n)));
    return series_exp(exponent);
}

FormalPowerSeries euler_product(std::size_t degree)
{
    std::vector<mpz_class> acc(degree + 1, mpz_class(0));
    acc[0] = 1;
    for (std::size_t n = 1; n <= degree; ++n) {
        // multiply by (1 - z^n) in place, high degrees first
        for (std::size_t k = degree; k >= n; --k)
            acc[k] -= acc[k - n];
    }
    std::vector<mpq_class> coeffs(acc.begin(), acc.end());
    return FormalPowerSeries(std::move(coeffs));
}

std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t limit)
{
    std::vector<std::pair<std::size_t, int>> out{{0, 1}};
    for (std::size_t k = 1;; ++k) {
        const std::size_t minus = (3 * k * k - k) / 2;
        const std::size_t plus = (3 * k * k + k) / 2;
        if (minus > limit)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        out.emplace_back(minus, sign);
        if (plus <= limit)
            out.emplace_back(plus, sign);
    }
    return out;
}

FormalPowerSeries phi_series(std::size_t degree)
{
    FormalPowerSeries out(degree);
    for (std::size_t n = 3; n <= degree; n += 2) {
        mpz_class total = 0;
        for (auto d : divisors(n)) {
            if (d == 1 || d == n)
                continue;
            total += pow2((d - 1) / 2) * static_cast<unsigned long>(d);
        }
        out.set(n, mpq_class(total));
    }
    return out;
}

AuxiliarySequence c_sequence(std::size_t horizon)
{
    if (horizon < 1)
        throw InvalidArgument("c_sequence needs a horizon of at least 1");
    std::vector<std::uint64_t> c(horizon, 0);
    for (std::size_t n = 4; n <= horizon; ++n) {
        const auto factors = factorize(n);
        if (factors.size() == 1 && factors.front().second == 1)
            continue;
        std::uint64_t residue = 0, modulus = 1;
        for (auto [p, e] : factors) {
            const std::uint64_t pe = ipow(p, e);
            const std::uint64_t target = c[n / p - 1] % pe;
            std::tie(residue, modulus) = crt_step(residue, modulus, target, pe);
        }
        if (modulus != n)
            throw InternalError("NoSolution", "CRT modulus " + std::to_string(modulus) +
                                                  " differs from n=" + std::to_string(n));
        c[n - 1] = n + residue % n;
    }
    return AuxiliarySequence(std::move(c));
}

std::optional<std::size_t> first_c_violation(const AuxiliarySequence& c)
{
    for (std::size_t n = 1; n <= c.horizon(); ++n) {
        if (n == 1 || is_prime(n)) {
            if (c[n] != 0)
                return n;
            continue;
        }
        if (c[n] < n || c[n] >= 2 * n)
            return n;
        for (std::uint64_t p = 2; p <= n; ++p) {
            if (n % p != 0 || !is_prime(p))
                continue;
            std::uint64_t pe = 1;
            for (std::uint64_t m = n; m % p == 0; m /= p)
                pe *= p;
            if (c[n] % pe != c[n / p] % pe)
                return n;
        }
    }
    return std::nullopt;
}

mpz_class mobius_power_sum(std::size_t n, const AuxiliarySequence* weights)
{
    mpz_class total = 0;
    for (auto d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0)
            continue;
        mpz_class term = pow2(d);
        if (weights != nullptr)
            term *= static_cast<unsigned long>((*weights)[d]);
        if (mu > 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

std::pair<CountSequence, CountSequence> natural_boundary_sequences(std::size_t horizon)
{
    const AuxiliarySequence c = c_sequence(horizon);
    CountSequence a(horizon), b(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) {
        const mpz_class base = mobius_power_sum(n, nullptr);
        const mpz_class extra = mobius_power_sum(n, &c);
        for (auto [p, e] : factorize(n)) {
            const std::uint64_t pe = ipow(p, e);
            if (!mpz_divisible_ui_p(extra.get_mpz_t(), pe))
                throw InternalError("IntegralityFailure",
                                    "p^ord_p(n) = " + std::to_string(pe) +
                                        " does not divide the c-sum at n=" + std::to_string(n));
        }
        if (!mpz_divisible_ui_p(base.get_mpz_t(), n))
            throw InternalError("IntegralityFailure",
                                "necklace sum not divisible at n=" + std::to_string(n));
        if (sgn(extra) < 0 || sgn(base) < 0)
            throw InternalError("NegativityFailure",
                                "negative Möbius sum at n=" + std::to_string(n));
        mpz_class an = base, bn = extra;
        mpz_divexact_ui(an.get_mpz_t(), an.get_mpz_t(), n);
        mpz_divexact_ui(bn.get_mpz_t(), bn.get_mpz_t(), n);
        bn += an;
        a.set(n, std::move(an));
        b.set(n, std::move(bn));
    }
    return {std::move(a), std::move(b)};
}

CountSequence doubled_fixed_points(const CountSequence& fixed_s)
{
    CountSequence out(fixed_s.horizon());
    for (std::size_t n = 2; n <= fixed_s.horizon(); n += 2)
        out.set(n, 2 * fixed_s[n]);
    return out;
}

bool doubling_zeta_identity_check(const CountSequence& fixed_s, std::size_t degree)
{
    const FormalPowerSeries zeta_t = zeta_from_fixed_points(doubled_fixed_points(fixed_s), degree);
    const FormalPowerSeries zeta_s = zeta_from_fixed_points(fixed_s, degree);
    return zeta_t == zeta_s * zeta_s.negated_argument();
}

CountSequence reprise_fixed_points(std::size_t horizon)
{
    CountSequence out(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) {
        if (n % 2 == 0) {
            out.set(n, pow2(n) + 1);
            continue;
        }
        mpz_class total = 0;
        for (auto d : divisors(n))
            total += pow2((d - 1) / 2) * static_cast<unsigned long>(d);
        out.set(n, std::move(total));
    }
    return out;
}

} // namespace halving::zeta
