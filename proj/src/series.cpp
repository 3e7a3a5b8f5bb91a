#include "halving/series.hpp"

#include <algorithm>
#include <string>

#include "halving/errors.hpp"

namespace halving {

namespace {

bool is_integer(const mpq_class& q)
{
    return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

std::vector<mpz_class> numerators(std::span<const mpq_class> coeffs)
{
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.push_back(c.get_num());
    return out;
}

FormalPowerSeries from_integers(std::vector<mpz_class> ints)
{
    std::vector<mpq_class> out;
    out.reserve(ints.size());
    for (auto& v : ints)
        out.emplace_back(std::move(v));
    return FormalPowerSeries(std::move(out));
}

} // namespace

FormalPowerSeries::FormalPowerSeries(std::size_t degree) : coeffs_(degree + 1, mpq_class(0)) {}

FormalPowerSeries::FormalPowerSeries(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw InvalidArgument("a truncated series needs at least the constant term");
    for (auto& c : coeffs_)
        c.canonicalize();
}

FormalPowerSeries::FormalPowerSeries(std::initializer_list<long> coefficients)
    : FormalPowerSeries(std::vector<mpq_class>(coefficients.begin(), coefficients.end()))
{
}

FormalPowerSeries FormalPowerSeries::one(std::size_t degree)
{
    FormalPowerSeries out(degree);
    out.coeffs_[0] = 1;
    return out;
}

void FormalPowerSeries::set(std::size_t k, mpq_class value)
{
    value.canonicalize();
    coeffs_.at(k) = std::move(value);
}

bool FormalPowerSeries::integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

FormalPowerSeries FormalPowerSeries::truncated(std::size_t degree) const
{
    if (degree > this->degree())
        throw InvalidArgument("cannot extend a truncated series from degree " +
                              std::to_string(this->degree()) + " to " + std::to_string(degree));
    return FormalPowerSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

FormalPowerSeries FormalPowerSeries::negated_argument() const
{
    FormalPowerSeries out = *this;
    for (std::size_t k = 1; k < out.coeffs_.size(); k += 2)
        out.coeffs_[k] = -out.coeffs_[k];
    return out;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b)
{
    const std::size_t degree = std::min(a.degree(), b.degree());
    if (a.integral() && b.integral()) {
        const auto x = numerators(a.coefficients());
        const auto y = numerators(b.coefficients());
        std::vector<mpz_class> out(degree + 1, mpz_class(0));
        for (std::size_t i = 0; i <= degree; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= degree; ++j)
                mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
        return from_integers(std::move(out));
    }
    FormalPowerSeries out(degree);
    for (std::size_t n = 0; n <= degree; ++n) {
        mpq_class total = 0;
        for (std::size_t i = 0; i <= n; ++i)
            total += a[i] * b[n - i];
        out.set(n, std::move(total));
    }
    return out;
}

FormalPowerSeries series_inverse(const FormalPowerSeries& f)
{
    if (f[0] == 0)
        throw InvalidArgument("series with zero constant term has no inverse");
    const std::size_t degree = f.degree();
    if (f.integral() && (f[0] == 1 || f[0] == -1)) {
        const auto x = numerators(f.coefficients());
        const bool negative = x[0] < 0;
        std::vector<mpz_class> out(degree + 1);
        out[0] = x[0];
        for (std::size_t n = 1; n <= degree; ++n) {
            mpz_class total = 0;
            for (std::size_t k = 1; k <= n; ++k)
                mpz_addmul(total.get_mpz_t(), x[k].get_mpz_t(), out[n - k].get_mpz_t());
            out[n] = negative ? mpz_class(total) : mpz_class(-total);
        }
        return from_integers(std::move(out));
    }
    FormalPowerSeries out(degree);
    const mpq_class lead_inv = 1 / f[0];
    out.set(0, lead_inv);
    for (std::size_t n = 1; n <= degree; ++n) {
        mpq_class total = 0;
        for (std::size_t k = 1; k <= n; ++k)
            total += f[k] * out[n - k];
        out.set(n, -total * lead_inv);
    }
    return out;
}

FormalPowerSeries series_exp(const FormalPowerSeries& f)
{
    if (f[0] != 0)
        throw InvalidArgument("exp needs a series with zero constant term");
    const std::size_t degree = f.degree();

    // weights[k] = k f_k; c_n = (1/n) sum weights[k] c_{n-k}.
    std::vector<mpq_class> weights(degree + 1);
    for (std::size_t k = 1; k <= degree; ++k)
        weights[k] = f[k] * static_cast<unsigned long>(k);
    const bool integral_weights =
        std::all_of(weights.begin() + 1, weights.end(), is_integer);

    std::vector<mpq_class> c(degree + 1);
    c[0] = 1;
    bool integral_so_far = true;
    for (std::size_t n = 1; n <= degree; ++n) {
        if (integral_weights && integral_so_far) {
            mpz_class total = 0;
            for (std::size_t k = 1; k <= n; ++k)
                mpz_addmul(total.get_mpz_t(), weights[k].get_num_mpz_t(),
                           c[n - k].get_num_mpz_t());
            c[n] = mpq_class(total, static_cast<unsigned long>(n));
            c[n].canonicalize();
            integral_so_far = is_integer(c[n]);
        } else {
            mpq_class total = 0;
            for (std::size_t k = 1; k <= n; ++k)
                total += weights[k] * c[n - k];
            c[n] = total / static_cast<unsigned long>(n);
        }
    }
    return FormalPowerSeries(std::move(c));
}

std::vector<mpq_class> log_derivative(const FormalPowerSeries& f)
{
    if (f[0] != 1)
        throw InvalidArgument("log-derivative needs constant term 1");
    const std::size_t degree = f.degree();
    // n f_n = sum_{k=1..n} L_k f_{n-k}, solved for L_n.
    std::vector<mpq_class> out(degree + 1, mpq_class(0));
    for (std::size_t n = 1; n <= degree; ++n) {
        mpq_class value = f[n] * static_cast<unsigned long>(n);
        for (std::size_t k = 1; k < n; ++k)
            value -= out[k] * f[n - k];
        out[n] = value;
    }
    return out;
}

FormalPowerSeries rational_series(const std::vector<long>& numerator,
                                  const std::vector<long>& denominator, std::size_t degree)
{
    FormalPowerSeries num(degree), den(degree);
    for (std::size_t k = 0; k < numerator.size() && k <= degree; ++k)
        num.set(k, numerator[k]);
    for (std::size_t k = 0; k < denominator.size() && k <= degree; ++k)
        den.set(k, denominator[k]);
    return num * series_inverse(den);
}

} // namespace halving
