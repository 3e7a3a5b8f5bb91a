#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace halving {

/// Power series truncated at degree D with exact rational coefficients.
/// Every operation keeps the degree of its (smallest) input; coefficients
/// up to that degree are exact.
class FormalPowerSeries {
public:
    FormalPowerSeries() = default;
    /// Zero series of the given truncation degree.
    explicit FormalPowerSeries(std::size_t degree);
    explicit FormalPowerSeries(std::vector<mpq_class> coefficients);
    FormalPowerSeries(std::initializer_list<long> coefficients);

    static FormalPowerSeries one(std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, mpq_class value);
    std::span<const mpq_class> coefficients() const noexcept { return coeffs_; }

    bool integral() const;
    FormalPowerSeries truncated(std::size_t degree) const;
    /// f(-z).
    FormalPowerSeries negated_argument() const;

    friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

private:
    std::vector<mpq_class> coeffs_{mpq_class(0)};
};

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);

/// 1/f; throws InvalidArgument when f(0) = 0.
FormalPowerSeries series_inverse(const FormalPowerSeries& f);

/// exp(f) via n c_n = sum_{k=1..n} k f_k c_{n-k}. Requires f(0) = 0.
FormalPowerSeries series_exp(const FormalPowerSeries& f);

/// Coefficients of z f'(z)/f(z) for degrees 1..D (index 0 is unused and
/// zero). Requires f(0) = 1.
std::vector<mpq_class> log_derivative(const FormalPowerSeries& f);

/// Power series of p(z)/q(z) from polynomial coefficient lists.
FormalPowerSeries rational_series(const std::vector<long>& numerator,
                                  const std::vector<long>& denominator, std::size_t degree);

} // namespace halving
