#include "halving/rationality.hpp"

#include <algorithm>
#include <cmath>

#include "halving/errors.hpp"

namespace halving::zeta {

std::string to_string(Verdict v)
{
    return v == Verdict::recurrence_found ? "recurrence_found" : "no_short_recurrence";
}

std::vector<mpq_class> berlekamp_massey(const std::vector<mpq_class>& seq,
                                        std::vector<std::size_t>* profile)
{
    std::vector<mpq_class> c{mpq_class(1)}, b{mpq_class(1)};
    std::size_t length = 0;
    std::size_t shift = 1;
    mpq_class last_discrepancy = 1;
    if (profile != nullptr)
        profile->clear();

    for (std::size_t n = 0; n < seq.size(); ++n) {
        mpq_class d = seq[n];
        for (std::size_t i = 1; i <= length && i < c.size(); ++i)
            d += c[i] * seq[n - i];

        if (d == 0) {
            ++shift;
        } else {
            const mpq_class coef = d / last_discrepancy;
            std::vector<mpq_class> next = c;
            if (next.size() < b.size() + shift)
                next.resize(b.size() + shift, mpq_class(0));
            for (std::size_t i = 0; i < b.size(); ++i)
                next[i + shift] -= coef * b[i];
            if (2 * length <= n) {
                b = std::move(c);
                length = n + 1 - length;
                last_discrepancy = d;
                shift = 1;
            } else {
                ++shift;
            }
            c = std::move(next);
        }
        if (profile != nullptr)
            profile->push_back(length);
    }
    c.resize(length + 1, mpq_class(0));
    return c;
}

bool recurrence_reproduces(const FormalPowerSeries& series,
                           const std::vector<mpq_class>& recurrence)
{
    const std::size_t order = recurrence.size();
    for (std::size_t n = order; n <= series.degree(); ++n) {
        mpq_class predicted = 0;
        for (std::size_t i = 1; i <= order; ++i)
            predicted += recurrence[i - 1] * series[n - i];
        if (predicted != series[n])
            return false;
    }
    return true;
}

RationalityReport rationality_probe(const FormalPowerSeries& series, double fit_fraction,
                                    std::size_t max_order)
{
    const std::size_t degree = series.degree();
    if (degree < 2 * max_order)
        throw TooFewCoefficients("degree " + std::to_string(degree) +
                                 " is below twice the maximum order " +
                                 std::to_string(max_order));
    if (!(fit_fraction > 0.0 && fit_fraction <= 1.0))
        throw InvalidArgument("fit fraction must lie in (0, 1]");

    const std::vector<mpq_class> all(series.coefficients().begin(), series.coefficients().end());
    const std::size_t fit_count = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::floor(fit_fraction * static_cast<double>(all.size()))), 1,
        all.size());

    RationalityReport report;
    report.max_order = max_order;
    report.fit_degree = fit_count - 1;
    report.validation_degree = degree;
    berlekamp_massey(all, &report.linear_complexity_profile);

    const std::vector<mpq_class> fit_window(all.begin(), all.begin() + fit_count);
    const auto connection = berlekamp_massey(fit_window);
    const std::size_t order = connection.size() - 1;
    if (order > max_order)
        return report;

    std::vector<mpq_class> recurrence(order);
    for (std::size_t i = 1; i <= order; ++i)
        recurrence[i - 1] = -connection[i];
    if (!recurrence_reproduces(series, recurrence))
        return report;

    report.verdict = Verdict::recurrence_found;
    report.recurrence = std::move(recurrence);
    report.order = order;
    return report;
}

} // namespace halving::zeta
