#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "halving/series.hpp"

namespace halving::zeta {

enum class Verdict { recurrence_found, no_short_recurrence };

std::string to_string(Verdict v);

/// Outcome of a finite-horizon linear recurrence search. This is evidence,
/// not proof: `no_short_recurrence` only says that no recurrence of order
/// <= max_order fits the supplied coefficients.
struct RationalityReport {
    Verdict verdict = Verdict::no_short_recurrence;
    /// r_1..r_L with a_n = sum r_i a_{n-i}; empty unless a recurrence was found.
    std::vector<mpq_class> recurrence;
    std::size_t order = 0;
    std::size_t max_order = 0;
    /// Last degree used to fit, last degree checked against the recurrence.
    std::size_t fit_degree = 0;
    std::size_t validation_degree = 0;
    /// profile[k] = length of the shortest recurrence generating the first
    /// k+1 coefficients.
    std::vector<std::size_t> linear_complexity_profile;
};

/// Berlekamp–Massey over the rationals. Returns the connection polynomial
/// C (C[0] = 1, sum_i C[i] s_{n-i} = 0 for n >= L) and fills `profile`.
std::vector<mpq_class> berlekamp_massey(const std::vector<mpq_class>& seq,
                                        std::vector<std::size_t>* profile = nullptr);

/// Fits the minimal recurrence on the first `fit_fraction` of the
/// coefficients and accepts it only if it reproduces every remaining one.
/// Throws TooFewCoefficients when degree < 2 * max_order.
RationalityReport rationality_probe(const FormalPowerSeries& series, double fit_fraction,
                                    std::size_t max_order);

/// True when `recurrence` regenerates coefficients order..D of `series`.
bool recurrence_reproduces(const FormalPowerSeries& series,
                           const std::vector<mpq_class>& recurrence);

} // namespace halving::zeta
