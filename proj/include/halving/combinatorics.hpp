#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "halving/orbit_arith.hpp"

namespace halving {

/// Per-length split of a halving into surviving orbits, glued pairs and
/// halving orbits, all indexed by the quotient length n.
///
/// `glued[n]` counts pairs, so the big system has 2*glued[n] glued orbits of
/// length n. `halving[n]` counts big-system orbits of length 2n, each of
/// which becomes one quotient orbit of length n. Both conventions make the
/// parity constraints impossible to violate.
struct BehaviorDecomposition {
    CountSequence surviving;
    CountSequence glued;
    CountSequence halving;

    BehaviorDecomposition() = default;
    /// Throws InvalidArgument on unequal horizons.
    BehaviorDecomposition(CountSequence s, CountSequence g, CountSequence h);

    std::size_t horizon() const noexcept { return surviving.horizon(); }
    /// True when s_1 >= 1, the quotient's fixed-point requirement.
    bool has_fixed_point() const;
    BehaviorDecomposition resized(std::size_t horizon) const;

    friend bool operator==(const BehaviorDecomposition&, const BehaviorDecomposition&) = default;
};

/// Big-system orbit counts split by behaviour, in raw form: entry n counts
/// big-system orbits of length n of each kind.
struct RawBehavior {
    CountSequence surviving;
    CountSequence glued;
    CountSequence halving;

    friend bool operator==(const RawBehavior&, const RawBehavior&) = default;
};

/// a_n = s_n + 2 g_n + h_{n/2}, horizon of `dec`.
CountSequence big_system_counts(const BehaviorDecomposition& dec);

/// b_n = s_n + g_n + h_n, horizon of `dec`.
CountSequence quotient_counts(const BehaviorDecomposition& dec);

/// Raw big-system counts; horizon 2N so the halving orbits of length 2N fit.
RawBehavior to_raw(const BehaviorDecomposition& dec);

struct Violation {
    std::string rule;
    std::size_t index = 0;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks that halving orbits have even length and glued orbits come in
/// pairs, given raw big-system counts.
std::vector<Violation> check_constraints(const CountSequence& raw_halving,
                                         const CountSequence& raw_glued);

/// Checks, for n up to b's horizon,
///   F_a(n) <= 2 F_b(n) <= F_a(n) + F_a(2n),
///   b_n <= a_n + a_{2n},
///   2 b_n >= a_n  (n odd).
/// Throws HorizonMismatch unless a reaches twice b's horizon.
std::vector<Violation> check_bounds(const CountSequence& a, const CountSequence& b);

/// Recovers a decomposition realizing the pair (a, b) by the two-branch
/// recursion. Hypotheses are checked up to the available horizon; a must
/// reach at least b's horizon and the result has b's horizon.
BehaviorDecomposition decompose(const CountSequence& a, const CountSequence& b,
                                std::size_t threshold);

/// Parameters of an exponential growth pair a_n = ceil(lambda^n),
/// b_n = ceil(c eta^n) from the threshold on.
class GrowthSpec {
public:
    /// Throws InvalidArgument unless one of the admissible (lambda, eta, c)
    /// regimes holds and c eta^threshold < lambda^(2 threshold).
    GrowthSpec(mpq_class lambda, mpq_class eta, mpq_class c, std::size_t horizon,
               std::size_t threshold);

    const mpq_class& lambda() const noexcept { return lambda_; }
    const mpq_class& eta() const noexcept { return eta_; }
    const mpq_class& c() const noexcept { return c_; }
    std::size_t horizon() const noexcept { return horizon_; }
    std::size_t threshold() const noexcept { return threshold_; }

private:
    mpq_class lambda_, eta_, c_;
    std::size_t horizon_;
    std::size_t threshold_;
};

/// Smallest threshold N >= 2 with c eta^N < lambda^(2N) and
/// 2 c eta^N >= lambda^N. From such a threshold on, growth_sequences always
/// satisfies decompose's hypotheses.
std::size_t admissible_threshold(const mpq_class& lambda, const mpq_class& eta,
                                 const mpq_class& c);

std::pair<CountSequence, CountSequence> growth_sequences(const GrowthSpec& spec);

/// ceil(q^n) for rational q >= 0, exact.
mpz_class ceil_power(const mpq_class& q, std::size_t n);

} // namespace halving
