#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "halving/combinatorics.hpp"
#include "halving/orbit_arith.hpp"

namespace halving::sim {

enum class PointKind : std::uint8_t { surviving, glued, halving, infinity };

/// Element of C2 = {e, iota} tagging the two sheets of a glued pair.
enum class GroupElement : std::uint8_t { e, iota };

/// Structural label of a point of the realized system.
///
/// A point of the basic construction is (kind, length, copy, group, phase).
/// `sheets` records the {0,1} coordinate added by each application of
/// double_system, innermost first; it is empty for built systems.
struct Point {
    PointKind kind = PointKind::surviving;
    std::uint64_t length = 1;
    std::uint64_t copy = 1;
    std::optional<GroupElement> group;
    std::uint64_t phase = 0;
    std::vector<std::uint8_t> sheets;

    friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(PointKind kind);
std::string to_string(const Point& p);

/// Points with a permutation T and an involution iota commuting with T.
/// Maps are stored as index vectors into `points()`.
class FiniteSystem {
public:
    /// Validates that T is a bijection, iota an involution, T and iota
    /// commute, and every T-orbit stays in one (kind, length, copy) block.
    /// Throws InvalidArgument otherwise.
    FiniteSystem(std::vector<Point> points, std::vector<std::size_t> t,
                 std::vector<std::size_t> iota);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& point(std::size_t i) const { return points_.at(i); }
    const std::vector<std::size_t>& t() const noexcept { return t_; }
    const std::vector<std::size_t>& iota() const noexcept { return iota_; }
    /// Index of the infinity point, if the system has one.
    std::optional<std::size_t> infinity() const;
    /// Longest T-cycle.
    std::size_t horizon() const noexcept { return horizon_; }

private:
    std::vector<Point> points_;
    std::vector<std::size_t> t_;
    std::vector<std::size_t> iota_;
    std::size_t horizon_ = 0;
};

/// The iota-quotient: classes {x, iota(x)} with the induced map.
struct QuotientSystem {
    /// members[c] lists the one or two points of class c, ascending.
    std::vector<std::vector<std::size_t>> members;
    /// class_of[x] = pi(x).
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> tbar;
    std::size_t horizon = 0;

    std::size_t size() const noexcept { return members.size(); }
};

/// Literal realization of a behaviour decomposition. Throws EmptyFixedPoint
/// when s_1 = 0. The first surviving fixed point becomes infinity.
FiniteSystem build_system(const BehaviorDecomposition& dec);

/// Total points build_system would create, without building.
mpz_class point_count(const BehaviorDecomposition& dec);

/// Cycle lengths of a permutation, counted per length.
CountSequence count_cycles(const std::vector<std::size_t>& perm);
CountSequence count_orbits(const FiniteSystem& sys);
CountSequence count_orbits(const QuotientSystem& q);

/// Classifies each T-cycle by how iota acts on it: pointwise fixed,
/// mapped to itself as the half-turn T^(n/2), or mapped to another cycle.
/// Throws InternalError("InvariantBreach") if none applies.
RawBehavior classify_orbits(const FiniteSystem& sys);

/// Throws InternalError("IllDefined") if pi(T x) depends on the
/// representative.
QuotientSystem quotient(const FiniteSystem& sys);

/// d(x, y) = 0 if x = y; 1/m if y is infinity (x of length m); otherwise
/// 1/min(m, n). Points on different sheets of a doubled system add 1 per
/// differing sheet coordinate.
mpq_class distance(const Point& x, const Point& y);

/// Doubles (Y, S) into Y x {0,1} with T(y,e) = (S y, e+1) and
/// iota(y,e) = (y, e+1).
FiniteSystem double_system(const FiniteSystem& sys);
/// Quotient points are labelled by their smallest member.
FiniteSystem double_system(const QuotientSystem& q, const FiniteSystem& parent);

/// Line-oriented dump: header, one point per line, then the T and iota
/// pair lists.
void write_system(std::ostream& os, const FiniteSystem& sys);
FiniteSystem read_system(std::istream& is);

} // namespace halving::sim
