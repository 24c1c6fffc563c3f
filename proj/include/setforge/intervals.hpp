#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "setforge/errors.hpp"

namespace setforge {

using rational = boost::multiprecision::cpp_rational;

/// A rational extended with -inf / +inf, for open interval endpoints.
class ExtReal {
public:
  ExtReal(rational value) : sign_(0), value_(std::move(value)) {}
  ExtReal(int value) : ExtReal(rational(value)) {}

  static ExtReal neg_inf() { return ExtReal(infinite_tag{}, -1); }
  static ExtReal pos_inf() { return ExtReal(infinite_tag{}, +1); }

  bool is_finite() const noexcept { return sign_ == 0; }
  bool is_neg_inf() const noexcept { return sign_ < 0; }
  bool is_pos_inf() const noexcept { return sign_ > 0; }

  /// Only valid when finite.
  const rational& value() const { return value_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.sign_ == b.sign_ && (a.sign_ != 0 || a.value_ == b.value_);
  }

  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ != 0) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  struct infinite_tag {};
  ExtReal(infinite_tag, int sign) : sign_(static_cast<signed char>(sign)) {}

  signed char sign_;  // -1, 0 (finite), +1
  rational value_;    // meaningful only when sign_ == 0
};

/// Open interval (lo, hi); IntervalSet maintains lo < hi.
struct Interval {
  ExtReal lo;
  ExtReal hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical form of the interval algebra over the rationals: a finite
/// point set P plus disjoint open intervals, with
///   - points sorted strictly ascending, intervals sorted by lo,
///   - no point inside an interval,
///   - no two intervals sharing an endpoint that is also a point
///     (that triple splices into one interval).
/// Adjacent intervals (b_i == a_{i+1}) without the bridging point stay
/// separate: (0,1) and (1,2) only fuse when 1 itself is in the set.
/// Equal canonical forms mean equal sets, so == decides set equality.
class IntervalSet {
public:
  IntervalSet() = default;  // the empty set

  /// Canonicalizes arbitrary points/intervals: sorts, merges overlapping
  /// intervals, absorbs interior points, splices across bridging points.
  /// Throws input_error on an interval with lo >= hi.
  static IntervalSet normalized(std::vector<rational> points,
                                std::vector<Interval> intervals);

  static IntervalSet empty() { return {}; }
  static IntervalSet reals();
  static IntervalSet open(ExtReal lo, ExtReal hi);
  static IntervalSet point(rational x);

  const std::vector<rational>& points() const noexcept { return points_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool is_empty() const noexcept { return points_.empty() && intervals_.empty(); }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet complement() const;

  bool contains(const rational& x) const;

  /// Cheap upper bound on the construction steps needed from single
  /// intervals: max(#intervals, #points + 2). Not claimed tight.
  int construction_bound() const;

  /// Whether the set is reachable from bounded generators alone: no
  /// intervals, or the leading lo and trailing hi both finite or both
  /// infinite.
  bool bounded_variant_ok() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  /// Set difference with a finite point set (points not in the set are
  /// ignored): removes listed points, splitting intervals they sit inside.
  IntervalSet without_points(const std::vector<rational>& cut) const;

  std::vector<rational> points_;
  std::vector<Interval> intervals_;
};

}  // namespace setforge
