#include "setforge/intervals.hpp"

#include <algorithm>

namespace setforge {

namespace {

bool interior(const std::vector<Interval>& intervals, const rational& x) {
  const ExtReal v{x};
  auto it = std::lower_bound(intervals.begin(), intervals.end(), v,
                             [](const Interval& iv, const ExtReal& val) { return iv.lo < val; });
  if (it == intervals.begin()) return false;
  const Interval& prev = *std::prev(it);
  return prev.lo < v && v < prev.hi;
}

}  // namespace

IntervalSet IntervalSet::normalized(std::vector<rational> points,
                                    std::vector<Interval> intervals) {
  for (const Interval& iv : intervals)
    if (!(iv.lo < iv.hi)) throw input_error("interval endpoints need lo < hi");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c < 0;
    return a.hi < b.hi;
  });

  // Fuse strictly overlapping intervals. Touching pairs stay apart here:
  // open sets only fuse across a shared endpoint if that point is present.
  std::vector<Interval> merged;
  for (const Interval& iv : intervals) {
    if (!merged.empty() && iv.lo < merged.back().hi) {
      if (merged.back().hi < iv.hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(iv);
    }
  }

  // Splice (a,p) + {p} + (p,b) into (a,b), chaining left to right.
  std::vector<Interval> spliced;
  std::vector<rational> consumed;  // ascending: the walk goes left to right
  for (const Interval& iv : merged) {
    if (!spliced.empty() && spliced.back().hi == iv.lo && iv.lo.is_finite() &&
        std::binary_search(points.begin(), points.end(), iv.lo.value())) {
      consumed.push_back(iv.lo.value());
      spliced.back().hi = iv.hi;
    } else {
      spliced.push_back(iv);
    }
  }

  IntervalSet out;
  for (const rational& p : points) {
    if (std::binary_search(consumed.begin(), consumed.end(), p)) continue;
    if (interior(spliced, p)) continue;  // absorbed
    out.points_.push_back(p);
  }
  out.intervals_ = std::move(spliced);
  return out;
}

IntervalSet IntervalSet::reals() { return open(ExtReal::neg_inf(), ExtReal::pos_inf()); }

IntervalSet IntervalSet::open(ExtReal lo, ExtReal hi) {
  return normalized({}, {Interval{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::point(rational x) { return normalized({std::move(x)}, {}); }

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<rational> pts = points_;
  pts.insert(pts.end(), other.points_.begin(), other.points_.end());
  std::vector<Interval> ivs = intervals_;
  ivs.insert(ivs.end(), other.intervals_.begin(), other.intervals_.end());
  return normalized(std::move(pts), std::move(ivs));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<rational> pts;
  for (const rational& p : points_)
    if (other.contains(p)) pts.push_back(p);
  for (const rational& p : other.points_)
    if (contains(p)) pts.push_back(p);

  // Pairwise interval overlaps by a two-pointer sweep.
  std::vector<Interval> ivs;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    const ExtReal& lo = a.lo < b.lo ? b.lo : a.lo;
    const ExtReal& hi = a.hi < b.hi ? a.hi : b.hi;
    if (lo < hi) ivs.push_back({lo, hi});
    if (a.hi < b.hi) ++i; else ++j;
  }
  return normalized(std::move(pts), std::move(ivs));
}

IntervalSet IntervalSet::complement() const {
  // Complement the interval part: gaps between intervals plus their finite
  // endpoints; then carve this set's own points back out.
  std::vector<rational> pts;
  std::vector<Interval> gaps;
  if (intervals_.empty()) {
    gaps.push_back({ExtReal::neg_inf(), ExtReal::pos_inf()});
  } else {
    for (const Interval& iv : intervals_) {
      if (iv.lo.is_finite()) pts.push_back(iv.lo.value());
      if (iv.hi.is_finite()) pts.push_back(iv.hi.value());
    }
    if (intervals_.front().lo.is_finite())
      gaps.push_back({ExtReal::neg_inf(), intervals_.front().lo});
    for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
      const ExtReal& a = intervals_[i].hi;
      const ExtReal& b = intervals_[i + 1].lo;
      if (a < b) gaps.push_back({a, b});
      // a == b: touching intervals; the shared endpoint is already in pts
    }
    if (intervals_.back().hi.is_finite())
      gaps.push_back({intervals_.back().hi, ExtReal::pos_inf()});
  }
  return normalized(std::move(pts), std::move(gaps)).without_points(points_);
}

IntervalSet IntervalSet::without_points(const std::vector<rational>& cut) const {
  if (cut.empty()) return *this;
  std::vector<rational> kept;
  std::set_difference(points_.begin(), points_.end(), cut.begin(), cut.end(),
                      std::back_inserter(kept));
  std::vector<Interval> ivs;
  for (const Interval& iv : intervals_) {
    ExtReal lo = iv.lo;
    auto first = std::upper_bound(cut.begin(), cut.end(), iv.lo,
                                  [](const ExtReal& v, const rational& p) { return v < ExtReal(p); });
    for (auto it = first; it != cut.end() && ExtReal(*it) < iv.hi; ++it) {
      ivs.push_back({lo, ExtReal(*it)});
      lo = ExtReal(*it);
    }
    ivs.push_back({lo, iv.hi});
  }
  return normalized(std::move(kept), std::move(ivs));
}

bool IntervalSet::contains(const rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x) || interior(intervals_, x);
}

int IntervalSet::construction_bound() const {
  return static_cast<int>(std::max(intervals_.size(), points_.size() + 2));
}

bool IntervalSet::bounded_variant_ok() const {
  if (intervals_.empty()) return true;
  return intervals_.front().lo.is_finite() == intervals_.back().hi.is_finite();
}

}  // namespace setforge
