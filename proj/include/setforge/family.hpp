#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "setforge/errors.hpp"

namespace setforge {

/// Subsets of {1..u} are bit masks: element i lives at bit i-1.
using set_mask = std::uint32_t;

inline constexpr int max_universe_size = 32;

/// Default cap on the size of any materialized family.
inline constexpr std::size_t default_max_sets = 1'000'000;

/// The ground set {1, ..., size}. Size 1..32.
class Universe {
public:
  explicit Universe(int size);

  int size() const noexcept { return size_; }

  set_mask full_mask() const noexcept {
    return size_ == 32 ? ~set_mask{0} : (set_mask{1} << size_) - 1u;
  }

  friend bool operator==(Universe, Universe) noexcept = default;

private:
  int size_;
};

/// One subset of a universe. Thin value wrapper over a mask.
class ElementSet {
public:
  ElementSet(Universe universe, set_mask bits);

  /// Builds from 1-based element indices; throws input_error on an index
  /// outside 1..universe.size().
  static ElementSet from_elements(Universe universe, std::span<const int> elements);
  static ElementSet from_elements(Universe universe, std::initializer_list<int> elements);

  Universe universe() const noexcept { return universe_; }
  set_mask bits() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;

  bool contains(int element) const;

  /// Ascending 1-based element indices.
  std::vector<int> elements() const;

  ElementSet complement() const noexcept;

  friend ElementSet operator|(ElementSet a, ElementSet b);
  friend ElementSet operator&(ElementSet a, ElementSet b);
  friend bool operator==(const ElementSet&, const ElementSet&) noexcept = default;

private:
  Universe universe_;
  set_mask bits_;
};

/// A finite family of subsets, kept canonical: masks strictly ascending,
/// so equal families compare equal and every traversal is deterministic.
class Family {
public:
  /// Sorts, deduplicates, validates. Empty input is rejected unless
  /// allow_empty is set (exhaustive enumeration wants the empty family).
  static Family normalized(Universe universe, std::vector<set_mask> masks,
                           bool allow_empty = false);
  static Family normalized(Universe universe, std::span<const ElementSet> sets,
                           bool allow_empty = false);

  /// Trusts the caller: masks must already be strictly ascending.
  static Family from_sorted_unique(Universe universe, std::vector<set_mask> masks);

  Universe universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<set_mask>& masks() const noexcept { return members_; }
  ElementSet member(std::size_t i) const { return {universe_, members_[i]}; }

  bool contains(set_mask m) const;
  bool contains(const ElementSet& s) const;
  bool subset_of(const Family& other) const;

  friend bool operator==(const Family&, const Family&) = default;

private:
  Family(Universe universe, std::vector<set_mask> members)
      : universe_(universe), members_(std::move(members)) {}

  Universe universe_;
  std::vector<set_mask> members_;
};

/// Family sizes along the closure iteration; entries run step 0 (the input)
/// through the first repeated size. fixpoint_index is the least n with
/// |U_n| == |U_{n+1}|, i.e. U_{fixpoint_index} is the generated algebra.
struct StepTraceEntry {
  int step;
  std::size_t family_size;
};

struct StepTrace {
  std::vector<StepTraceEntry> entries;
  int fixpoint_index = 0;
};

/// Step counts are optional: nullopt means "never", the target is not
/// contained in any closure stage.
using StepCount = std::optional<int>;

/// One closure step: all pairwise unions, pairwise intersections, and
/// complements of members. The input family is contained in the result.
/// Throws budget_error if the result would exceed max_sets, input_error on
/// an empty family unless allow_empty (the empty family is its own closure).
Family close_once(const Family& u, std::size_t max_sets = default_max_sets,
                  bool allow_empty = false);

/// n-fold close_once. n = 0 returns the input unchanged.
Family close_n(const Family& u, int n, std::size_t max_sets = default_max_sets,
               bool allow_empty = false);

struct FixpointResult {
  Family family;  // U_infinity, the algebra generated by the input
  StepTrace trace;
};

/// Iterates close_once until the size repeats; by monotonicity equal sizes
/// mean equal families, and the stage reached is closed for good.
FixpointResult close_fixpoint(const Family& u, std::size_t max_sets = default_max_sets,
                              bool allow_empty = false);

/// True iff f is non-empty and closed under complement and pairwise
/// union/intersection. (Such a family always contains {} and the universe.)
bool is_algebra(const Family& f);

/// Least n with target a subfamily of C_n(start); nullopt if the fixpoint
/// is reached without ever containing target.
StepCount steps_to(const Family& start, const Family& target,
                   std::size_t max_sets = default_max_sets);

}  // namespace setforge
