#pragma once

#include "setforge/family.hpp"
#include "setforge/partition.hpp"

namespace setforge {

/// True iff some member of u contains exactly one of a, b. Elements are
/// 1-based; out-of-range indices throw input_error. a == b is never
/// separable.
bool separable(const Family& u, int a, int b);

/// True iff every pair of distinct elements is separable by u.
bool is_universe_separable(const Family& u);

/// Unseparability classes: a ~ b iff no member splits them. Always an
/// equivalence; the blocks partition the universe.
struct SeparabilityClasses {
  Partition blocks;

  /// The class containing a 1-based element.
  ElementSet class_of(int element) const;
};

SeparabilityClasses equivalence_classes(const Family& u);

/// Intersection of all members containing the element; the full universe
/// if no member does (empty intersection convention).
ElementSet intersection_of_containing(const Family& u, int element);

}  // namespace setforge
