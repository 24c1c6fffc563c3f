#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "setforge/family.hpp"

namespace setforge {

using big_int = boost::multiprecision::cpp_int;

/// A partition of the universe: non-empty pairwise disjoint blocks covering
/// everything, ordered by least element.
class Partition {
public:
  static Partition from_blocks(Universe universe, std::vector<set_mask> blocks);
  static Partition from_family(const Family& f);

  Universe universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<set_mask>& blocks() const noexcept { return blocks_; }

  /// 0-based index of the block containing a 1-based element.
  std::size_t block_of(int element) const;

  /// The blocks as a canonical Family (mask order, not block order).
  Family as_family() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  Partition(Universe universe, std::vector<set_mask> blocks)
      : universe_(universe), blocks_(std::move(blocks)) {}

  Universe universe_;
  std::vector<set_mask> blocks_;
};

/// All unions of blocks (the empty union gives {}). This is exactly the
/// algebra whose unseparability classes are the blocks: 2^k sets.
Family algebra_from_partition(const Partition& p, std::size_t max_sets = default_max_sets);

/// Inverse direction: the unseparability classes of an algebra. Throws
/// input_error if the family is not an algebra.
Partition partition_from_algebra(const Family& algebra);

/// Atoms of a non-empty family: elements grouped by which members contain
/// them. Every member is a union of atoms, and closing the atoms for |U|
/// steps recovers the generated algebra.
Partition atoms(const Family& u);

/// One atom per membership index set I over the family's members (bit i of
/// index_bits = member i, canonical order): intersect the members in I,
/// subtract the rest. Possibly empty; kept for diagnostics. 2^|U| entries,
/// so |U| is capped (throws budget_error past 24 members).
struct AtomIndex {
  std::uint64_t index_bits;
  set_mask atom;
};

std::vector<AtomIndex> atom_table(const Family& u);

/// Bell number B_n (number of partitions of an n-element set).
big_int bell_number(int n);

/// Streams every partition of {1..n} in restricted-growth-string order:
/// {{1,2,..,n}} first, all-singletons last.
class PartitionStream {
public:
  explicit PartitionStream(int n);
  std::optional<Partition> next();

private:
  int n_;
  std::vector<int> rgs_;
  bool exhausted_ = false;
  bool started_ = false;
};

enum class CensusMode {
  partition,   // count partitions (Bell number): algebras correspond 1-1
  exhaustive,  // close every non-empty family of subsets, count distinct
};

/// Number of distinct algebras over {1..n}. Exhaustive mode re-derives the
/// count from scratch and is only feasible for n <= 4 (2^(2^n) - 1 inputs).
big_int count_distinct_algebras(int n, CensusMode mode = CensusMode::partition);

struct AlgebraCensus {
  int n;
  big_int partition_count;
  std::optional<big_int> exhaustive_count;
  bool agree;  // vacuously true when exhaustive_count is absent
};

AlgebraCensus algebra_census(int n, bool exhaustive);

}  // namespace setforge
