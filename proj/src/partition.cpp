#include "setforge/partition.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <omp.h>

#include "setforge/separability.hpp"

namespace setforge {

Partition Partition::from_blocks(Universe universe, std::vector<set_mask> blocks) {
  const set_mask full = universe.full_mask();
  set_mask seen = 0;
  for (set_mask b : blocks) {
    if (b == 0) throw input_error("partition block must not be empty");
    if (b & ~full) throw input_error("partition block has elements outside the universe");
    if (b & seen) throw input_error("partition blocks overlap");
    seen |= b;
  }
  if (seen != full) throw input_error("partition blocks do not cover the universe");
  std::sort(blocks.begin(), blocks.end(),
            [](set_mask a, set_mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return Partition(universe, std::move(blocks));
}

Partition Partition::from_family(const Family& f) {
  return from_blocks(f.universe(), f.masks());
}

std::size_t Partition::block_of(int element) const {
  if (element < 1 || element > universe_.size())
    throw input_error("element " + std::to_string(element) + " out of range for universe size " +
                      std::to_string(universe_.size()));
  const set_mask bit = set_mask{1} << (element - 1);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & bit) return i;
  throw input_error("partition invariant broken: element in no block");
}

Family Partition::as_family() const {
  return Family::normalized(universe_, blocks_);
}

Family algebra_from_partition(const Partition& p, std::size_t max_sets) {
  const auto k = p.size();
  if (k >= 63 || (std::uint64_t{1} << k) > max_sets)
    throw budget_error("algebra over " + std::to_string(k) + " blocks has 2^" +
                       std::to_string(k) + " sets, over the budget of " +
                       std::to_string(max_sets));
  std::vector<set_mask> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    set_mask m = 0;
    for (std::uint64_t c = choice; c; c &= c - 1)
      m |= p.blocks()[static_cast<std::size_t>(std::countr_zero(c))];
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return Family::from_sorted_unique(p.universe(), std::move(out));
}

Partition partition_from_algebra(const Family& algebra) {
  if (!is_algebra(algebra)) throw input_error("family is not an algebra");
  return equivalence_classes(algebra).blocks;
}

Partition atoms(const Family& u) {
  if (u.empty()) throw input_error("atoms of an empty family are undefined");
  // Elements grouped by membership signature; identical to the
  // unseparability classes, computed by refinement.
  return equivalence_classes(u).blocks;
}

std::vector<AtomIndex> atom_table(const Family& u) {
  if (u.empty()) throw input_error("atoms of an empty family are undefined");
  if (u.size() > 24)
    throw budget_error("atom table needs 2^" + std::to_string(u.size()) + " entries");
  const auto n = u.size();
  const set_mask full = u.universe().full_mask();
  std::vector<AtomIndex> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    set_mask atom = full;
    for (std::size_t i = 0; i < n; ++i) {
      const set_mask m = u.masks()[i];
      atom &= (idx >> i) & 1 ? m : ~m;
    }
    out.push_back({idx, static_cast<set_mask>(atom & full)});
  }
  return out;
}

big_int bell_number(int n) {
  if (n < 0) throw input_error("Bell numbers need n >= 0");
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<big_int> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<big_int> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const big_int& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

PartitionStream::PartitionStream(int n) : n_(n), rgs_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > max_universe_size)
    throw input_error("partition enumeration needs universe size in 1.." +
                      std::to_string(max_universe_size));
}

std::optional<Partition> PartitionStream::next() {
  if (exhausted_) return std::nullopt;
  if (started_) {
    // Restricted growth strings in lexicographic order: bump the rightmost
    // position that may grow (rgs[i] <= max of the prefix), zero the rest.
    int i = n_ - 1;
    for (; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[static_cast<std::size_t>(j)]);
      if (rgs_[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i < 1) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++rgs_[static_cast<std::size_t>(i)];
    std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
  }
  started_ = true;

  int block_count = 1 + *std::max_element(rgs_.begin(), rgs_.end());
  std::vector<set_mask> blocks(static_cast<std::size_t>(block_count), 0);
  for (int e = 0; e < n_; ++e)
    blocks[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(e)])] |= set_mask{1} << e;
  // Growth strings index blocks by first occurrence, which is least-element
  // order already; from_blocks re-checks and keeps it.
  return Partition::from_blocks(Universe(n_), std::move(blocks));
}

namespace {

// Families over {1..n} pack into one word: bit s = subset with mask s.
using family_word = std::uint64_t;

family_word fixpoint_word(family_word w, int n, std::size_t max_sets) {
  std::vector<set_mask> members;
  members.reserve(static_cast<std::size_t>(std::popcount(w)));
  for (family_word bits = w; bits; bits &= bits - 1)
    members.push_back(static_cast<set_mask>(std::countr_zero(bits)));
  Family fam = Family::from_sorted_unique(Universe(n), std::move(members));
  Family fix = close_fixpoint(fam, max_sets).family;
  family_word out = 0;
  for (set_mask m : fix.masks()) out |= family_word{1} << m;
  return out;
}

}  // namespace

big_int count_distinct_algebras(int n, CensusMode mode) {
  if (mode == CensusMode::partition) return bell_number(n);
  if (n < 1 || n > 4)
    throw budget_error("exhaustive census covers 2^(2^n)-1 families; supported for n in 1..4");

  const int subsets = 1 << n;
  const std::uint64_t family_count = std::uint64_t{1} << subsets;  // includes the empty one
  const std::size_t words = static_cast<std::size_t>((family_count + 63) / 64);
  std::vector<std::uint64_t> seen(words, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(words, 0);
#pragma omp for schedule(dynamic, 512) nowait
    for (std::int64_t w = 1; w < static_cast<std::int64_t>(family_count); ++w) {
      const family_word fix =
          fixpoint_word(static_cast<family_word>(w), n, default_max_sets);
      local[static_cast<std::size_t>(fix >> 6)] |= std::uint64_t{1} << (fix & 63);
    }
#pragma omp critical(setforge_census_merge)
    for (std::size_t i = 0; i < words; ++i) seen[i] |= local[i];
  }

  std::uint64_t distinct = 0;
  for (std::uint64_t x : seen) distinct += static_cast<std::uint64_t>(std::popcount(x));
  return big_int(distinct);
}

AlgebraCensus algebra_census(int n, bool exhaustive) {
  AlgebraCensus c{n, count_distinct_algebras(n, CensusMode::partition), std::nullopt, true};
  if (exhaustive) {
    c.exhaustive_count = count_distinct_algebras(n, CensusMode::exhaustive);
    c.agree = *c.exhaustive_count == c.partition_count;
  }
  return c;
}

}  // namespace setforge
