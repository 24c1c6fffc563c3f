#include "setforge/minimal.hpp"

#include <bit>
#include <string>

#include "setforge/separability.hpp"

namespace setforge {

namespace {

Family without_member(const Family& u, std::size_t drop) {
  std::vector<set_mask> rest;
  rest.reserve(u.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (i != drop) rest.push_back(u.masks()[i]);
  return Family::from_sorted_unique(u.universe(), std::move(rest));
}

// Shared scan: does dropping one member leave a subfamily whose n-step
// closure still covers `target`? Single removals decide the question for
// all proper subfamilies, since shrinking the generator shrinks closures.
MinimalityReport removal_scan(const Family& u, int n, MinimalityKind kind,
                              const Family& target, std::size_t max_sets) {
  MinimalityReport report{u, n, kind, true, std::nullopt};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Family rest = without_member(u, i);
    Family closed = close_n(rest, n, max_sets, /*allow_empty=*/true);
    if (target.subset_of(closed)) {
      report.is_minimal = false;
      report.witness = MinimalityWitness{u.member(i), std::move(closed)};
      return report;
    }
  }
  return report;
}

}  // namespace

MinimalityReport is_n_minimal_constructible(const Family& u, int n, std::size_t max_sets) {
  if (n < 1) throw input_error("minimality needs a step count n >= 1");
  if (u.size() <= 1)  // no proper subfamily can rebuild anything
    return {u, n, MinimalityKind::standard, true, std::nullopt};
  return removal_scan(u, n, MinimalityKind::standard, u, max_sets);
}

MinimalityReport is_n_minimal_fat(const Family& u, int n, std::size_t max_sets) {
  if (n < 1) throw input_error("minimality needs a step count n >= 1");
  if (u.size() <= 1)
    return {u, n, MinimalityKind::fat, true, std::nullopt};
  const Family target = close_n(u, n - 1, max_sets);
  return removal_scan(u, n, MinimalityKind::fat, target, max_sets);
}

Family generator_1mc(const Family& algebra) {
  if (!is_algebra(algebra)) throw input_error("family is not an algebra");
  return equivalence_classes(algebra).blocks.as_family();
}

Family generator_all_n(const Family& algebra) {
  if (!is_algebra(algebra)) throw input_error("family is not an algebra");
  const Partition classes = equivalence_classes(algebra).blocks;
  // One class: the partition {X} itself is n-minimal for every n (its only
  // proper subfamily is empty). Otherwise dropping the last block keeps the
  // fixpoint while making every single removal separate some pair.
  if (classes.size() == 1) return classes.as_family();
  std::vector<set_mask> kept(classes.blocks().begin(), classes.blocks().end() - 1);
  return Family::normalized(algebra.universe(), std::move(kept));
}

MinimalFamilyStream::MinimalFamilyStream(int universe_size, int n,
                                         std::size_t max_family_size, std::size_t max_sets)
    : universe_(universe_size), n_(n), max_family_size_(max_family_size),
      max_sets_(max_sets) {
  if (universe_size > 4)
    throw budget_error("enumeration walks 2^(2^u) families; supported for universes up to 4");
  if (n < 1) throw input_error("minimality needs a step count n >= 1");
  end_index_ = std::uint64_t{1} << (std::uint64_t{1} << universe_size);
}

std::optional<Family> MinimalFamilyStream::next() {
  for (; next_index_ < end_index_; ++next_index_) {
    const std::uint64_t w = next_index_;
    if (static_cast<std::size_t>(std::popcount(w)) > max_family_size_) continue;
    std::vector<set_mask> members;
    members.reserve(static_cast<std::size_t>(std::popcount(w)));
    for (std::uint64_t bits = w; bits; bits &= bits - 1)
      members.push_back(static_cast<set_mask>(std::countr_zero(bits)));
    Family candidate = Family::from_sorted_unique(universe_, std::move(members));
    if (is_n_minimal_constructible(candidate, n_, max_sets_).is_minimal) {
      ++next_index_;
      return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace setforge
