#include "setforge/family.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "setforge/closure_kernel.hpp"

namespace setforge {

Universe::Universe(int size) : size_(size) {
  if (size < 1 || size > max_universe_size)
    throw input_error("universe size must be in 1.." + std::to_string(max_universe_size) +
                      ", got " + std::to_string(size));
}

ElementSet::ElementSet(Universe universe, set_mask bits)
    : universe_(universe), bits_(bits) {
  if (bits & ~universe.full_mask())
    throw input_error("set mask has bits outside the universe");
}

ElementSet ElementSet::from_elements(Universe universe, std::span<const int> elements) {
  set_mask bits = 0;
  for (int e : elements) {
    if (e < 1 || e > universe.size())
      throw input_error("element " + std::to_string(e) + " out of range for universe size " +
                        std::to_string(universe.size()));
    bits |= set_mask{1} << (e - 1);
  }
  return {universe, bits};
}

ElementSet ElementSet::from_elements(Universe universe, std::initializer_list<int> elements) {
  return from_elements(universe, std::span<const int>(elements.begin(), elements.size()));
}

int ElementSet::size() const noexcept { return std::popcount(bits_); }

bool ElementSet::contains(int element) const {
  if (element < 1 || element > universe_.size())
    throw input_error("element " + std::to_string(element) +
                      " out of range for universe size " + std::to_string(universe_.size()));
  return (bits_ >> (element - 1)) & 1u;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (set_mask b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

ElementSet ElementSet::complement() const noexcept {
  return {universe_, static_cast<set_mask>(~bits_ & universe_.full_mask())};
}

ElementSet operator|(ElementSet a, ElementSet b) {
  if (a.universe_ != b.universe_) throw input_error("universe mismatch in set union");
  return {a.universe_, static_cast<set_mask>(a.bits_ | b.bits_)};
}

ElementSet operator&(ElementSet a, ElementSet b) {
  if (a.universe_ != b.universe_) throw input_error("universe mismatch in set intersection");
  return {a.universe_, static_cast<set_mask>(a.bits_ & b.bits_)};
}

Family Family::normalized(Universe universe, std::vector<set_mask> masks, bool allow_empty) {
  const set_mask full = universe.full_mask();
  for (set_mask m : masks)
    if (m & ~full) throw input_error("set mask has bits outside the universe");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (masks.empty() && !allow_empty) throw input_error("family must not be empty");
  return Family(universe, std::move(masks));
}

Family Family::normalized(Universe universe, std::span<const ElementSet> sets,
                          bool allow_empty) {
  std::vector<set_mask> masks;
  masks.reserve(sets.size());
  for (const ElementSet& s : sets) {
    if (s.universe() != universe) throw input_error("set universe differs from family universe");
    masks.push_back(s.bits());
  }
  return normalized(universe, std::move(masks), allow_empty);
}

Family Family::from_sorted_unique(Universe universe, std::vector<set_mask> masks) {
  return Family(universe, std::move(masks));
}

bool Family::contains(set_mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool Family::contains(const ElementSet& s) const {
  return s.universe() == universe_ && contains(s.bits());
}

bool Family::subset_of(const Family& other) const {
  if (universe_ != other.universe_) throw input_error("universe mismatch in subfamily test");
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Family close_once(const Family& u, std::size_t max_sets, bool allow_empty) {
  if (u.empty()) {
    if (!allow_empty) throw input_error("cannot close an empty family");
    return u;  // no members, no pairs, no complements
  }
  return Family::from_sorted_unique(
      u.universe(), kernel::close_once(u.masks(), u.universe().size(), max_sets));
}

Family close_n(const Family& u, int n, std::size_t max_sets, bool allow_empty) {
  if (n < 0) throw input_error("step count must be non-negative");
  if (u.empty() && !allow_empty) throw input_error("cannot close an empty family");
  Family current = u;
  for (int k = 0; k < n; ++k) {
    Family next = close_once(current, max_sets, allow_empty);
    if (next.size() == current.size()) return current;  // fixpoint, no further change
    current = std::move(next);
  }
  return current;
}

FixpointResult close_fixpoint(const Family& u, std::size_t max_sets, bool allow_empty) {
  if (u.empty() && !allow_empty) throw input_error("cannot close an empty family");
  FixpointResult r{u, {}};
  r.trace.entries.push_back({0, r.family.size()});
  for (int step = 1;; ++step) {
    Family next = close_once(r.family, max_sets, allow_empty);
    r.trace.entries.push_back({step, next.size()});
    if (next.size() == r.family.size()) {
      // Closure only adds sets, so equal size means the step was a no-op.
      r.trace.fixpoint_index = step - 1;
      return r;
    }
    r.family = std::move(next);
  }
}

bool is_algebra(const Family& f) {
  if (f.empty()) return false;
  const auto& m = f.masks();
  const set_mask full = f.universe().full_mask();
  const auto n = static_cast<std::int64_t>(m.size());

  // Presence lookup: bitmap for small universes, hash otherwise.
  std::vector<std::uint64_t> bitmap;
  std::unordered_set<set_mask> hash;
  const bool small = f.universe().size() <= kernel::bitmap_max_universe;
  if (small) {
    bitmap.assign((std::uint64_t{1} << f.universe().size()) / 64 + 1, 0);
    for (set_mask x : m) bitmap[x >> 6] |= std::uint64_t{1} << (x & 63);
  } else {
    hash.insert(m.begin(), m.end());
  }
  auto present = [&](set_mask x) -> bool {
    return small ? (bitmap[x >> 6] >> (x & 63)) & 1u : hash.contains(x);
  };

  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok) if (n >= 2048)
  for (std::int64_t i = 0; i < n; ++i) {
    if (!ok) continue;  // stale read; just skips work
    bool row = present(~m[i] & full);
    for (std::int64_t j = i + 1; row && j < n; ++j)
      row = present(m[i] | m[j]) && present(m[i] & m[j]);
    ok = ok && row;
  }
  return ok;
}

StepCount steps_to(const Family& start, const Family& target, std::size_t max_sets) {
  if (start.universe() != target.universe())
    throw input_error("universe mismatch between start and target families");
  if (target.subset_of(start)) return 0;
  if (start.empty()) return std::nullopt;  // closure of nothing stays nothing
  Family current = start;
  for (int n = 1;; ++n) {
    Family next = close_once(current, max_sets);
    if (target.subset_of(next)) return n;
    if (next.size() == current.size()) return std::nullopt;  // fixpoint without containment
    current = std::move(next);
  }
}

}  // namespace setforge
