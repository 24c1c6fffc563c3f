#include "setforge/separability.hpp"

#include <algorithm>
#include <bit>

namespace setforge {

namespace {

void check_element(const Family& u, int e) {
  if (e < 1 || e > u.universe().size())
    throw input_error("element " + std::to_string(e) + " out of range for universe size " +
                      std::to_string(u.universe().size()));
}

}  // namespace

bool separable(const Family& u, int a, int b) {
  check_element(u, a);
  check_element(u, b);
  const set_mask bit_a = set_mask{1} << (a - 1);
  const set_mask bit_b = set_mask{1} << (b - 1);
  for (set_mask m : u.masks()) {
    const bool has_a = m & bit_a;
    const bool has_b = m & bit_b;
    if (has_a != has_b) return true;
  }
  return false;
}

bool is_universe_separable(const Family& u) {
  const int n = u.universe().size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!separable(u, a, b)) return false;
  return true;
}

ElementSet SeparabilityClasses::class_of(int element) const {
  return {blocks.universe(), blocks.blocks()[blocks.block_of(element)]};
}

SeparabilityClasses equivalence_classes(const Family& u) {
  // Refine {X} by every member: a block splits into its parts inside and
  // outside the member. Two elements stay together iff no member splits
  // them, which is exactly unseparability.
  std::vector<set_mask> blocks{u.universe().full_mask()};
  std::vector<set_mask> next;
  for (set_mask m : u.masks()) {
    next.clear();
    for (set_mask b : blocks) {
      if (set_mask in = b & m) next.push_back(in);
      if (set_mask out = b & ~m) next.push_back(out);
    }
    blocks.swap(next);
  }
  return {Partition::from_blocks(u.universe(), std::move(blocks))};
}

ElementSet intersection_of_containing(const Family& u, int element) {
  check_element(u, element);
  const set_mask bit = set_mask{1} << (element - 1);
  set_mask acc = u.universe().full_mask();
  for (set_mask m : u.masks())
    if (m & bit) acc &= m;
  return {u.universe(), acc};
}

}  // namespace setforge
