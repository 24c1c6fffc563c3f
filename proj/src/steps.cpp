#include "setforge/steps.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace setforge {

namespace {

// Binomial with saturation: anything past cap reports cap + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (result > cap || result > ~std::uint64_t{0} / factor) return cap + 1;
    result = result * factor / i;  // exact: product of i consecutive over i!
  }
  return std::min(result, cap + 1);
}

// Enumerates unions of exactly k distinct members, depth-first with a
// running OR per level. Visit returns false to stop early.
template <class Visit>
bool for_each_k_union(std::span<const set_mask> members, int k, Visit&& visit) {
  if (k == 0) return visit(set_mask{0});
  const int n = static_cast<int>(members.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::vector<set_mask> acc(static_cast<std::size_t>(k));
  int depth = 0;
  idx[0] = 0;
  while (depth >= 0) {
    const std::size_t d = static_cast<std::size_t>(depth);
    if (idx[d] > n - (k - depth)) {  // no room for the remaining picks
      --depth;
      if (depth >= 0) ++idx[static_cast<std::size_t>(depth)];
      continue;
    }
    acc[d] = (depth ? acc[d - 1] : set_mask{0}) | members[static_cast<std::size_t>(idx[d])];
    if (depth == k - 1) {
      if (!visit(acc[d])) return false;
      ++idx[d];
    } else {
      idx[d + 1] = idx[d] + 1;
      ++depth;
    }
  }
  return true;
}

}  // namespace

Family k_unions(const Family& u, int k, std::size_t max_sets) {
  if (k < 0 || static_cast<std::size_t>(k) > u.size())
    throw input_error("k must be in 0..|family|, got " + std::to_string(k));
  if (binomial_capped(u.size(), static_cast<std::uint64_t>(k), max_sets) > max_sets)
    throw budget_error("C(" + std::to_string(u.size()) + "," + std::to_string(k) +
                       ") unions exceed the budget of " + std::to_string(max_sets));
  std::vector<set_mask> out;
  for_each_k_union(u.masks(), k, [&](set_mask m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Family::from_sorted_unique(u.universe(), std::move(out));
}

BSet b_set(const Family& u, int m, std::size_t max_sets) {
  if (m < 0) throw input_error("stage must be non-negative");
  const Family stage = close_n(u, m, max_sets);
  BSet out{m, {}};
  for (int k = 0; static_cast<std::size_t>(k) <= u.size(); ++k) {
    if (binomial_capped(u.size(), static_cast<std::uint64_t>(k), max_sets) > max_sets)
      throw budget_error("B-set check at k=" + std::to_string(k) + " exceeds the budget of " +
                         std::to_string(max_sets));
    const bool all_in = for_each_k_union(u.masks(), k,
                                         [&](set_mask x) { return stage.contains(x); });
    if (all_in) out.members.push_back(k);
  }
  return out;
}

std::vector<int> predicted_partition_bset(int n, int m) {
  if (n < 1) throw input_error("partition block count must be positive");
  if (m < 2) throw input_error("closed-form B-set needs stage m >= 2");
  std::vector<int> out;
  const long long lo_top = m >= 62 ? n : std::min<long long>(1LL << m, n);
  for (long long k = 0; k <= lo_top; ++k) out.push_back(static_cast<int>(k));
  const long long hi_lo = std::max<long long>(0, n - (1LL << (m - 1)));
  for (long long k = hi_lo; k <= n; ++k) out.push_back(static_cast<int>(k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long gap(long long n, int k) {
  if (n < 1) throw input_error("partition block count must be positive");
  if (k < 1 || k > 61) throw input_error("stage k must be in 1..61");
  return n - 3 * (1LL << (k - 1));
}

int steps_formula(long long n) {
  if (n < 1) throw input_error("partition block count must be positive");
  if (n <= 2) return 1;
  if (n == 3) return 2;
  const int f = std::bit_width(static_cast<std::uint64_t>(n)) - 1;  // floor(log2 n)
  // Up to n = 1 + 3*2^(f-1) the floor suffices; past it one extra step.
  // (In the latter case n is never a power of two, so ceil = f + 1.)
  return n <= 1 + 3 * (1LL << (f - 1)) ? f : f + 1;
}

}  // namespace setforge
