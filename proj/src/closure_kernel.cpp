#include "setforge/closure_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include <omp.h>

namespace setforge::kernel {
namespace {

set_mask full_mask_of(int universe_size) {
  return universe_size == 32 ? ~set_mask{0} : (set_mask{1} << universe_size) - 1u;
}

// Presence bitmap over all 2^u subset masks.
struct Bitmap {
  explicit Bitmap(int universe_size)
      : words((std::uint64_t{1} << universe_size) / 64 + 1, 0) {}

  void set(set_mask m) noexcept { words[m >> 6] |= std::uint64_t{1} << (m & 63); }

  std::vector<std::uint64_t> words;
};

void merge_into(Bitmap& into, const Bitmap& from) {
  for (std::size_t w = 0; w < into.words.size(); ++w) into.words[w] |= from.words[w];
}

std::vector<set_mask> collect(const Bitmap& seen, std::size_t max_sets) {
  std::size_t count = 0;
  for (std::uint64_t w : seen.words) count += static_cast<std::size_t>(std::popcount(w));
  if (count > max_sets)
    throw budget_error("closure step would hold " + std::to_string(count) +
                       " sets, over the budget of " + std::to_string(max_sets));
  std::vector<set_mask> out;
  out.reserve(count);
  for (std::size_t w = 0; w < seen.words.size(); ++w) {
    std::uint64_t bits = seen.words[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<set_mask>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;  // ascending by construction
}

// One member's row of results: its complement and all pairs (i, j >= i).
template <class Sink>
void emit_row(std::span<const set_mask> m, std::size_t i, set_mask full, Sink&& sink) {
  const set_mask a = m[i];
  sink(a);
  sink(~a & full);
  for (std::size_t j = i + 1; j < m.size(); ++j) {
    sink(a | m[j]);
    sink(a & m[j]);
  }
}

std::vector<set_mask> sorted_unique(std::vector<set_mask> v, std::size_t max_sets) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() > max_sets)
    throw budget_error("closure step would hold " + std::to_string(v.size()) +
                       " sets, over the budget of " + std::to_string(max_sets));
  return v;
}

bool use_bitmap(Dedup dedup, int universe_size) {
  switch (dedup) {
    case Dedup::bitmap: return true;
    case Dedup::hash: return false;
    case Dedup::automatic: return universe_size <= bitmap_max_universe;
  }
  return true;
}

}  // namespace

std::vector<set_mask> close_once_serial(std::span<const set_mask> members,
                                        int universe_size, std::size_t max_sets,
                                        Dedup dedup) {
  const set_mask full = full_mask_of(universe_size);
  if (use_bitmap(dedup, universe_size)) {
    Bitmap seen(universe_size);
    for (std::size_t i = 0; i < members.size(); ++i)
      emit_row(members, i, full, [&](set_mask m) { seen.set(m); });
    return collect(seen, max_sets);
  }
  std::unordered_set<set_mask> seen;
  seen.reserve(members.size() * 4);
  const std::size_t hard_cap = max_sets + 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    emit_row(members, i, full, [&](set_mask m) { seen.insert(m); });
    if (seen.size() > hard_cap)
      throw budget_error("closure step exceeded the budget of " + std::to_string(max_sets) +
                         " sets");
  }
  return sorted_unique({seen.begin(), seen.end()}, max_sets);
}

std::vector<set_mask> close_once_parallel(std::span<const set_mask> members,
                                          int universe_size, std::size_t max_sets,
                                          Dedup dedup) {
  const set_mask full = full_mask_of(universe_size);
  const auto n = static_cast<std::int64_t>(members.size());

  if (use_bitmap(dedup, universe_size)) {
    Bitmap seen(universe_size);
#pragma omp parallel
    {
      Bitmap local(universe_size);
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < n; ++i)
        emit_row(members, static_cast<std::size_t>(i), full,
                 [&](set_mask m) { local.set(m); });
#pragma omp critical(setforge_closure_merge)
      merge_into(seen, local);
    }
    return collect(seen, max_sets);
  }

  std::vector<std::vector<set_mask>> shards;
#pragma omp parallel
  {
    std::unordered_set<set_mask> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i)
      emit_row(members, static_cast<std::size_t>(i), full,
               [&](set_mask m) { local.insert(m); });
#pragma omp critical(setforge_closure_merge)
    shards.emplace_back(local.begin(), local.end());
  }
  std::vector<set_mask> all;
  for (auto& s : shards) all.insert(all.end(), s.begin(), s.end());
  return sorted_unique(std::move(all), max_sets);
}

std::vector<set_mask> close_once(std::span<const set_mask> members, int universe_size,
                                 std::size_t max_sets) {
  const bool parallel = members.size() >= parallel_threshold &&
                        omp_get_max_threads() > 1 && !omp_in_parallel();
  return parallel ? close_once_parallel(members, universe_size, max_sets)
                  : close_once_serial(members, universe_size, max_sets);
}

}  // namespace setforge::kernel
