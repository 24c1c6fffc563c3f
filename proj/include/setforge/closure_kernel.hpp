#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "setforge/family.hpp"

// Raw closure-step kernels. The serial versions are the reference; the
// parallel ones shard the pair loop over OpenMP threads with per-thread
// dedup state and merge at the end. Both return strictly ascending masks,
// so output is identical bit for bit regardless of worker count.
namespace setforge::kernel {

enum class Dedup {
  automatic,  // bitmap for universes up to bitmap_max_universe, else hash
  bitmap,     // presence bitmap over all 2^u subsets
  hash,       // unordered_set of masks
};

/// Largest universe for which the 2^u presence bitmap is used by default
/// (2^20 bits = 128 KiB per thread).
inline constexpr int bitmap_max_universe = 20;

std::vector<set_mask> close_once_serial(std::span<const set_mask> members,
                                        int universe_size,
                                        std::size_t max_sets = default_max_sets,
                                        Dedup dedup = Dedup::automatic);

std::vector<set_mask> close_once_parallel(std::span<const set_mask> members,
                                          int universe_size,
                                          std::size_t max_sets = default_max_sets,
                                          Dedup dedup = Dedup::automatic);

/// Dispatches to the parallel kernel for large inputs when threads are
/// available (and we are not already inside a parallel region).
std::vector<set_mask> close_once(std::span<const set_mask> members,
                                 int universe_size,
                                 std::size_t max_sets = default_max_sets);

/// Member count at or above which close_once prefers the parallel kernel.
inline constexpr std::size_t parallel_threshold = 256;

}  // namespace setforge::kernel
