#pragma once

#include <cstdint>
#include <vector>

#include "setforge/family.hpp"

namespace setforge {

/// All unions of exactly k distinct members of u (k = 0 gives {{}}).
/// k outside 0..|u| throws input_error; more than max_sets combinations
/// throws budget_error.
Family k_unions(const Family& u, int k, std::size_t max_sets = default_max_sets);

/// Which union arities are already available at stage m: the ascending set
/// of k in 0..|u| such that every k-fold union of members lies in C_m(u).
struct BSet {
  int m;
  std::vector<int> members;
};

BSet b_set(const Family& u, int m, std::size_t max_sets = default_max_sets);

/// Closed-form B_m for a partition into n blocks, m >= 2:
/// {0..2^m} union {n - 2^(m-1) .. n}, clamped to 0..n.
std::vector<int> predicted_partition_bset(int n, int m);

/// g_n(k) = n - 3 * 2^(k-1): the shortfall of stage k's guaranteed union
/// arity against n. Stage k finishes the ladder iff the gap is <= 1.
long long gap(long long n, int k);

/// Steps to close a partition into n blocks:
/// 1 for n <= 2, 2 for n = 3, and for n >= 4 floor(log2 n) when
/// n <= 1 + 3*2^(floor(log2 n) - 1), else ceil(log2 n).
int steps_formula(long long n);

}  // namespace setforge
