#pragma once

#include <cstdint>
#include <optional>

#include "setforge/family.hpp"

namespace setforge {

/// A proper subfamily that already reaches the target within n steps.
/// Dropping one member suffices to decide minimality: subfamilies only
/// shrink closures, so the first single-removal witness (in canonical
/// member order) is returned.
struct MinimalityWitness {
  ElementSet removed;
  Family closure;  // C_n(u minus removed)
};

enum class MinimalityKind {
  standard,  // no proper subfamily reaches u itself within n steps
  fat,       // no proper subfamily reaches U_{n-1} within n steps
};

struct MinimalityReport {
  Family family;
  int n;
  MinimalityKind kind;
  bool is_minimal;
  std::optional<MinimalityWitness> witness;
};

/// Is u n-minimal: no proper subfamily H has u contained in C_n(H)?
/// Families with at most one member are vacuously minimal.
MinimalityReport is_n_minimal_constructible(const Family& u, int n,
                                            std::size_t max_sets = default_max_sets);

/// Stricter variant: no proper subfamily H has C_{n-1}(u) contained in
/// C_n(H). Implies n-minimal. Coincides with it at n = 1.
MinimalityReport is_n_minimal_fat(const Family& u, int n,
                                  std::size_t max_sets = default_max_sets);

/// For an algebra A: its unseparability partition. Reaches A in
/// steps_formula(block count) steps. 1-minimal for every block count
/// except exactly two, where the complement of either block rebuilds the
/// other in one step.
Family generator_1mc(const Family& algebra);

/// An n-minimal generator for every n whose fixpoint is the algebra: the
/// unseparability partition minus its last block (the whole partition when
/// there is only one class).
Family generator_all_n(const Family& algebra);

/// Streams every n-minimal family over {1..universe_size} with at most
/// max_family_size members, in ascending family-bitmask order (bit s of the
/// index = subset with mask s), so the empty family comes first.
/// universe_size above 4 throws budget_error (2^(2^u) candidates).
class MinimalFamilyStream {
public:
  MinimalFamilyStream(int universe_size, int n, std::size_t max_family_size,
                      std::size_t max_sets = default_max_sets);
  std::optional<Family> next();

private:
  Universe universe_;
  int n_;
  std::size_t max_family_size_;
  std::size_t max_sets_;
  std::uint64_t next_index_ = 0;
  std::uint64_t end_index_;
};

}  // namespace setforge
