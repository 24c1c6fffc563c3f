#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "setforge/partition.hpp"
#include "setforge/separability.hpp"

using namespace setforge;

namespace {

Family make(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> members;
  for (const auto& s : sets) members.push_back(ElementSet::from_elements(Universe(n), s));
  return Family::normalized(Universe(n), members);
}

}  // namespace

TEST_CASE("separating two elements needs a member containing exactly one") {
  const Family u = make(3, {{1, 2}, {2, 3}});
  CHECK(separable(u, 1, 2));   // {2,3} holds 2, not 1
  CHECK(separable(u, 2, 3));   // {1,2} holds 2, not 3
  CHECK(separable(u, 1, 3));
  CHECK_FALSE(separable(u, 1, 1));
  CHECK_THROWS_AS(separable(u, 0, 1), input_error);
  CHECK_THROWS_AS(separable(u, 1, 4), input_error);

  const Family v = make(4, {{1, 2}, {3}});
  CHECK_FALSE(separable(v, 1, 2));  // both members treat 1 and 2 alike
  CHECK(separable(v, 1, 3));
  CHECK_FALSE(separable(v, 4, 4));
}

TEST_CASE("universe separability") {
  CHECK(is_universe_separable(make(3, {{1}, {2}})));  // singletons split all pairs
  CHECK_FALSE(is_universe_separable(make(4, {{1, 2}, {3}})));
  CHECK_FALSE(is_universe_separable(make(2, {{1, 2}})));
  CHECK(is_universe_separable(make(1, {{1}})));  // no pairs at all
}

TEST_CASE("unseparability classes by refinement") {
  const SeparabilityClasses c = equivalence_classes(make(4, {{1}, {1, 2}, {1, 2, 3, 4}}));
  CHECK(c.blocks.blocks() == std::vector<set_mask>{0b0001, 0b0010, 0b1100});
  CHECK(c.class_of(3).elements() == std::vector<int>{3, 4});
  CHECK(c.class_of(1).elements() == std::vector<int>{1});
  CHECK_THROWS_AS(c.class_of(5), input_error);

  // an algebra's classes: the three generating blocks
  const Family alg = Family::normalized(
      Universe(5), std::vector<set_mask>{0, 3, 12, 15, 16, 19, 28, 31});
  CHECK(equivalence_classes(alg).blocks.blocks() == std::vector<set_mask>{3, 12, 16});

  // a family that separates everything: all classes singleton
  const auto singles = equivalence_classes(make(3, {{1}, {2}}));
  CHECK(singles.blocks.size() == 3);
}

TEST_CASE("intersection of containing members") {
  const Family u = make(4, {{1}, {1, 2}, {1, 2, 3, 4}});
  CHECK(intersection_of_containing(u, 3).elements() == std::vector<int>{1, 2, 3, 4});
  CHECK(intersection_of_containing(u, 1).elements() == std::vector<int>{1});
  CHECK(intersection_of_containing(u, 2).elements() == std::vector<int>{1, 2});
  // element 3 and 4 are unseparable, yet 4 is not in every set containing 3's
  // intersection partner: the class is {3,4} but intersection is the whole set
  CHECK(equivalence_classes(u).class_of(3).elements() == std::vector<int>{3, 4});

  // no member contains the element: empty intersection convention gives X
  const Family v = make(3, {{1}});
  CHECK(intersection_of_containing(v, 2).elements() == std::vector<int>{1, 2, 3});
}

TEST_CASE("separable pairs match the definition on random families") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto ref = oracle::random_family(rng, n, 6);
    const Family fam = oracle::to_family(ref, n);
    const SeparabilityClasses classes = equivalence_classes(fam);

    bool all_pairs = true;
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        bool split = false;  // recompute from the definition, set-side
        for (const auto& s : ref)
          if (s.count(a) != s.count(b)) split = true;
        if (a == b) CHECK_FALSE(separable(fam, a, b));
        else CHECK(separable(fam, a, b) == split);
        if (a != b && !split) all_pairs = false;

        // classes agree with pairwise unseparability
        if (a != b) {
          const bool same_block =
              classes.blocks.block_of(a) == classes.blocks.block_of(b);
          CHECK(same_block == !split);
        }
      }
    }
    CHECK(is_universe_separable(fam) == all_pairs);

    // blocks really partition the universe
    set_mask seen = 0;
    for (set_mask b : classes.blocks.blocks()) {
      CHECK(b != 0);
      CHECK((seen & b) == 0);
      seen |= b;
    }
    CHECK(seen == fam.universe().full_mask());
  }
}

TEST_CASE("an algebra is the union closure of its classes") {
  std::mt19937 rng(808);
  for (int iter = 0; iter < 80; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto ref = oracle::random_family(rng, n, 5);
    const Family alg = oracle::to_family(oracle::minimal_algebra_containing(ref, n), n);
    const Partition classes = equivalence_classes(alg).blocks;
    CHECK(algebra_from_partition(classes) == alg);
  }
}
