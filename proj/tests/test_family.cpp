#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "setforge/family.hpp"

using namespace setforge;

namespace {

Family make(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> members;
  for (const auto& s : sets) members.push_back(ElementSet::from_elements(Universe(n), s));
  return Family::normalized(Universe(n), members);
}

std::vector<set_mask> masks_of(const Family& f) { return f.masks(); }

}  // namespace

TEST_CASE("universe and element-set validation") {
  CHECK_THROWS_AS(Universe(0), input_error);
  CHECK_THROWS_AS(Universe(33), input_error);
  CHECK(Universe(32).full_mask() == 0xffffffffu);
  CHECK(Universe(3).full_mask() == 0b111u);

  CHECK_THROWS_AS(ElementSet::from_elements(Universe(3), {4}), input_error);
  CHECK_THROWS_AS(ElementSet::from_elements(Universe(3), {0}), input_error);
  CHECK_THROWS_AS(ElementSet(Universe(3), 0b1000u), input_error);

  const ElementSet s = ElementSet::from_elements(Universe(4), {2, 4});
  CHECK(s.bits() == 0b1010u);
  CHECK(s.elements() == std::vector<int>{2, 4});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK_THROWS_AS(s.contains(5), input_error);
  CHECK(s.complement().elements() == std::vector<int>{1, 3});
}

TEST_CASE("normalize sorts, deduplicates, and rejects empty input") {
  const Family f = make(3, {{3}, {1, 2}, {1, 2}});
  CHECK(masks_of(f) == std::vector<set_mask>{0b011, 0b100});  // {1,2} before {3}
  CHECK(f.size() == 2);

  CHECK_THROWS_AS(Family::normalized(Universe(3), std::vector<set_mask>{}), input_error);
  const Family empty = Family::normalized(Universe(3), std::vector<set_mask>{}, true);
  CHECK(empty.empty());

  CHECK_THROWS_AS(Family::normalized(Universe(3), std::vector<set_mask>{0b1000}), input_error);

  // one-member identity
  const Family one = make(1, {{1}});
  CHECK(masks_of(one) == std::vector<set_mask>{1});
}

TEST_CASE("one closure step of two overlapping pairs") {
  // {{1,2},{2,3}} over {1,2,3}: unions, intersections and complements give
  // exactly {2},{1,2},{2,3},{1,2,3},{3},{1}
  const Family u = make(3, {{1, 2}, {2, 3}});
  const Family c1 = close_once(u);
  CHECK(masks_of(c1) == std::vector<set_mask>{1, 2, 3, 4, 6, 7});

  const Family c2 = close_once(c1);
  CHECK(masks_of(c2) == std::vector<set_mask>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(close_once(c2) == c2);  // already everything
}

TEST_CASE("fixpoint trace of two overlapping pairs") {
  const Family u = make(3, {{1, 2}, {2, 3}});
  const FixpointResult r = close_fixpoint(u);
  CHECK(r.family.size() == 8);
  CHECK(r.trace.fixpoint_index == 2);
  REQUIRE(r.trace.entries.size() == 4);
  const std::vector<std::size_t> sizes{2, 6, 8, 8};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    CHECK(r.trace.entries[i].step == static_cast<int>(i));
    CHECK(r.trace.entries[i].family_size == sizes[i]);
  }
}

TEST_CASE("disjoint pair over four elements closes in two steps") {
  const Family u = make(4, {{1, 2}, {3}});
  const Family c1 = close_once(u);
  CHECK(masks_of(c1) == std::vector<set_mask>{0, 3, 4, 7, 11, 12});

  const FixpointResult r = close_fixpoint(u);
  CHECK(masks_of(r.family) == std::vector<set_mask>{0, 3, 4, 7, 8, 11, 12, 15});
  CHECK(r.trace.fixpoint_index == 2);
}

TEST_CASE("four-block partition of six elements: 15 sets after one step, 16 at the fixpoint") {
  const Family p = make(6, {{1}, {2, 5}, {3, 4}, {6}});
  CHECK(close_n(p, 1).size() == 15);
  const FixpointResult r = close_fixpoint(p);
  CHECK(r.family.size() == 16);
  CHECK(r.trace.fixpoint_index == 2);
  CHECK(is_algebra(r.family));
}

TEST_CASE("close_n edge cases") {
  const Family u = make(3, {{1, 2}, {2, 3}});
  CHECK(close_n(u, 0) == u);
  CHECK_THROWS_AS(close_n(u, -1), input_error);
  // past the fixpoint nothing changes
  CHECK(close_n(u, 50) == close_fixpoint(u).family);

  const Family empty = Family::normalized(Universe(3), std::vector<set_mask>{}, true);
  CHECK_THROWS_AS(close_once(empty), input_error);
  CHECK_THROWS_AS(close_fixpoint(empty), input_error);
  CHECK(close_once(empty, default_max_sets, true).empty());
  CHECK(close_fixpoint(empty, default_max_sets, true).family.empty());
}

TEST_CASE("closure budget trips") {
  // closing 10 singletons over {1..10} wants 2^10 = 1024 sets eventually
  std::vector<set_mask> singles;
  for (int i = 0; i < 10; ++i) singles.push_back(set_mask{1} << i);
  const Family p = Family::normalized(Universe(10), singles);
  CHECK_THROWS_AS(close_fixpoint(p, 100), budget_error);
  CHECK(close_fixpoint(p, 1024).family.size() == 1024);
}

TEST_CASE("algebra recognition") {
  const Family alg = Family::normalized(
      Universe(5), std::vector<set_mask>{0, 3, 12, 15, 16, 19, 28, 31});
  CHECK(is_algebra(alg));
  CHECK_FALSE(is_algebra(make(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_algebra(make(3, {{1}})));
  CHECK(is_algebra(make(3, {{}, {1, 2, 3}})));
  // missing a complement
  CHECK_FALSE(is_algebra(Family::normalized(Universe(3), std::vector<set_mask>{0, 1, 7})));
  CHECK_FALSE(is_algebra(Family::normalized(Universe(3), std::vector<set_mask>{}, true)));
}

TEST_CASE("step counts to a target family") {
  const Family u = make(3, {{1}, {2}});
  CHECK(steps_to(u, u) == StepCount{0});
  CHECK(steps_to(u, make(3, {{3}})) == StepCount{2});
  CHECK(steps_to(u, make(3, {{1, 2}})) == StepCount{1});

  // {3} never appears when closing {{1}} over three elements
  CHECK(steps_to(make(3, {{1}}), make(3, {{2}})) == StepCount{});
  CHECK_THROWS_AS(steps_to(u, make(4, {{1}})), input_error);
}

TEST_CASE("random families agree with the set-based reference") {
  std::mt19937 rng(20260814);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    const auto ref = oracle::random_family(rng, n, 6);
    const Family fam = oracle::to_family(ref, n);

    const Family once = close_once(fam);
    CHECK(oracle::from_family(once) == oracle::close_once(ref, n));

    // membership in the result and monotone growth
    CHECK(fam.subset_of(once));
    CHECK(once.size() <= fam.size() * fam.size() + fam.size());

    const FixpointResult fix = close_fixpoint(fam);
    CHECK(is_algebra(fix.family));
    CHECK(fam.subset_of(fix.family));
    CHECK(fix.family.contains(set_mask{0}));
    CHECK(fix.family.contains(fam.universe().full_mask()));
    CHECK(oracle::fixpoint_steps(ref, n) == fix.trace.fixpoint_index);

    // trace sizes grow strictly, then repeat once at the end
    const auto& e = fix.trace.entries;
    REQUIRE(e.size() == static_cast<std::size_t>(fix.trace.fixpoint_index) + 2);
    for (std::size_t i = 0; i + 2 < e.size(); ++i) CHECK(e[i].family_size < e[i + 1].family_size);
    CHECK(e[e.size() - 2].family_size == e.back().family_size);

    // closing the fixpoint is a no-op
    CHECK(close_once(fix.family) == fix.family);

    if (n <= 4) {
      // the fixpoint is the least algebra containing the family
      CHECK(oracle::from_family(fix.family) == oracle::minimal_algebra_containing(ref, n));
    }
  }
}

TEST_CASE("random subfamily monotonicity and steps_to agreement") {
  std::mt19937 rng(977);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    const auto ref = oracle::random_family(rng, n, 5);
    const Family fam = oracle::to_family(ref, n);

    // drop a random member: closure can only shrink
    if (ref.size() >= 2) {
      auto it = ref.begin();
      std::advance(it, static_cast<long>(rng() % ref.size()));
      auto smaller = ref;
      smaller.erase(*it);
      const Family sub = oracle::to_family(smaller, n);
      CHECK(close_once(sub).subset_of(close_once(fam)));
    }

    const auto target_ref = oracle::random_family(rng, n, 4);
    const Family target = oracle::to_family(target_ref, n);
    const auto expect = oracle::steps_to(ref, target_ref, n);
    const auto got = steps_to(fam, target);
    CHECK(got == StepCount{expect});
  }
}
