// SPDX-License-Identifier: Apache-2.0
//
// Unit tests for the combinatorial core.  The regression value for the
// max-parity search was frozen after cross-checking against the exhaustive
// enumeration oracle in the same suite.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramsey/engine.hpp"

using namespace ramsey;

namespace {

/// Pentagon coloring on window 5: edge color 0 iff circular distance 1.
Coloring pentagon() {
  return Coloring::from_function(2, ColorSpace{false, 2}, 5,
                                 [](const std::vector<u64>& s) -> u64 {
                                   const u64 d = s[1] - s[0];
                                   return (d == 1 || d == 4) ? 0 : 1;
                                 });
}

}  // namespace

TEST_CASE("solve_homogeneous finds the lex-least witness", "[engine]") {
  const Coloring constant = Coloring::filled(2, ColorSpace{false, 2}, 10, 0);
  const HomSet m = solve_homogeneous(constant, 5);
  CHECK(m.elements == std::vector<u64>{0, 1, 2, 3, 4});
  CHECK(m.color == 0);

  const Coloring c = Coloring::from_function(
      2, ColorSpace{false, 2}, 12,
      [](const std::vector<u64>& s) { return s[1] % 2; });
  const HomSet p = solve_homogeneous(c, 4);
  // Cross-checked below against the exhaustive oracle.
  CHECK(check_homogeneous(c, p));
  CHECK(p.elements == all_homogeneous(c, 4).front().elements);
  CHECK(p.elements == std::vector<u64>{0, 1, 3, 5});
  CHECK(p.color == 1);

  CHECK_THROWS_AS(solve_homogeneous(pentagon(), 3), NotFoundError);
  CHECK_THROWS_AS(solve_homogeneous(constant, 1), InvalidInputError);
}

TEST_CASE("all_homogeneous is the complete lex-ordered oracle", "[engine]") {
  const Coloring constant = Coloring::filled(2, ColorSpace{false, 2}, 4, 0);
  const auto all = all_homogeneous(constant, 3);
  REQUIRE(all.size() == 4);
  CHECK(all[0].elements == std::vector<u64>{0, 1, 2});
  CHECK(all[3].elements == std::vector<u64>{1, 2, 3});

  CHECK(all_homogeneous(pentagon(), 3).empty());
  CHECK_THROWS_AS(all_homogeneous(pentagon(), 3, 5), BudgetError);

  // Consistency with the solver on random colorings.
  std::mt19937_64 rng(20260826);
  for (int trial = 0; trial < 20; ++trial) {
    const Coloring c = Coloring::from_function(
        2, ColorSpace{false, 2}, 9,
        [&](const std::vector<u64>&) { return rng() % 2; });
    const auto oracle = all_homogeneous(c, 3);
    if (oracle.empty()) {
      CHECK_THROWS_AS(solve_homogeneous(c, 3), NotFoundError);
    } else {
      CHECK(solve_homogeneous(c, 3).elements == oracle.front().elements);
    }
  }
}

TEST_CASE("ramsey_window_bound matches the classical recursions", "[engine]") {
  CHECK(ramsey_window_bound(1, 2, 3) == 5);
  CHECK(ramsey_window_bound(1, 3, 4) == 10);
  CHECK(ramsey_window_bound(2, 2, 2) >= 2);
  CHECK(ramsey_window_bound(2, 2, 3) >= 6);
  // The 2-dimensional recursion is exact here: R(3,3) = 6.
  CHECK(ramsey_window_bound(2, 2, 3) == 6);
  CHECK(ramsey_window_bound(2, 2, 4) == 20);
  CHECK(ramsey_window_bound(3, 2, 3) > 6);
  CHECK_THROWS_AS(ramsey_window_bound(3, 2, 10), OverflowError);
  CHECK_THROWS_AS(ramsey_window_bound(0, 2, 3), InvalidInputError);
}

TEST_CASE("every coloring at the n=2 bound has a homogeneous set", "[engine]") {
  // Exhaustive for k = 2, size 3 at window 6 (all 2^15 edge colorings) is in
  // the acceptance suite; here random colorings cross-check the bound.
  const u64 w = ramsey_window_bound(2, 2, 3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Coloring c = Coloring::from_function(
        2, ColorSpace{false, 2}, w,
        [&](const std::vector<u64>&) { return rng() % 2; });
    CHECK_NOTHROW(solve_homogeneous(c, 3));
  }
}

TEST_CASE("build_product_coloring combines digits and stability", "[engine]") {
  const u64 w = 12;
  const Coloring zero = Coloring::filled(2, ColorSpace{false, 2}, w, 0);
  const Coloring one = Coloring::filled(2, ColorSpace{false, 2}, w, 1);

  SECTION("m = 1 is the identity") {
    const Coloring p = build_product_coloring({one});
    CHECK(p.table == one.table);
    CHECK(p.colors.value == 2);
  }

  SECTION("binary digits, first component most significant") {
    const Coloring p = build_product_coloring({zero, one});
    CHECK(p.colors.value == 4);
    for (u64 v : p.table) CHECK(v == 1);  // binary 01
    const Coloring q = build_product_coloring({one, zero});
    for (u64 v : q.table) CHECK(v == 2);  // binary 10
  }

  SECTION("homogeneous sets of the product are homogeneous per component") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Coloring> cs;
      for (int i = 0; i < 3; ++i) {
        cs.push_back(Coloring::from_function(
            2, ColorSpace{false, 2}, w,
            [&](const std::vector<u64>&) { return rng() % 2; }));
      }
      const Coloring p = build_product_coloring(cs);
      for (const HomSet& m : all_homogeneous(p, 4)) {
        for (const Coloring& c : cs) {
          CHECK(check_homogeneous(c, HomSet{m.elements, 0, false}));
        }
      }
    }
  }

  SECTION("unbounded ranges combine by tupling") {
    Coloring a = Coloring::filled(1, ColorSpace{true, 5}, 6, 0);
    Coloring b = Coloring::filled(1, ColorSpace{true, 5}, 6, 0);
    for (u64 i = 0; i < 6; ++i) {
      a.set({i}, i);
      b.set({i}, 5 - i);
    }
    const Coloring p = build_product_coloring({a, b});
    CHECK(p.colors.unbounded);
    for (u64 i = 0; i < 6; ++i) CHECK(p.at({i}) == tuple({i, 5 - i}));
  }

  SECTION("stability annotations are carried through") {
    auto mk = [&](u64 shift) {
      Coloring c = Coloring::from_function(
          2, ColorSpace{false, 2}, w,
          [&](const std::vector<u64>& s) { return (s[0] + shift) % 2; });
      StableAnnotation sa;
      sa.horizon = 0;
      for (u64 a = 0; a < w; ++a) {
        sa.limit.push_back(a + 1 < w ? (a + shift) % 2 : 0);
      }
      c.annotation = sa;
      return c;
    };
    const Coloring p = build_product_coloring({mk(0), mk(1)});
    REQUIRE(p.annotation.has_value());
    const auto res = is_stable_up_to(p, p.annotation->horizon);
    REQUIRE(res.kind == StabilityResult::Kind::Stable);
    CHECK(res.limit == p.annotation->limit);
  }
}
