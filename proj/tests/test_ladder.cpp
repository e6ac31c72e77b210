#include <doctest.h>

#include <random>

#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"
#include "posetlab/ladder.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace posetlab;
using fx::el;
using fx::set;

namespace {

ErrorKind validate_error(const char* text) {
  try {
    parse_and_validate(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("validated: " << text);
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("staircase composition") {
  auto s = Staircase::shift(-2);
  CHECK(s(0) == 0);
  CHECK(s(5) == 3);
  auto t = Staircase::constant(4);
  CHECK(s.then(t)(9) == 4);
  CHECK(t.then(s)(9) == 2);
  CHECK(Staircase::upto(3, 0)(3) == 0);
  CHECK(Staircase::upto(3, 0)(4) == kInf);
  CHECK(Staircase::never().is_never());
  CHECK(Staircase::min(Staircase::upto(1, 5), Staircase::shift(0))(1) == 1);
  CHECK(Staircase::upto(3, 0).last_finite() == 3);
  CHECK(Staircase::constant(2).has_fixpoint_or_below());
  CHECK_FALSE(Staircase::shift(1).has_fixpoint_or_below());
}

TEST_CASE("validate") {
  auto& p1 = fx::p1();
  CHECK(p1.leq(el(p1, "X(7)"), el(p1, "d")));
  CHECK(p1.rel(p1.node(el(p1, "X(0)")), p1.node(el(p1, "d"))).is_total());
  CHECK(validate_error("poset bad { base b; ladder L; rel { L <= b always; b <= L from 0; } }") == ErrorKind::kCycle);
  CHECK_NOTHROW(parse_and_validate("poset omega { ladder X; }"));
  CHECK(validate_error("poset bad { base a; ladder L; rel { a <= a always; } }") == ErrorKind::kInvalidRule);
  CHECK(validate_error("poset bad { ladder L; rel { L <= L shift 1; } }") == ErrorKind::kInvalidRule);
  CHECK(validate_error("poset bad { base a a; }") == ErrorKind::kDuplicateId);
  CHECK(validate_error("poset bad { ladder L M; rel { L <= M shift 0; M <= L shift 0; } }") == ErrorKind::kCycle);
  // interleaved ladders are a chain, not a cycle
  auto zip = parse_and_validate("poset zip { ladder L M; rel { L <= M shift 1; M <= L shift 0; } }");
  CHECK(zip.leq(el(zip, "M(3)"), el(zip, "L(3)")));
  CHECK_FALSE(zip.leq(el(zip, "L(3)"), el(zip, "M(3)")));
}

TEST_CASE("leq") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  CHECK(p1.leq(el(p1, "a"), el(p1, "c")));
  CHECK(p1.leq(el(p1, "X(3)"), el(p1, "d")));
  CHECK_FALSE(p2.leq(el(p2, "Y1(5)"), el(p2, "Y2(9)")));
  CHECK_THROWS_AS(p1.parse_elem("X(-1)"), Error);
  CHECK_THROWS_AS(p1.parse_elem("zz"), Error);
}

TEST_CASE("up and down sets") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  CHECK(p1.up(el(p1, "b")) == set(p1, "{b, c, d}"));
  CHECK(p1.down(el(p1, "c")) == set(p1, "{a, b, c, X(0..)}"));
  CHECK(p2.up(el(p2, "Y1(2)")) == set(p2, "{top, Y1(2..)}"));
}

TEST_CASE("symset operations") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  CHECK(p1.empty_set().complement() == p1.universe());
  CHECK((p2.down_set(p2.ladder_set(0)) & p2.down(el(p2, "Y2(0)"))).empty());
  CHECK(p1.is_upper(set(p1, "{d}")));
  CHECK_FALSE(p1.is_upper(set(p1, "{c}")));
  CHECK(p1.format(set(p1, "{X(4..), X(0..2), a}")) == "{a, X(0..2), X(4..)}");
}

TEST_CASE("sup_of_shape") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  CHECK(sup_of_shape(p1, DirectedShape::tails({0})) == el(p1, "c"));
  CHECK(sup_of_shape(p2, DirectedShape::tails({0})) == el(p2, "top"));
  CHECK_FALSE(sup_of_shape(fx::omega(), DirectedShape::tails({0})).has_value());
  CHECK_THROWS_AS(sup_of_shape(p2, DirectedShape::tails({0, 1})), Error);
}

TEST_CASE("sup_basis") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  auto b = sup_basis(p1, el(p1, "c"));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == DirectedShape::max_of(el(p1, "c")));
  CHECK(b[1] == DirectedShape::tails({0}));
  auto t = sup_basis(p2, el(p2, "top"));
  REQUIRE(t.size() == 3);
  CHECK(t[1] == DirectedShape::tails({0}));
  CHECK(t[2] == DirectedShape::tails({1}));
  CHECK(sup_basis(p1, el(p1, "b")).size() == 1);
}

TEST_CASE("uniformity threshold") {
  CHECK(fx::p2().uniformity_threshold() == 4);
  CHECK(fx::p1().uniformity_threshold() == 3);
  RawPresentation raw = parse_presentation("poset q { ladder A B; rel { A <= B shift -5; B <= A tail 3; } }");
  CHECK(uniformity_threshold_raw(raw) == 9);
}

TEST_CASE("is_dcpo") {
  CHECK(is_dcpo(fx::p1()).holds);
  CHECK(is_dcpo(fx::p2()).holds);
  auto o = is_dcpo(fx::omega());
  CHECK_FALSE(o.holds);
  CHECK(o.witness == DirectedShape::tails({0}));
}

TEST_CASE("truncate") {
  CHECK(truncate(fx::p1(), 0).size() == 5);
  CHECK(truncate(fx::p2(), 1).size() == 5);
  auto t = truncate(fx::p1(), 2);
  CHECK(t.less(t.index("X(2)"), t.index("c")));
}

TEST_CASE("order axioms and shapes on random presentations") {
  for (const auto& p : gen::random_presentations(60, 3)) {
    const Index d = p.uniformity_threshold() + 3;
    auto pts = p.scan_points(d);
    for (Elem x : pts)
      for (Elem y : pts) {
        if (x != y) CHECK_FALSE((p.leq(x, y) && p.leq(y, x)));
        if (!p.leq(x, y)) continue;
        for (Elem z : pts)
          if (p.leq(y, z)) CHECK(p.leq(x, z));
      }
    for (Elem y : pts)
      for (const auto& s : sup_basis(p, y)) {
        CHECK(shape_directed(p, s));
        CHECK(sup_of_shape(p, s) == y);
        if (!s.is_max()) {
          // sup does not depend on where the tails start
          std::vector<Index> starts(s.ladders.size(), 3);
          CHECK(sup_of_shape(p, DirectedShape::tails(s.ladders, starts)) == y);
        }
      }
  }
}

TEST_CASE("basis completeness on truncations") {
  // Finite directed sets have a maximum, so only the infinite ones matter:
  // a directed union of ladders with supremum y dominates a declared shape.
  for (const auto& p : gen::random_presentations(60, 5)) {
    const int nl = p.num_ladders();
    for (unsigned mask = 1; mask < (1u << nl); ++mask) {
      std::vector<int> s;
      for (int l = 0; l < nl; ++l)
        if (mask & (1u << l)) s.push_back(l);
      auto shape = DirectedShape::tails(s);
      if (!shape_directed(p, shape)) continue;
      auto y = sup_of_shape(p, shape);
      if (!y) continue;
      SymSet d = shape_down(p, shape);
      bool dominated = false;
      for (const auto& e : sup_basis(p, *y)) dominated = dominated || shape_set(p, e).subset_of(d);
      CHECK(dominated);
    }
  }
}
