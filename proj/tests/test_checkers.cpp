#include <doctest.h>

#include <random>

#include "posetlab/checkers.hpp"
#include "posetlab/error.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace posetlab;
using fx::el;
using fx::set;

TEST_CASE("exactness") {
  CHECK(is_exact(fx::p1()).holds);
  auto e = is_exact(fx::p2());
  CHECK_FALSE(e.holds);
  CHECK(e.witness == el(fx::p2(), "top"));
  CHECK(is_exact(fx::p3()).holds);
}

TEST_CASE("quasiexactness") {
  CHECK(quasiexact_at(fx::p2(), el(fx::p2(), "top")));
  CHECK(is_quasiexact(fx::p1()).holds);
  CHECK(is_quasiexact(fx::one()).holds);
  // the family F_n = {Y1(n), Y2(n)} hits every condition at top
  auto& p2 = fx::p2();
  auto spec = fin_w_spec(p2, el(p2, "top"));
  SymSet meet = p2.universe();
  for (Index n = 0; n < 8; ++n) {
    SymSet f = p2.set_of({Elem::ladder(0, n), Elem::ladder(1, n)});
    CHECK(satisfies(p2, spec, f));
    meet = meet & p2.up_set(f);
  }
  // past index 7 the finite intersection still has ladder tails
  CHECK(meet.points(6) == std::vector<Elem>{el(p2, "top")});
}

TEST_CASE("quasiexact_equiv_suite") {
  for (auto* p : {&fx::p1(), &fx::p2(), &fx::p3()}) CHECK(quasiexact_equiv_suite(*p) == std::array<bool, 4>{true, true, true, true});
  CHECK_THROWS_AS(quasiexact_equiv_suite(fx::omega()), Error);
}

TEST_CASE("quasicontinuity and continuity") {
  CHECK(is_quasicontinuous(fx::p1()).holds);
  CHECK(is_quasicontinuous(fx::p2()).holds);
  CHECK_FALSE(is_continuous(fx::p1()).holds);
  CHECK(is_continuous(fx::p3()).holds);
  CHECK_THROWS_AS(is_quasicontinuous(fx::omega()), Error);
}

TEST_CASE("meet continuity") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  auto mc = meet_continuous(p1);
  REQUIRE_FALSE(mc.holds);
  CHECK(mc.witness->x == el(p1, "b"));
  CHECK(mc.witness->shape == DirectedShape::tails({0}));
  CHECK((p1.down_set(p1.ladder_set(0)) & p1.down(el(p1, "b"))).empty());
  auto mmc = moderately_meet_continuous(p2);
  REQUIRE_FALSE(mmc.holds);
  CHECK(mmc.witness->x == el(p2, "Y2(0)"));
  CHECK(mmc.witness->shape == DirectedShape::tails({0}));
  CHECK(moderately_meet_continuous(fx::p3()).holds);
}

TEST_CASE("finitary reduction") {
  auto& p1 = fx::p1();
  auto& p2 = fx::p2();
  CHECK(finitary_wwb_reduction(p2, p2.ladder_set(0) | p2.ladder_set(1), el(p2, "top")) == set(p2, "{Y1(0), Y2(0)}"));
  CHECK(finitary_wwb_reduction(p1, p1.ladder_set(0), el(p1, "c")) == set(p1, "{X(0)}"));
  CHECK(finitary_wwb_reduction(p1, set(p1, "{a}"), el(p1, "b")) == set(p1, "{a}"));
  CHECK_THROWS_AS(finitary_wwb_reduction(p1, set(p1, "{a}"), el(p1, "c")), Error);
}

TEST_CASE("antichain bound") {
  CHECK(antichain_bound(fx::p1()) == 5);
  CHECK(antichain_bound(fx::p2()) == 3);
  CHECK(antichain_bound(fx::p3()) == 2);
}

TEST_CASE("theorem_suite reports") {
  auto r1 = theorem_suite(fx::p1());
  CHECK(r1.value("exact") == true);
  CHECK(r1.value("quasiexact") == true);
  CHECK(r1.value("quasicontinuous") == true);
  CHECK(r1.value("weakly_increasing") == false);
  CHECK(r1.value("meet_continuous") == false);
  CHECK(r1.value("moderately_meet_continuous") == false);
  auto r2 = theorem_suite(fx::p2());
  CHECK(r2.value("exact") == false);
  CHECK(r2.value("quasiexact") == true);
  CHECK(r2.value("quasicontinuous") == true);
  CHECK(r2.value("weakly_increasing") == true);
  CHECK(r2.value("wwb_topology_exists") == false);
  auto ro = theorem_suite(fx::omega());
  CHECK(ro.value("dcpo") == false);
  CHECK(ro.find("quasicontinuous")->state == PropState::kNotApplicable);
}

TEST_CASE("implications on random dcpos") {
  for (const auto& p : gen::random_presentations(200, 41, true)) {
    INFO(p.name());
    bool exact = is_exact(p).holds, qe = is_quasiexact(p).holds, qc = is_quasicontinuous(p).holds;
    CHECK(qe);
    CHECK(quasiexact_equiv_suite(p) == std::array<bool, 4>{qe, qe, qe, qe});
    if (exact) CHECK(qe);
    if (qc) CHECK(qe);
    bool mmc = moderately_meet_continuous(p).holds;
    if (mmc && qe) {
      CHECK(exact);
      CHECK(meet_continuous(p).holds);
      if (weakly_increasing(p).holds) CHECK(is_continuous(p).holds);
    }
    // shape form of exactness agrees on dcpos
    for (Elem x : p.scan_points(p.uniformity_threshold() + 1)) CHECK(exact_at(p, x) == exact_at_shapes(p, x));
  }
}

TEST_CASE("meet continuity against the definition") {
  int seen[2][2] = {};
  for (const auto& p : gen::random_presentations(60, 43, true)) {
    INFO(p.name());
    brute::MeetOracle o(p, p.uniformity_threshold() + 3);
    bool mc = meet_continuous(p).holds, mmc = moderately_meet_continuous(p).holds;
    CHECK(mc == o.meet_continuous(false));
    CHECK(mmc == o.meet_continuous(true));
    ++seen[mc][mmc];
  }
  CHECK(seen[0][0] + seen[0][1] > 0);
  CHECK(seen[1][0] + seen[1][1] > 0);
  CHECK(seen[0][0] + seen[1][0] > 0);
  GenConfig cfg;
  cfg.max_ladders = 0;
  for (std::uint64_t i = 0; i < 30; ++i)
    if (auto p = random_presentation(cfg, i)) CHECK(meet_continuous(*p).holds);
}

TEST_CASE("directed families of finite sets below a limit are caught by wwb") {
  // F_n = {Lad(k,n) : sup of ladder k is x} is directed with meet of up-sets
  // up(x); any finite G weakly way below x contains some F_n in up(G).
  std::mt19937_64 rng(47);
  std::size_t cases = 0;
  for (const auto& p : gen::random_presentations(120, 53, true)) {
    const Index h = p.uniformity_threshold() + 3;
    for (Elem x : p.limit_points()) {
      auto ks = p.ladders_with_sup(x);
      for (int t = 0; t < 10; ++t) {
        SymSet g = gen::random_finite(rng, p, 3, h);
        if (!weak_way_below(p, g, x)) continue;
        ++cases;
        SymSet up_g = p.up_set(g);
        bool some = false;
        for (Index n = 0; n <= h && !some; ++n) {
          bool all = true;
          for (int k : ks) all = all && up_g.contains(Elem::ladder(k, n));
          some = all;
        }
        CHECK(some);
      }
    }
  }
  CHECK(cases > 20);
}
