#include "posetlab/checkers.hpp"

#include <algorithm>

#include "posetlab/error.hpp"
#include "posetlab/topology.hpp"

namespace posetlab {

namespace {

using Json = nlohmann::ordered_json;

std::vector<Elem> all_representatives(const LadderPresentation& p) {
  return p.scan_points(p.uniformity_threshold() + 1);
}

// Decides "the hitting family for x is directed and its up-sets meet in up(x)".
// A finite F belongs to the family iff x in up(F) and F meets each condition.
// Intersection: for y outside up(x), pick from each condition an element not
// below y (together with x itself).  Directedness: each condition is directed.
bool hitting_family_ok(const LadderPresentation& p, Elem x, std::vector<SymSet> conds, bool restrict_down) {
  SymSet down_x = p.down(x);
  if (restrict_down)
    for (auto& c : conds) c = c & down_x;
  conds.push_back(down_x);
  for (const auto& c : conds)
    if (c.empty() || !p.is_directed(c)) return false;
  SymSet outside = p.up(x).complement();
  std::vector<const SymSet*> sets{&outside};
  for (const auto& c : conds) sets.push_back(&c);
  for (Elem y : representatives(p, outside, horizon(p, sets))) {
    SymSet down_y = p.down(y);
    for (const auto& c : conds)
      if (c.subset_of(down_y)) return false;
  }
  return true;
}

// Intersection of up(F_n) over the chain F_n, from two consecutive levels past
// the horizon: ladder parts whose tail start still moves vanish in the limit.
SymSet limit_of_ups(const LadderPresentation& p, const SymSet& a, const SymSet& b) {
  SymSet out = a & b;
  for (int i = 0; i < p.num_ladders(); ++i)
    if (a.ladder(i).min() != b.ladder(i).min()) out.ladder(i) = IndexSet{};
  return out;
}

// The explicit directed subfamily {F_n}: {x} for non-limit x, otherwise the
// level-n points of the ladders converging to x.
bool explicit_family_ok(const LadderPresentation& p, Elem x, bool restrict_down) {
  auto ks = p.ladders_with_sup(x);
  SymSet down_x = p.down(x);
  if (ks.empty()) {
    SymSet f = p.singleton(x);
    return weak_way_below(p, f, x) && (!restrict_down || f.subset_of(down_x)) && p.up_set(f) == p.up(x);
  }
  const Index r = p.uniformity_threshold() + 2;
  auto level = [&](Index n) {
    SymSet f = p.empty_set();
    for (int k : ks) f.insert(Elem::ladder(k, n));
    return f;
  };
  SymSet f0 = level(r), f1 = level(r + 1);
  if (!weak_way_below(p, f0, x) || !weak_way_below(p, f1, x)) return false;
  if (restrict_down && !(f0 | f1).subset_of(down_x)) return false;
  if (!p.up_set(f1).subset_of(p.up_set(f0))) return false;
  return limit_of_ups(p, p.up_set(f0), p.up_set(f1)) == p.up(x);
}

Json shape_json(const LadderPresentation& p, const DirectedShape& s) { return p.format(s); }

Json meet_json(const LadderPresentation& p, const MeetWitness& w) {
  Json j;
  j["x"] = p.format(w.x);
  j["shape"] = p.format(w.shape);
  return j;
}

void require_dcpo(const LadderPresentation& p) {
  if (!is_dcpo(p).holds) throw Error(ErrorKind::kNotADcpo, p.name());
}

template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n || k == 0) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Verdict<MeetWitness> meet_scan(const LadderPresentation& p, bool moderate) {
  const Index depth = p.uniformity_threshold() + 1;
  for (int k = 0; k < p.num_ladders(); ++k) {
    const auto& s = p.ladder_sup(k);
    if (!s) continue;
    for (Elem x : p.downward_points(depth)) {
      if (!p.leq(x, *s)) continue;
      SymSet meet = p.approach(k) & p.down(x);
      bool in = moderate ? in_wf_closure(p, x, meet) : scott_closure(p, meet).contains(x);
      if (!in) return Verdict<MeetWitness>::no({x, DirectedShape::tails({k})});
    }
  }
  return Verdict<MeetWitness>::yes();
}

}  // namespace

bool exact_at(const LadderPresentation& p, Elem x) {
  SymSet wd = wwb_down(p, x);
  if (wd.empty() || !p.is_directed(wd)) return false;
  return p.sup(wd) == x;
}

bool exact_at_shapes(const LadderPresentation& p, Elem x) {
  SymSet wd = wwb_down(p, x);
  for (const auto& e : sup_basis(p, x))
    if (e.is_max() ? wd.contains(x) : shape_set(p, e).subset_of(wd)) return true;
  return false;
}

Verdict<Elem> is_exact(const LadderPresentation& p) {
  std::string note = is_dcpo(p).holds ? "" : "NotADcpo: exactness characterization assumes a dcpo";
  for (Elem x : all_representatives(p))
    if (!exact_at(p, x)) return {false, x, note};
  return {true, std::nullopt, note};
}

bool quasiexact_at(const LadderPresentation& p, Elem x) {
  return hitting_family_ok(p, x, fin_w_spec(p, x).conditions, false);
}

Verdict<Elem> is_quasiexact(const LadderPresentation& p) {
  for (Elem x : all_representatives(p))
    if (!quasiexact_at(p, x)) return Verdict<Elem>::no(x);
  return Verdict<Elem>::yes();
}

std::array<bool, 4> quasiexact_equiv_suite(const LadderPresentation& p) {
  require_dcpo(p);
  std::array<bool, 4> forms{true, true, true, true};
  for (Elem x : all_representatives(p)) {
    auto conds = fin_w_spec(p, x).conditions;
    forms[0] = forms[0] && hitting_family_ok(p, x, conds, false);
    forms[1] = forms[1] && hitting_family_ok(p, x, conds, true);
    forms[2] = forms[2] && explicit_family_ok(p, x, false);
    forms[3] = forms[3] && explicit_family_ok(p, x, true);
  }
  if (!std::all_of(forms.begin(), forms.end(), [&](bool b) { return b == forms[0]; }))
    throw Error(ErrorKind::kImplicationViolation, p.name() + ": quasiexactness forms disagree");
  return forms;
}

bool quasicontinuous_at(const LadderPresentation& p, Elem x) {
  return hitting_family_ok(p, x, fin_spec(p, x).conditions, false);
}

Verdict<Elem> is_quasicontinuous(const LadderPresentation& p) {
  require_dcpo(p);
  for (Elem x : all_representatives(p))
    if (!quasicontinuous_at(p, x)) return Verdict<Elem>::no(x);
  return Verdict<Elem>::yes();
}

Verdict<Elem> is_continuous(const LadderPresentation& p) {
  require_dcpo(p);
  for (Elem x : all_representatives(p)) {
    SymSet wb = wb_down(p, x);
    if (wb.empty() || !p.is_directed(wb) || p.sup(wb) != x) return Verdict<Elem>::no(x);
  }
  return Verdict<Elem>::yes();
}

Verdict<MeetWitness> meet_continuous(const LadderPresentation& p) { return meet_scan(p, false); }

Verdict<MeetWitness> moderately_meet_continuous(const LadderPresentation& p) {
  if (!is_quasiexact(p).holds) throw Error(ErrorKind::kWfTopologyUndefined, p.name() + " is not quasiexact");
  return meet_scan(p, true);
}

std::optional<SymSet> finitary_wwb_reduction(const LadderPresentation& p, const SymSet& h, Elem x) {
  if (!weak_way_below(p, h, x))
    throw Error(ErrorKind::kPreconditionFailed, "H is not weakly way below " + p.format(x));
  HittingSpec spec = fin_w_spec(p, x);
  SymSet up_h = p.up_set(h);
  std::vector<const SymSet*> sets{&up_h};
  for (const auto& c : spec.conditions) sets.push_back(&c);
  auto cand = representatives(p, up_h, horizon(p, sets));
  std::optional<SymSet> found;
  for (std::size_t k = 1; k <= spec.conditions.size() + 1 && !found; ++k)
    for_each_combination(cand.size(), k, [&](const std::vector<std::size_t>& idx) {
      SymSet f = p.empty_set();
      for (std::size_t i : idx) f.insert(cand[i]);
      if (!satisfies(p, spec, f)) return false;
      found = f;
      return true;
    });
  return found;
}

Index antichain_bound(const LadderPresentation& p) { return p.num_base() + p.num_ladders(); }

PropertyReport property_report(const LadderPresentation& p) {
  PropertyReport r = PropertyReport::blank(p.name());
  auto elem = [&](const std::optional<Elem>& e) -> std::optional<Json> {
    if (!e) return std::nullopt;
    return Json(p.format(*e));
  };

  auto dcpo = is_dcpo(p);
  r.set("dcpo", dcpo.holds, dcpo.witness ? std::optional<Json>(shape_json(p, *dcpo.witness)) : std::nullopt);
  auto exact = is_exact(p);
  r.set("exact", exact.holds, elem(exact.witness));
  auto qe = is_quasiexact(p);
  r.set("quasiexact", qe.holds, elem(qe.witness));
  if (dcpo.holds) {
    auto qc = is_quasicontinuous(p);
    r.set("quasicontinuous", qc.holds, elem(qc.witness));
    auto c = is_continuous(p);
    r.set("continuous", c.holds, elem(c.witness));
  } else {
    r.set_state("quasicontinuous", PropState::kNotApplicable);
    r.set_state("continuous", PropState::kNotApplicable);
  }
  auto mc = meet_continuous(p);
  r.set("meet_continuous", mc.holds, mc.witness ? std::optional<Json>(meet_json(p, *mc.witness)) : std::nullopt);
  if (qe.holds) {
    auto mmc = meet_scan(p, true);
    r.set("moderately_meet_continuous", mmc.holds,
          mmc.witness ? std::optional<Json>(meet_json(p, *mmc.witness)) : std::nullopt);
  } else {
    r.set_state("moderately_meet_continuous", PropState::kNotApplicable);
  }
  auto wi = weakly_increasing(p);
  std::optional<Json> quad;
  if (wi.witness) {
    const auto& w = *wi.witness;
    quad = Json::array({p.format(w.x), p.format(w.y), p.format(w.z), p.format(w.u)});
  }
  r.set("weakly_increasing", wi.holds, quad);
  auto wwb = wwb_topology_exists(p);
  r.set("wwb_topology_exists", wwb.holds, elem(wwb.witness));

  if (r.is("moderately_meet_continuous") && qe.holds && !wwb.holds)
    r.anomalies.push_back("moderately meet continuous and quasiexact, but the wwb family generates no topology");
  return r;
}

PropertyReport theorem_suite(const LadderPresentation& p, const SuiteOptions& opts) {
  PropertyReport r = property_report(p);
  auto violated = [&](const std::string& what) {
    throw Error(ErrorKind::kImplicationViolation, p.name() + ": " + what);
  };
  const bool dcpo = r.is("dcpo"), exact = r.is("exact"), qe = r.is("quasiexact");
  const bool mmc = r.is("moderately_meet_continuous"), wi = r.is("weakly_increasing");
  if (dcpo) {
    if (exact && !qe) violated("exact dcpo that is not quasiexact");
    if (r.is("quasicontinuous") && !qe) violated("quasicontinuous domain that is not quasiexact");
    if (!qe) violated("ladder dcpo that is not quasiexact (antichains are bounded)");
    if (mmc && qe && wi && !r.is("continuous")) violated("mmc, quasiexact, weakly increasing dcpo that is not continuous");
    quasiexact_equiv_suite(p);
  }
  if (mmc && qe && !(exact && r.is("meet_continuous"))) violated("mmc and quasiexact but not exact and meet continuous");
  if (qe) {
    if (exact && !inclusion_check(p, TopologyTag::kScott, TopologyTag::kWf, opts.max_opens).holds)
      violated("exact but the Scott topology is not inside the wf topology");
    if (r.is("wwb_topology_exists")) {
      if (!inclusion_check(p, TopologyTag::kWwb, TopologyTag::kWf).holds) violated("wwb topology not inside wf topology");
      if (mmc) {
        if (!inclusion_check(p, TopologyTag::kScott, TopologyTag::kWwb, opts.max_opens).holds)
          violated("mmc and quasiexact but Scott topology not inside wwb topology");
        if (!inclusion_check(p, TopologyTag::kWf, TopologyTag::kWwb, opts.max_opens).holds)
          violated("mmc and quasiexact but wf topology not inside wwb topology");
      }
    }
  }
  return r;
}

}  // namespace posetlab
