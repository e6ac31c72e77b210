#include "posetlab/topology.hpp"

#include <algorithm>
#include <functional>

#include "posetlab/checkers.hpp"
#include "posetlab/error.hpp"
#include "posetlab/relations.hpp"

namespace posetlab {

namespace {

// Evaluates a membership predicate on bases and ladder indices 0..r, and
// extends the ladder parts past r by the value at r.
SymSet tabulate(const LadderPresentation& p, Index r, const std::function<bool(Elem)>& member) {
  SymSet out = p.empty_set();
  for (int b = 0; b < p.num_base(); ++b)
    if (member(Elem::base(b))) out.set_base(b, true);
  for (int i = 0; i < p.num_ladders(); ++i) {
    IndexSet part;
    for (Index n = 0; n < r; ++n)
      if (member(Elem::ladder(i, n))) part = part | IndexSet::point(n);
    if (member(Elem::ladder(i, r))) part = part | IndexSet::tail(r);
    out.ladder(i) = part;
  }
  return out;
}

std::vector<SymSet> dedupe(std::vector<SymSet> v) {
  std::vector<SymSet> out;
  for (auto& s : v)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  return out;
}

std::vector<SymSet> sample(std::vector<SymSet> v, std::size_t max_opens) {
  if (max_opens == 0 || v.size() <= max_opens) return v;
  std::vector<SymSet> out;
  for (std::size_t i = 0; i < max_opens; ++i) out.push_back(std::move(v[i * v.size() / max_opens]));
  return out;
}

}  // namespace

const char* to_string(TopologyTag t) {
  switch (t) {
    case TopologyTag::kScott: return "scott";
    case TopologyTag::kWwb: return "wwb";
    case TopologyTag::kWf: return "wf";
  }
  return "?";
}

bool is_scott_open(const LadderPresentation& p, const SymSet& u) {
  if (!p.is_upper(u)) return false;
  for (int k = 0; k < p.num_ladders(); ++k) {
    const auto& s = p.ladder_sup(k);
    if (s && u.contains(*s) && u.ladder(k).empty()) return false;
  }
  return true;
}

SymSet scott_closure(const LadderPresentation& p, const SymSet& a) {
  SymSet c = p.down_set(a);
  while (true) {
    SymSet next = c;
    for (int k = 0; k < p.num_ladders(); ++k) {
      const auto& s = p.ladder_sup(k);
      if (s && c.ladder(k).infinite()) next.insert(*s);
    }
    next = p.down_set(next);
    if (next == c) return c;
    c = std::move(next);
  }
}

Verdict<Elem> wwb_topology_exists(const LadderPresentation& p) {
  const Index r = p.uniformity_threshold() + 2;
  const auto pts = p.scan_points(r);
  std::vector<SymSet> ups;
  for (Elem x : pts) ups.push_back(wwb_up(p, p.singleton(x)));
  const std::size_t n = pts.size();
  std::vector<char> sub(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub[i * n + j] = ups[i].subset_of(ups[j]);

  for (std::size_t ai = 0; ai < n; ++ai) {
    Elem a = pts[ai];
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < n; ++i)
      if (ups[i].contains(a)) cand.push_back(i);
    if (cand.empty()) return Verdict<Elem>::no(a, "not covered");
    for (std::size_t i : cand)
      for (std::size_t j : cand) {
        bool ok = std::any_of(cand.begin(), cand.end(), [&](std::size_t k) { return sub[k * n + i] && sub[k * n + j]; });
        if (!ok) return Verdict<Elem>::no(a, "not point-filtered");
      }
  }
  return Verdict<Elem>::yes();
}

void detail::require_topology(const LadderPresentation& p, TopologyTag tag) {
  if (tag == TopologyTag::kWf && !is_quasiexact(p).holds)
    throw Error(ErrorKind::kWfTopologyUndefined, p.name() + " is not quasiexact");
  if (tag == TopologyTag::kWwb && !wwb_topology_exists(p).holds)
    throw Error(ErrorKind::kWwbTopologyUndefined, p.name());
}

BasicOpen wf_basic(const LadderPresentation& p, const std::vector<Elem>& f) {
  if (f.empty()) throw Error(ErrorKind::kEmptySet, "wf basic needs a nonempty generator");
  detail::require_topology(p, TopologyTag::kWf);
  return {TopologyTag::kWf, f, wwb_up(p, p.set_of(f))};
}

BasicOpen wwb_basic(const LadderPresentation& p, Elem x) {
  detail::require_topology(p, TopologyTag::kWwb);
  return {TopologyTag::kWwb, {x}, wwb_up(p, p.singleton(x))};
}

SymSet wf_neighbourhood(const LadderPresentation& p, Elem a, Index r) {
  auto ks = p.ladders_with_sup(a);
  if (ks.empty()) return wwb_up(p, p.singleton(a));
  SymSet f = p.empty_set();
  for (int k : ks) f.insert(Elem::ladder(k, r));
  return wwb_up(p, f);
}

bool in_wf_closure(const LadderPresentation& p, Elem x, const SymSet& s) {
  Index r = horizon(p, {&s}) + 1;
  return wf_neighbourhood(p, x, r).intersects(s);
}

SymSet detail::wf_interior(const LadderPresentation& p, const SymSet& b) {
  Index r = horizon(p, {&b}) + 1;
  return tabulate(p, r, [&](Elem a) { return wf_neighbourhood(p, a, r).subset_of(b); });
}

SymSet detail::wwb_interior(const LadderPresentation& p, const SymSet& b) {
  Index r = horizon(p, {&b}) + 1;
  SymSet good = p.empty_set();  // points x with wwb_up({x}) inside b
  for (Elem x : p.scan_points(r))
    if (wwb_up(p, p.singleton(x)).subset_of(b)) good.insert(x);
  return tabulate(p, r, [&](Elem a) { return wwb_down(p, a).intersects(good); });
}

SymSet interior(const LadderPresentation& p, TopologyTag tag, const SymSet& a) {
  switch (tag) {
    case TopologyTag::kScott: return scott_closure(p, a.complement()).complement();
    case TopologyTag::kWf:
      detail::require_topology(p, tag);
      return detail::wf_interior(p, a);
    case TopologyTag::kWwb:
      detail::require_topology(p, tag);
      return detail::wwb_interior(p, a);
  }
  return a;
}

SymSet closure(const LadderPresentation& p, TopologyTag tag, const SymSet& a) {
  return interior(p, tag, a.complement()).complement();
}

std::vector<SymSet> canonical_opens(const LadderPresentation& p, TopologyTag tag, std::size_t max_opens) {
  const Index top = p.uniformity_threshold() + 1;
  std::vector<SymSet> out;
  if (tag == TopologyTag::kScott) {
    const int nb = p.num_base(), nl = p.num_ladders();
    std::vector<SymSet> uppers;
    for (unsigned long mask = 0; mask < (1ul << nb); ++mask) {
      SymSet u = p.empty_set();
      for (int b = 0; b < nb; ++b)
        if (mask & (1ul << b)) u.set_base(b, true);
      if (p.up_set(u).base_members() == u.base_members()) uppers.push_back(u);
    }
    // odometer over ladder starts: -1 means the ladder part is empty
    std::vector<Index> start(static_cast<std::size_t>(nl), -1);
    while (true) {
      for (const auto& base : uppers) {
        SymSet u = base;
        for (int i = 0; i < nl; ++i)
          if (start[static_cast<std::size_t>(i)] >= 0) u.ladder(i) = IndexSet::tail(start[static_cast<std::size_t>(i)]);
        if (is_scott_open(p, u)) out.push_back(u);
      }
      int i = 0;
      while (i < nl && start[static_cast<std::size_t>(i)] == top) start[static_cast<std::size_t>(i++)] = -1;
      if (i == nl) break;
      ++start[static_cast<std::size_t>(i)];
    }
  } else if (tag == TopologyTag::kWwb) {
    for (Elem x : p.scan_points(top)) out.push_back(wwb_up(p, p.singleton(x)));
  } else {
    auto pts = p.scan_points(top);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out.push_back(wwb_up(p, p.singleton(pts[i])));
      for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(wwb_up(p, p.set_of({pts[i], pts[j]})));
    }
  }
  return sample(dedupe(std::move(out)), max_opens);
}

Verdict<SymSet> inclusion_check(const LadderPresentation& p, TopologyTag sub, TopologyTag super, std::size_t max_opens) {
  detail::require_topology(p, sub);
  detail::require_topology(p, super);
  for (const auto& u : canonical_opens(p, sub, max_opens)) {
    SymSet in = super == TopologyTag::kScott ? interior(p, super, u)
                : super == TopologyTag::kWf  ? detail::wf_interior(p, u)
                                             : detail::wwb_interior(p, u);
    if (in != u) return Verdict<SymSet>::no(u);
  }
  return Verdict<SymSet>::yes();
}

bool basic_interior_identity(const LadderPresentation& p, const std::vector<Elem>& f) {
  if (f.empty()) throw Error(ErrorKind::kEmptySet, "empty generator");
  if (!is_quasiexact(p).holds || !moderately_meet_continuous(p).holds)
    throw Error(ErrorKind::kPreconditionFailed, p.name() + " is not moderately meet continuous and quasiexact");
  SymSet fs = p.set_of(f);
  SymSet whole = wwb_up(p, fs);
  SymSet pointwise = p.empty_set();
  for (Elem x : f) pointwise = pointwise | wwb_up(p, p.singleton(x));
  SymSet in = detail::wf_interior(p, p.up_set(fs));
  return whole == pointwise && pointwise == in;
}

}  // namespace posetlab
