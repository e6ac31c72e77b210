#include "posetlab/ladder.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

int lookup(const std::vector<std::string>& names, std::string_view n) {
  auto it = std::lower_bound(names.begin(), names.end(), n);
  if (it == names.end() || *it != n) return -1;
  return static_cast<int>(it - names.begin());
}

Index parse_nat(std::string_view s) {
  Index v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) return -1;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

IndexSet upto_or_all(Index last) {
  if (last < 0) return {};
  if (last == kInf) return IndexSet::all();
  return IndexSet::upto(last);
}

}  // namespace

DirectedShape DirectedShape::tails(std::vector<int> ladders, std::vector<Index> starts) {
  if (starts.empty()) starts.assign(ladders.size(), 0);
  if (starts.size() != ladders.size() || ladders.empty())
    throw Error(ErrorKind::kMalformedShape, "tails shape needs one start per ladder");
  std::vector<std::pair<int, Index>> z;
  for (std::size_t i = 0; i < ladders.size(); ++i) z.emplace_back(ladders[i], starts[i]);
  std::sort(z.begin(), z.end());
  DirectedShape s;
  s.kind = Kind::kTails;
  for (auto [l, st] : z) {
    if (!s.ladders.empty() && s.ladders.back() == l)
      throw Error(ErrorKind::kMalformedShape, "ladder repeated in tails shape");
    s.ladders.push_back(l);
    s.starts.push_back(st);
  }
  return s;
}

LadderPresentation LadderPresentation::validate(const RawPresentation& raw) {
  LadderPresentation p;
  p.raw_ = raw;
  p.base_names_ = raw.base_ids;
  p.ladder_names_ = raw.ladder_ids;
  std::sort(p.base_names_.begin(), p.base_names_.end());
  std::sort(p.ladder_names_.begin(), p.ladder_names_.end());
  {
    std::vector<std::string> all = p.base_names_;
    all.insert(all.end(), p.ladder_names_.begin(), p.ladder_names_.end());
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) throw Error(ErrorKind::kDuplicateId, *dup);
  }
  const int nb = p.num_base();
  const int nl = p.num_ladders();
  const int nn = nb + nl;
  p.rel_.assign(static_cast<std::size_t>(nn * nn), Staircase::never());
  auto at = [&](int u, int v) -> Staircase& { return p.rel_[static_cast<std::size_t>(u * nn + v)]; };
  auto node_of = [&](const std::string& id) -> int {
    if (int b = lookup(p.base_names_, id); b >= 0) return b;
    if (int l = lookup(p.ladder_names_, id); l >= 0) return nb + l;
    throw Error(ErrorKind::kUnknownId, id);
  };
  auto join = [&](int u, int v, const Staircase& s) { at(u, v) = Staircase::min(at(u, v), s); };

  for (const auto& [lo, hi] : raw.order) {
    int u = node_of(lo), v = node_of(hi);
    if (u >= nb || v >= nb) throw Error(ErrorKind::kInvalidRule, "order section relates base points only: " + lo + "<" + hi);
    if (u == v) throw Error(ErrorKind::kCycle, lo + "<" + hi);
    join(u, v, Staircase::constant(0));
  }
  for (const auto& r : raw.rels) {
    int u = node_of(r.lhs), v = node_of(r.rhs);
    bool lb = u < nb, rb = v < nb;
    auto bad = [&](const char* why) {
      return Error(ErrorKind::kInvalidRule, r.lhs + " <= " + r.rhs + ": " + why);
    };
    switch (r.kind) {
      case RelStmt::Kind::kFrom:
        if (!lb || rb) throw bad("'from' relates a base point to a ladder");
        join(u, v, Staircase::constant(r.value));
        break;
      case RelStmt::Kind::kUpto:
      case RelStmt::Kind::kAlways:
        if (lb || !rb) throw bad("'upto'/'always' relate a ladder to a base point");
        join(u, v, r.kind == RelStmt::Kind::kAlways ? Staircase::constant(0) : Staircase::upto(r.value, 0));
        break;
      case RelStmt::Kind::kShift:
      case RelStmt::Kind::kTail:
        if (lb || rb) throw bad("'shift'/'tail' relate two ladders");
        if (u == v) throw bad("a ladder is already a chain");
        join(u, v, r.kind == RelStmt::Kind::kShift ? Staircase::shift(r.value) : Staircase::constant(r.value));
        break;
    }
  }

  for (int k = 0; k < nn; ++k)
    for (int i = 0; i < nn; ++i) {
      if (at(i, k).is_never()) continue;
      for (int j = 0; j < nn; ++j) {
        if (at(k, j).is_never()) continue;
        join(i, j, at(i, k).then(at(k, j)));
      }
    }

  auto node_name = [&](int u) { return u < nb ? p.base_names_[static_cast<std::size_t>(u)] : p.ladder_names_[static_cast<std::size_t>(u - nb)]; };
  for (int u = 0; u < nn; ++u) {
    const Staircase& s = at(u, u);
    bool cyclic = u < nb ? s(0) != kInf : s.has_fixpoint_or_below();
    if (cyclic) throw Error(ErrorKind::kCycle, "antisymmetry fails through " + node_name(u));
  }
  for (int i = nb; i < nn; ++i)
    for (int j = nb; j < nn; ++j) {
      if (i == j) continue;
      const Staircase& s = at(i, j);
      if (!(s.is_never() || s.is_constant() || s.is_shift()))
        throw Error(ErrorKind::kInexpressibleClosure,
                    node_name(i) + " <= " + node_name(j) + " closes to " + s.debug_string());
    }

  Index max_c = 0;
  for (int u = 0; u < nn; ++u)
    for (int v = 0; v < nn; ++v) {
      if (u == v) continue;
      const Staircase& s = at(u, v);
      if (s.is_never()) continue;
      if (u < nb && v >= nb) max_c = std::max(max_c, s(0));
      if (u >= nb && v < nb && !s.is_total()) max_c = std::max(max_c, static_cast<Index>(s.prefix().size()) - 1);
      if (u >= nb && v >= nb) max_c = std::max(max_c, s.tail_value() < 0 ? -s.tail_value() : s.tail_value());
    }
  p.n_star_ = max_c + nl + 2;

  // order axioms on the truncation at N*
  auto pts = p.scan_points(p.n_star_);
  for (Elem x : pts)
    for (Elem y : pts) {
      if (x != y && p.leq(x, y) && p.leq(y, x))
        throw Error(ErrorKind::kCycle, p.format(x) + " and " + p.format(y) + " ordered both ways");
      if (!p.leq(x, y)) continue;
      for (Elem z : pts)
        if (p.leq(y, z) && !p.leq(x, z))
          throw Error(ErrorKind::kInexpressibleClosure, "transitivity fails at " + p.format(x) + ", " + p.format(z));
    }

  p.sups_.resize(static_cast<std::size_t>(nl));
  p.approach_.resize(static_cast<std::size_t>(nl));
  for (int k = 0; k < nl; ++k) {
    p.approach_[static_cast<std::size_t>(k)] = p.down_set(p.ladder_set(k));
    std::vector<Elem> cand;
    for (int b = 0; b < nb; ++b)
      if (at(nb + k, b) == Staircase::constant(0)) cand.push_back(Elem::base(b));
    for (int j = 0; j < nl; ++j)
      if (j != k && at(nb + k, nb + j).is_constant()) cand.push_back(Elem::ladder(j, at(nb + k, nb + j)(0)));
    for (Elem u : cand)
      if (std::all_of(cand.begin(), cand.end(), [&](Elem v) { return p.leq(u, v); })) {
        p.sups_[static_cast<std::size_t>(k)] = u;
        break;
      }
  }
  return p;
}

Index uniformity_threshold_raw(const RawPresentation& raw) {
  Index m = 0;
  for (const auto& r : raw.rels)
    if (r.kind != RelStmt::Kind::kAlways) m = std::max(m, r.value < 0 ? -r.value : r.value);
  return m + static_cast<Index>(raw.ladder_ids.size()) + 2;
}

std::optional<int> LadderPresentation::find_base(std::string_view name) const {
  int b = lookup(base_names_, name);
  if (b < 0) return std::nullopt;
  return b;
}

std::optional<int> LadderPresentation::find_ladder(std::string_view name) const {
  int l = lookup(ladder_names_, name);
  if (l < 0) return std::nullopt;
  return l;
}

Elem LadderPresentation::parse_elem(std::string_view text) const {
  std::string_view t = trim(text);
  auto open = t.find('(');
  if (open == std::string_view::npos) {
    if (auto b = find_base(t)) return Elem::base(*b);
    throw Error(ErrorKind::kUnknownElement, std::string(t));
  }
  if (t.back() != ')') throw Error(ErrorKind::kUnknownElement, std::string(t));
  auto id = trim(t.substr(0, open));
  auto l = find_ladder(id);
  Index n = parse_nat(trim(t.substr(open + 1, t.size() - open - 2)));
  if (!l || n < 0) throw Error(ErrorKind::kUnknownElement, std::string(t));
  return Elem::ladder(*l, n);
}

std::string LadderPresentation::format(Elem e) const {
  if (e.is_base()) return base_name(e.id);
  return ladder_name(e.id) + "(" + std::to_string(e.index) + ")";
}

std::string LadderPresentation::format(const SymSet& s) const {
  std::string out = "{";
  auto add = [&](const std::string& item) {
    if (out.size() > 1) out += ", ";
    out += item;
  };
  for (int b : s.base_members()) add(base_name(b));
  for (int i = 0; i < s.num_ladders(); ++i)
    for (const auto& seg : s.ladder(i).segments()) {
      const std::string& n = ladder_name(i);
      if (seg.hi == kInf)
        add(n + "(" + std::to_string(seg.lo) + "..)");
      else if (seg.lo == seg.hi)
        add(n + "(" + std::to_string(seg.lo) + ")");
      else
        add(n + "(" + std::to_string(seg.lo) + ".." + std::to_string(seg.hi) + ")");
    }
  return out + "}";
}

std::string LadderPresentation::format(const DirectedShape& s) const {
  if (s.is_max()) return "Max(" + format(s.max) + ")";
  std::string out = "Tails(";
  for (std::size_t i = 0; i < s.ladders.size(); ++i) {
    if (i) out += ",";
    out += ladder_name(s.ladders[i]);
    if (s.starts[i] != 0) out += "@" + std::to_string(s.starts[i]);
  }
  return out + ")";
}

SymSet LadderPresentation::parse_set(std::string_view text) const {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error(ErrorKind::kUnknownElement, "set literal must be braced: " + std::string(t));
  t = t.substr(1, t.size() - 2);
  SymSet s = empty_set();
  while (!trim(t).empty()) {
    auto comma = t.find(',');
    std::string_view item = trim(t.substr(0, comma));
    t = comma == std::string_view::npos ? std::string_view{} : t.substr(comma + 1);
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      s.insert(parse_elem(item));
      continue;
    }
    auto open = item.find('(');
    auto l = open == std::string_view::npos ? std::nullopt : find_ladder(trim(item.substr(0, open)));
    if (!l || item.back() != ')') throw Error(ErrorKind::kUnknownElement, std::string(item));
    Index lo = parse_nat(trim(item.substr(open + 1, dots - open - 1)));
    std::string_view hi_text = trim(item.substr(dots + 2, item.size() - dots - 3));
    Index hi = hi_text.empty() ? kInf : parse_nat(hi_text);
    if (lo < 0 || hi < 0) throw Error(ErrorKind::kUnknownElement, std::string(item));
    s.ladder(*l) = s.ladder(*l) | IndexSet::segment(lo, hi);
  }
  return s;
}

void LadderPresentation::check(Elem e) const {
  bool ok = e.is_base() ? e.id >= 0 && e.id < num_base() : e.id >= 0 && e.id < num_ladders() && e.index >= 0;
  if (!ok) throw Error(ErrorKind::kUnknownElement, "element outside presentation " + name());
}

const Staircase& LadderPresentation::rel(int from, int to) const {
  const int nn = num_base() + num_ladders();
  return rel_[static_cast<std::size_t>(from * nn + to)];
}

bool LadderPresentation::leq(Elem x, Elem y) const {
  check(x);
  check(y);
  if (x.is_ladder() && y.is_ladder() && x.id == y.id) return x.index <= y.index;
  if (x == y) return true;
  const Staircase& r = rel(node(x), node(y));
  Index need = r(x.is_ladder() ? x.index : 0);
  if (need == kInf) return false;
  return y.is_base() || y.index >= need;
}

SymSet LadderPresentation::singleton(Elem e) const {
  check(e);
  return SymSet::singleton(num_base(), num_ladders(), e);
}

SymSet LadderPresentation::set_of(const std::vector<Elem>& es) const {
  SymSet s = empty_set();
  for (Elem e : es) {
    check(e);
    s.insert(e);
  }
  return s;
}

SymSet LadderPresentation::ladder_set(int i, Index start) const {
  SymSet s = empty_set();
  s.ladder(i) = IndexSet::tail(start);
  return s;
}

SymSet LadderPresentation::down_set(const SymSet& a) const {
  const int nb = num_base(), nl = num_ladders();
  SymSet out = empty_set();
  for (int b : a.base_members()) {
    for (int c = 0; c < nb; ++c)
      if (c == b || rel(c, b)(0) == 0) out.set_base(c, true);
    for (int i = 0; i < nl; ++i) out.ladder(i) = out.ladder(i) | upto_or_all(rel(nb + i, b).last_finite());
  }
  for (int j = 0; j < nl; ++j) {
    auto top = a.ladder(j).max();
    if (!top) continue;
    for (int c = 0; c < nb; ++c)
      if (Index t = rel(c, nb + j)(0); t != kInf && t <= *top) out.set_base(c, true);
    for (int i = 0; i < nl; ++i) {
      Index last;
      if (i == j)
        last = *top;
      else
        last = *top == kInf ? rel(nb + i, nb + j).last_finite() : rel(nb + i, nb + j).last_at_most(*top);
      out.ladder(i) = out.ladder(i) | upto_or_all(last);
    }
  }
  return out;
}

SymSet LadderPresentation::up_set(const SymSet& a) const {
  const int nb = num_base(), nl = num_ladders();
  SymSet out = empty_set();
  for (int b : a.base_members()) {
    for (int c = 0; c < nb; ++c)
      if (c == b || rel(b, c)(0) == 0) out.set_base(c, true);
    for (int i = 0; i < nl; ++i)
      if (Index t = rel(b, nb + i)(0); t != kInf) out.ladder(i) = out.ladder(i) | IndexSet::tail(t);
  }
  for (int j = 0; j < nl; ++j) {
    auto lo = a.ladder(j).min();
    if (!lo) continue;
    for (int c = 0; c < nb; ++c)
      if (rel(nb + j, c)(*lo) == 0) out.set_base(c, true);
    for (int i = 0; i < nl; ++i) {
      Index t = i == j ? *lo : rel(nb + j, nb + i)(*lo);
      if (t != kInf) out.ladder(i) = out.ladder(i) | IndexSet::tail(t);
    }
  }
  return out;
}

SymSet LadderPresentation::upper_bounds(const SymSet& a) const {
  SymSet out = universe();
  for (int b : a.base_members()) out = out & up(Elem::base(b));
  for (int i = 0; i < num_ladders(); ++i) {
    auto top = a.ladder(i).max();
    if (!top) continue;
    if (*top == kInf)
      out = out & ladder_upper_bounds(i);
    else
      out = out & up(Elem::ladder(i, *top));
  }
  return out;
}

SymSet LadderPresentation::ladder_upper_bounds(int i) const {
  const int nb = num_base();
  SymSet out = empty_set();
  for (int b = 0; b < nb; ++b)
    if (rel(nb + i, b).is_total()) out.set_base(b, true);
  for (int j = 0; j < num_ladders(); ++j)
    if (j != i && rel(nb + i, nb + j).is_constant()) out.ladder(j) = IndexSet::tail(rel(nb + i, nb + j)(0));
  return out;
}

std::optional<Elem> LadderPresentation::greatest(const SymSet& a) const {
  std::vector<Elem> cand;
  for (int b : a.base_members()) cand.push_back(Elem::base(b));
  for (int i = 0; i < num_ladders(); ++i)
    if (auto m = a.ladder(i).max(); m && *m != kInf) cand.push_back(Elem::ladder(i, *m));
  for (Elem u : cand)
    if (a.subset_of(down(u))) return u;
  return std::nullopt;
}

std::optional<Elem> LadderPresentation::least(const SymSet& a) const {
  for (int b : a.base_members())
    if (a.subset_of(up(Elem::base(b)))) return Elem::base(b);
  for (int i = 0; i < num_ladders(); ++i)
    if (auto m = a.ladder(i).min())
      if (a.subset_of(up(Elem::ladder(i, *m)))) return Elem::ladder(i, *m);
  return std::nullopt;
}

bool LadderPresentation::is_directed(const SymSet& a) const {
  if (a.empty()) return false;
  if (greatest(a)) return true;
  // otherwise some infinite ladder part must be cofinal in a
  for (int i = 0; i < num_ladders(); ++i) {
    if (!a.ladder(i).infinite()) continue;
    SymSet part = empty_set();
    part.ladder(i) = a.ladder(i);
    if (a.subset_of(down_set(part))) return true;
  }
  return false;
}

std::optional<Elem> LadderPresentation::sup(const SymSet& a) const {
  if (a.empty()) throw Error(ErrorKind::kEmptySet, "supremum of empty set");
  return least(upper_bounds(a));
}

bool LadderPresentation::is_limit(Elem e) const {
  for (const auto& s : sups_)
    if (s && *s == e) return true;
  return false;
}

std::vector<Elem> LadderPresentation::limit_points() const {
  std::set<Elem> out;
  for (const auto& s : sups_)
    if (s) out.insert(*s);
  return {out.begin(), out.end()};
}

std::vector<int> LadderPresentation::ladders_with_sup(Elem e) const {
  std::vector<int> out;
  for (int k = 0; k < num_ladders(); ++k)
    if (sups_[static_cast<std::size_t>(k)] == e) out.push_back(k);
  return out;
}

std::optional<Elem> LadderPresentation::bottom() const {
  std::vector<Elem> cand;
  for (int b = 0; b < num_base(); ++b) cand.push_back(Elem::base(b));
  for (int i = 0; i < num_ladders(); ++i) cand.push_back(Elem::ladder(i, 0));
  for (Elem u : cand)
    if (std::all_of(cand.begin(), cand.end(), [&](Elem v) { return leq(u, v); })) return u;
  return std::nullopt;
}

std::vector<Elem> LadderPresentation::scan_points(Index depth) const {
  std::vector<Elem> out;
  for (int b = 0; b < num_base(); ++b) out.push_back(Elem::base(b));
  for (int i = 0; i < num_ladders(); ++i)
    for (Index n = 0; n <= depth; ++n) out.push_back(Elem::ladder(i, n));
  return out;
}

std::vector<Elem> LadderPresentation::downward_points(Index depth) const {
  std::vector<Elem> out;
  for (int i = num_ladders() - 1; i >= 0; --i)
    for (Index n = 0; n <= depth; ++n) out.push_back(Elem::ladder(i, n));
  for (int b = num_base() - 1; b >= 0; --b) out.push_back(Elem::base(b));
  return out;
}

std::optional<int> cofinal_ladder(const LadderPresentation& p, const std::vector<int>& s) {
  const int nb = p.num_base();
  for (int k : s) {
    bool ok = std::all_of(s.begin(), s.end(), [&](int i) { return i == k || p.rel(nb + i, nb + k).is_total(); });
    if (ok) return k;
  }
  return std::nullopt;
}

bool shape_directed(const LadderPresentation& p, const DirectedShape& s) {
  if (s.is_max()) return true;
  return cofinal_ladder(p, s.ladders).has_value();
}

std::optional<Elem> sup_of_shape(const LadderPresentation& p, const DirectedShape& s) {
  if (s.is_max()) {
    p.check(s.max);
    return s.max;
  }
  for (int l : s.ladders)
    if (l < 0 || l >= p.num_ladders()) throw Error(ErrorKind::kMalformedShape, "unknown ladder in shape");
  auto k = cofinal_ladder(p, s.ladders);
  if (!k) throw Error(ErrorKind::kMalformedShape, p.format(s) + " is not directed");
  return p.ladder_sup(*k);
}

std::vector<DirectedShape> sup_basis(const LadderPresentation& p, Elem y) {
  p.check(y);
  std::vector<DirectedShape> out{DirectedShape::max_of(y)};
  const int nl = p.num_ladders();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << nl); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < nl; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (auto& s : subsets) {
    auto k = cofinal_ladder(p, s);
    if (k && p.ladder_sup(*k) == y) out.push_back(DirectedShape::tails(s));
  }
  return out;
}

SymSet shape_set(const LadderPresentation& p, const DirectedShape& s) {
  if (s.is_max()) return p.singleton(s.max);
  SymSet out = p.empty_set();
  for (std::size_t i = 0; i < s.ladders.size(); ++i) out = out | p.ladder_set(s.ladders[i], s.starts[i]);
  return out;
}

SymSet shape_down(const LadderPresentation& p, const DirectedShape& s) {
  if (s.is_max()) return p.down(s.max);
  SymSet out = p.empty_set();
  for (int l : s.ladders) out = out | p.approach(l);
  return out;
}

Verdict<DirectedShape> is_dcpo(const LadderPresentation& p) {
  const int nl = p.num_ladders();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << nl); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < nl; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (auto& s : subsets) {
    auto k = cofinal_ladder(p, s);
    if (k && !p.ladder_sup(*k)) return Verdict<DirectedShape>::no(DirectedShape::tails(s));
  }
  return Verdict<DirectedShape>::yes();
}

FinPoset truncate(const LadderPresentation& p, Index depth) {
  auto pts = p.scan_points(depth);
  std::vector<std::string> names;
  for (Elem e : pts) names.push_back(p.format(e));
  std::vector<FinPoset::Pair> pairs;
  for (Elem x : pts)
    for (Elem y : pts)
      if (x != y && p.leq(x, y)) pairs.emplace_back(p.format(x), p.format(y));
  return FinPoset::build(std::move(names), pairs);
}

}  // namespace posetlab
