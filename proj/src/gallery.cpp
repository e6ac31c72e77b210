#include "posetlab/gallery.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "posetlab/checkers.hpp"
#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"

#ifndef POSETLAB_DATA_DIR
#define POSETLAB_DATA_DIR "data"
#endif

namespace posetlab {

namespace {

const std::map<std::string, std::string, std::less<>>& sources() {
  static const std::map<std::string, std::string, std::less<>> s{
      {"P1", "poset p1 { base a b c d; ladder X; order { a < b; b < c; c < d; } rel { X <= c always; } }"},
      {"P2", "poset p2 { base top; ladder Y1 Y2; rel { Y1 <= top always; Y2 <= top always; } }"},
      {"P3", "poset p3 { base t; ladder Z; rel { Z <= t always; } }"},
      {"ONE", "poset one { base o; }"},
  };
  return s;
}

// Splits at separators outside parentheses and braces.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    auto b = t.find_first_not_of(' ');
    auto e = t.find_last_not_of(' ');
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  }
  return out;
}

// "name(args)=rhs" with optional args and rhs.
struct PropertyCall {
  std::string name;
  std::vector<std::string> args;  // split on ';'
  std::optional<std::string> rhs;
};

PropertyCall parse_call(std::string_view text) {
  PropertyCall c;
  auto eq = split_top(text, '=');
  if (eq.size() > 2) throw Error(ErrorKind::kParse, "bad fact property: " + std::string(text));
  if (eq.size() == 2) c.rhs = eq[1];
  const std::string& head = eq[0];
  auto open = head.find('(');
  if (open == std::string::npos) {
    c.name = head;
    return c;
  }
  if (head.back() != ')') throw Error(ErrorKind::kParse, "bad fact property: " + std::string(text));
  c.name = head.substr(0, open);
  c.args = split_top(std::string_view(head).substr(open + 1, head.size() - open - 2), ';');
  return c;
}

void need_args(const PropertyCall& c, std::size_t n) {
  if (c.args.size() != n || (n > 0 && c.args.back().empty()))
    throw Error(ErrorKind::kParse, c.name + " takes " + std::to_string(n) + " argument(s)");
}

struct Outcome {
  bool value = false;
  std::string detail;
  std::optional<nlohmann::json> witness;
};

bool witness_matches(const Fact& f, const Outcome& o) {
  if (!f.witness) return true;
  return o.witness && *o.witness == *f.witness;
}

Outcome from_report(const PropertyReport& r, const std::string& name) {
  const PropertyEntry* e = r.find(name);
  if (!e) throw Error(ErrorKind::kQueryParse, "unknown property " + name);
  auto v = r.value(name);
  if (!v) return {false, name + " is not decided for " + r.poset, std::nullopt};
  Outcome o{*v, "", std::nullopt};
  if (e->witness) o.witness = nlohmann::json::parse(e->witness->dump());
  return o;
}

std::optional<std::string> report_property(const std::string& name) {
  for (const auto& n : kPropertyNames)
    if (n == name) return n;
  if (name == "mc") return "meet_continuous";
  if (name == "mmc") return "moderately_meet_continuous";
  return std::nullopt;
}

// Ladder presentations: real deciders.
Outcome eval_ladder(const LadderPresentation& p, const PropertyCall& c) {
  if (auto n = report_property(c.name)) return from_report(theorem_suite(p), *n);
  auto elems = [&](const std::string& s) {
    std::vector<Elem> out;
    for (const auto& t : split_top(s, ',')) out.push_back(p.parse_elem(t));
    return p.set_of(out);
  };
  auto set_eq = [&](const SymSet& got) {
    if (!c.rhs) throw Error(ErrorKind::kParse, c.name + " needs '=' and a set");
    SymSet want = p.parse_set(*c.rhs);
    return Outcome{got == want, "got " + p.format(got), std::nullopt};
  };
  if (c.name == "leq") {
    need_args(c, 2);
    return {p.leq(p.parse_elem(c.args[0]), p.parse_elem(c.args[1])), "", std::nullopt};
  }
  if (c.name == "wwb" || c.name == "wb") {
    need_args(c, 2);
    SymSet g = elems(c.args[0]);
    Elem x = p.parse_elem(c.args[1]);
    auto ex = c.name == "wwb" ? explain_weak_way_below(p, g, x) : explain_way_below(p, g, x);
    Outcome o{ex.holds, "", std::nullopt};
    if (ex.shape) o.detail = "missed by " + p.format(*ex.shape);
    return o;
  }
  if (c.name == "wwb_down") {
    need_args(c, 1);
    return set_eq(wwb_down(p, p.parse_elem(c.args[0])));
  }
  if (c.name == "wb_down") {
    need_args(c, 1);
    return set_eq(wb_down(p, p.parse_elem(c.args[0])));
  }
  if (c.name == "wwb_up") {
    need_args(c, 1);
    return set_eq(wwb_up(p, elems(c.args[0])));
  }
  if (c.name == "bottom") {
    auto b = p.bottom();
    std::string got = b ? p.format(*b) : "none";
    return {c.rhs && got == *c.rhs, "got " + got, std::nullopt};
  }
  if (c.name == "quasiexact_equiv") {
    auto v = quasiexact_equiv_suite(p);
    return {v[0] && v[1] && v[2] && v[3], "", std::nullopt};
  }
  if (c.name == "same_vector") {
    need_args(c, 1);
    auto other = ladder_fixture(c.args[0]);
    auto a = theorem_suite(p);
    auto b = theorem_suite(other);
    bool same = true;
    for (const auto& n : kPropertyNames) same = same && a.find(n)->state == b.find(n)->state;
    return {same, "", std::nullopt};
  }
  throw Error(ErrorKind::kParse, "unknown fact property " + c.name);
}

Outcome eval_johnstone(const JohnstoneModel& j, const PropertyCall& c, const std::optional<nlohmann::json>& cert,
                       const Bounds& bounds) {
  auto elems = [&](const std::string& s) {
    std::vector<JElem> out;
    for (const auto& t : split_top(s, ',')) out.push_back(j.parse(t));
    return out;
  };
  auto from_verdict = [](const Verdict<std::string>& v) { return Outcome{v.holds, v.witness.value_or(""), std::nullopt}; };
  if (c.name == "leq") {
    need_args(c, 2);
    return {j.leq(j.parse(c.args[0]), j.parse(c.args[1])), "", std::nullopt};
  }
  if (c.name == "wwb") {
    need_args(c, 2);
    return {generic::weak_way_below(j, elems(c.args[0]), j.parse(c.args[1])), "", std::nullopt};
  }
  if (c.name == "wwb_down") {
    need_args(c, 1);
    if (!c.rhs) throw Error(ErrorKind::kParse, "wwb_down needs '='");
    JElem x = j.parse(c.args[0]);
    // rhs: down(e) | column(c) | {e, ...}
    std::function<bool(JElem)> want;
    const std::string& r = *c.rhs;
    if (r.rfind("down(", 0) == 0 && r.back() == ')') {
      JElem e = j.parse(r.substr(5, r.size() - 6));
      want = [&j, e](JElem g) { return j.leq(g, e); };
    } else if (r.rfind("column(", 0) == 0 && r.back() == ')') {
      Index col = std::stoll(r.substr(7, r.size() - 8));
      want = [col](JElem g) { return !g.is_omega() && g.col == col; };
    } else if (r.size() >= 2 && r.front() == '{' && r.back() == '}') {
      auto listed = r.size() == 2 ? std::vector<JElem>{} : elems(r.substr(1, r.size() - 2));
      want = [listed](JElem g) { return std::find(listed.begin(), listed.end(), g) != listed.end(); };
    } else {
      throw Error(ErrorKind::kParse, "bad region " + r);
    }
    auto got = generic::wwb_down(j, x, bounds.grid);
    for (JElem g : j.grid(bounds.grid)) {
      bool in = std::find(got.begin(), got.end(), g) != got.end();
      if (in != want(g)) return {false, "differs at " + j.format(g), std::nullopt};
    }
    return {true, "", std::nullopt};
  }
  if (c.name == "order_audit") return from_verdict(johnstone_order_audit(bounds.grid));
  if (c.name == "basis_audit") return from_verdict(johnstone_basis_audit(bounds.grid));
  if (c.name == "wwb_down_audit") return from_verdict(johnstone_wwb_down_audit(bounds.grid));
  if (c.name == "quasicontinuous") {
    if (!cert || cert->value("kind", "") != "column_escape")
      throw Error(ErrorKind::kCertificateRejected, "quasicontinuous on J needs a column_escape certificate");
    JElem at = j.parse(cert->value("point", "(0,0)"));
    auto v = column_escape_audit(at, bounds);
    if (!v.holds) throw Error(ErrorKind::kCertificateRejected, v.witness.value_or(""));
    return {false, v.note, std::nullopt};
  }
  if (auto n = report_property(c.name)) {
    Bounds b = bounds;
    auto r = johnstone_report(b);
    return from_report(r, *n);
  }
  throw Error(ErrorKind::kParse, "unknown fact property " + c.name);
}

Index product_level(const ProductPoset& p) {
  return std::max(p.first().uniformity_threshold(), p.second().uniformity_threshold()) + 3;
}

Outcome eval_product(const ProductPoset& p, const PropertyCall& c) {
  auto pair = [&](const std::string& s) -> ProductPoset::element_type {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error(ErrorKind::kUnknownElement, s);
    auto parts = split_top(std::string_view(s).substr(1, s.size() - 2), ',');
    if (parts.size() != 2) throw Error(ErrorKind::kUnknownElement, s);
    return {p.first().parse_elem(parts[0]), p.second().parse_elem(parts[1])};
  };
  if (c.name == "leq") {
    need_args(c, 2);
    return {p.leq(pair(c.args[0]), pair(c.args[1])), "", std::nullopt};
  }
  if (c.name == "bottom") {
    auto b = p.bottom();
    std::string got = b ? p.format(*b) : "none";
    return {c.rhs && got == *c.rhs, "got " + got, std::nullopt};
  }
  if (auto n = report_property(c.name)) return from_report(product_report(p), *n);
  throw Error(ErrorKind::kParse, "unknown fact property " + c.name);
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"P1", "P2", "P3", "J", "ONE"};
  return names;
}

std::string fixture_source(std::string_view name) {
  auto it = sources().find(name);
  if (it == sources().end()) throw Error(ErrorKind::kUnknownId, "no ladder fixture " + std::string(name));
  return it->second;
}

LadderPresentation ladder_fixture(std::string_view name) { return parse_and_validate(fixture_source(name)); }

GalleryPoset fixture(std::string_view name) {
  if (name == "J") return JohnstoneModel{};
  if (sources().count(name)) return ladder_fixture(name);
  auto x = name.find('x');
  // Binary products always satisfy the finite-exception rule for bottoms.
  if (x != std::string_view::npos && sources().count(name.substr(0, x)) && sources().count(name.substr(x + 1)))
    return product(ladder_fixture(name.substr(0, x)), ladder_fixture(name.substr(x + 1)), true);
  throw Error(ErrorKind::kUnknownId, "unknown fixture " + std::string(name));
}

std::string poset_label(const GalleryPoset& g) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, JohnstoneModel>)
          return "J";
        else
          return v.name();
      },
      g);
}

LadderPresentation flat_product(const LadderPresentation& a, const LadderPresentation& q) {
  if (a.num_ladders() != 0) throw Error(ErrorKind::kPreconditionFailed, "flat_product needs a finite first factor");
  const int nb = q.num_base();
  RawPresentation raw;
  raw.name = a.name() + "x" + q.name();
  auto nm = [&](int ab, const std::string& qn) { return a.base_name(ab) + "_" + qn; };
  for (int ab = 0; ab < a.num_base(); ++ab) {
    for (int b = 0; b < nb; ++b) raw.base_ids.push_back(nm(ab, q.base_name(b)));
    for (int l = 0; l < q.num_ladders(); ++l) raw.ladder_ids.push_back(nm(ab, q.ladder_name(l)));
  }
  using K = RelStmt::Kind;
  for (int a1 = 0; a1 < a.num_base(); ++a1) {
    for (int a2 = 0; a2 < a.num_base(); ++a2) {
      if (!a.leq(Elem::base(a1), Elem::base(a2))) continue;
      for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
          if ((a1 != a2 || b1 != b2) && q.leq(Elem::base(b1), Elem::base(b2)))
            raw.order.emplace_back(nm(a1, q.base_name(b1)), nm(a2, q.base_name(b2)));
      for (int b = 0; b < nb; ++b)
        for (int l = 0; l < q.num_ladders(); ++l) {
          Index t = q.rel(b, nb + l)(0);
          if (t != kInf) raw.rels.push_back({nm(a1, q.base_name(b)), nm(a2, q.ladder_name(l)), K::kFrom, t});
          const Staircase& down = q.rel(nb + l, b);
          if (down.is_never()) continue;
          if (down.is_total())
            raw.rels.push_back({nm(a1, q.ladder_name(l)), nm(a2, q.base_name(b)), K::kAlways, 0});
          else
            raw.rels.push_back({nm(a1, q.ladder_name(l)), nm(a2, q.base_name(b)), K::kUpto, down.last_finite()});
        }
      for (int l1 = 0; l1 < q.num_ladders(); ++l1)
        for (int l2 = 0; l2 < q.num_ladders(); ++l2) {
          const std::string lhs = nm(a1, q.ladder_name(l1));
          const std::string rhs = nm(a2, q.ladder_name(l2));
          if (l1 == l2) {
            if (a1 != a2) raw.rels.push_back({lhs, rhs, K::kShift, 0});
            continue;
          }
          const Staircase& r = q.rel(nb + l1, nb + l2);
          if (r.is_never()) continue;
          if (r.is_constant())
            raw.rels.push_back({lhs, rhs, K::kTail, r.tail_value()});
          else if (r.is_shift())
            raw.rels.push_back({lhs, rhs, K::kShift, r.tail_value()});
          else
            throw Error(ErrorKind::kInexpressibleClosure, lhs + " <= " + rhs);
        }
    }
  }
  return LadderPresentation::validate(raw);
}

GalleryPoset product(const LadderPresentation& p, const LadderPresentation& q, bool waive_bottom) {
  if (!waive_bottom) {
    if (!p.bottom()) throw Error(ErrorKind::kMissingBottom, p.name() + " has no bottom");
    if (!q.bottom()) throw Error(ErrorKind::kMissingBottom, q.name() + " has no bottom");
  }
  if (p.num_ladders() == 0) return flat_product(p, q);
  if (q.num_ladders() == 0) {
    // Flatten with the factors swapped, then restore the (p, q) naming.
    RawPresentation raw = flat_product(q, p).raw();
    auto swap_name = [&](std::string& id) {
      auto u = id.find('_');
      id = id.substr(u + 1) + "_" + id.substr(0, u);
    };
    raw.name = p.name() + "x" + q.name();
    for (auto& id : raw.base_ids) swap_name(id);
    for (auto& id : raw.ladder_ids) swap_name(id);
    for (auto& [x, y] : raw.order) swap_name(x), swap_name(y);
    for (auto& r : raw.rels) swap_name(r.lhs), swap_name(r.rhs);
    return LadderPresentation::validate(raw);
  }
  return ProductPoset(p, q);
}

std::string JRegion::describe() const {
  std::string c = std::to_string(col);
  if (upto) return "{(" + c + ",k): k <= " + std::to_string(*upto) + "}";
  return "{(" + c + ",k): k in N}";
}

JRegion johnstone_wwb_down(JElem x) {
  if (x.col < 0 || (x.level < 0 && x.level != JElem::kOmega))
    throw Error(ErrorKind::kUnknownElement, JohnstoneModel{}.format(x));
  if (x.is_omega()) return {x.col, std::nullopt};
  return {x.col, x.level};
}

Verdict<std::string> johnstone_order_audit(Index b) {
  JohnstoneModel j;
  auto g = j.grid(b);
  for (JElem x : g) {
    if (!j.leq(x, x)) return Verdict<std::string>::no("not reflexive at " + j.format(x));
    for (JElem y : g) {
      if (x != y && j.leq(x, y) && j.leq(y, x))
        return Verdict<std::string>::no("not antisymmetric at " + j.format(x) + ", " + j.format(y));
      if (!j.leq(x, y)) continue;
      for (JElem z : g)
        if (j.leq(y, z) && !j.leq(x, z))
          return Verdict<std::string>::no("not transitive at " + j.format(x) + ", " + j.format(y) + ", " + j.format(z));
    }
  }
  return Verdict<std::string>::yes();
}

Verdict<std::string> johnstone_basis_audit(Index b) {
  JohnstoneModel j;
  auto g = j.grid(b);
  auto least_ub = [&](const std::vector<JElem>& d) -> std::optional<JElem> {
    std::vector<JElem> ub;
    for (JElem y : g) {
      bool above = true;
      for (JElem e : d) above = above && j.leq(e, y);
      if (above) ub.push_back(y);
    }
    for (JElem y : ub) {
      bool least = true;
      for (JElem z : ub) least = least && j.leq(y, z);
      if (least) return y;
    }
    return std::nullopt;
  };
  // Declared column shapes: the column up to one level past the grid has sup (c,w).
  for (Index c = 0; c <= b; ++c) {
    std::vector<JElem> col;
    for (Index k = 0; k <= b + 1; ++k) col.push_back({c, k});
    auto s = least_ub(col);
    if (!s || *s != JElem{c, JElem::kOmega}) return Verdict<std::string>::no("column " + std::to_string(c) + " has the wrong sup");
  }
  auto dominated = [&](const std::vector<JElem>& d, JElem sup) {
    for (const JShape& e : j.sup_basis(sup)) {
      bool all = true;
      for (JElem x : g) {
        // Grid points of the shape itself.
        if (e.is_column ? !j.below_shape(x, e) : x != e.max) continue;
        bool below = false;
        for (JElem y : d) below = below || j.leq(x, y);
        all = all && below;
      }
      if (all) return true;
    }
    return false;
  };
  auto check = [&](const std::vector<JElem>& d) -> std::optional<std::string> {
    for (JElem x : d)
      for (JElem y : d) {
        bool ub = false;
        for (JElem z : d) ub = ub || (j.leq(x, z) && j.leq(y, z));
        if (!ub) return std::nullopt;
      }
    auto s = least_ub(d);
    if (s && !dominated(d, *s)) return "directed set with sup " + j.format(*s) + " dominates no declared shape";
    return std::nullopt;
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = i; k < g.size(); ++k)
      if (auto bad = check({g[i], g[k]})) return Verdict<std::string>::no(*bad);
  for (Index c = 0; c <= b; ++c)
    for (Index k0 = 0; k0 <= b; ++k0) {
      std::vector<JElem> seg;
      for (Index k = k0; k <= b; ++k) seg.push_back({c, k});
      if (auto bad = check(seg)) return Verdict<std::string>::no(*bad);
    }
  return Verdict<std::string>::yes();
}

Verdict<std::string> johnstone_wwb_down_audit(Index b) {
  JohnstoneModel j;
  auto g = j.grid(b);
  for (JElem x : g) {
    JRegion want = johnstone_wwb_down(x);
    auto got = generic::wwb_down(j, x, b);
    for (JElem y : g) {
      bool in = std::find(got.begin(), got.end(), y) != got.end();
      if (in != want.contains(y))
        return Verdict<std::string>::no("wwb_down" + j.format(x) + " differs from " + want.describe() + " at " + j.format(y));
    }
  }
  return Verdict<std::string>::yes();
}

Verdict<std::string> column_escape_audit(JElem p, const Bounds& bounds) {
  JohnstoneModel j;
  if (p.is_omega()) throw Error(ErrorKind::kCertificateRejected, "column escape applies to finite levels only");
  if (bounds.s < 1 || bounds.m < std::max(p.col, p.level) + 1)
    throw Error(ErrorKind::kBoundsTooSmall, "column escape needs M > coordinates of the point and s >= 1");
  // up(p) is not everything, so an empty fin(p) cannot meet the requirement.
  if (j.leq(p, JElem{p.col + 1, 0})) return Verdict<std::string>::no("up(p) contains (col+1,0)");
  std::vector<JElem> u;
  for (Index c = 0; c <= bounds.m; ++c) {
    for (Index n = 0; n <= bounds.m; ++n) u.push_back({c, n});
    u.push_back({c, JElem::kOmega});
  }
  std::map<Index, bool> sup_ok;
  auto column_sup_ok = [&](Index c) {
    auto it = sup_ok.find(c);
    if (it != sup_ok.end()) return it->second;
    // Upper bounds of the column up to level h among points with coordinates
    // below h.
    const Index h = c + bounds.m + 2;
    std::vector<JElem> ub;
    for (Index b = 0; b < h; ++b) {
      std::vector<JElem> cand{{b, JElem::kOmega}};
      for (Index n = 0; n < h; ++n) cand.push_back({b, n});
      for (JElem y : cand) {
        bool above = true;
        for (Index k = 0; k <= h && above; ++k) above = j.leq(JElem{c, k}, y);
        if (above) ub.push_back(y);
      }
    }
    bool ok = ub.size() == 1 && ub[0] == JElem{c, JElem::kOmega};
    const auto basis = j.sup_basis({c, JElem::kOmega});
    ok = ok && std::find(basis.begin(), basis.end(), JShape{true, {}, c}) != basis.end();
    sup_ok[c] = ok;
    return ok;
  };
  std::size_t checked = 0;
  std::vector<std::size_t> pick;
  std::optional<std::string> failure;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (failure) return;
    if (!pick.empty()) {
      ++checked;
      Index mc = 0;
      for (auto i : pick) mc = std::max({mc, u[i].col, u[i].is_omega() ? Index{0} : u[i].level});
      const Index c = std::max(p.level, 1 + mc);
      std::string fs;
      for (auto i : pick) fs += (fs.empty() ? "" : ", ") + j.format(u[i]);
      if (!column_sup_ok(c)) {
        failure = "column " + std::to_string(c) + " does not have sup (" + std::to_string(c) + ",w)";
        return;
      }
      if (!j.leq(p, JElem{c, JElem::kOmega})) {
        failure = "sup of column " + std::to_string(c) + " is not above the point for F = {" + fs + "}";
        return;
      }
      // Membership of (c,k) in up(f) is constant for k past f's coordinates.
      const Index h = c + bounds.m + 2;
      for (auto i : pick)
        for (Index k = 0; k <= h; ++k)
          if (j.leq(u[i], JElem{c, k})) {
            failure = "column " + std::to_string(c) + " meets up(F) for F = {" + fs + "}";
            return;
          }
    }
    if (static_cast<Index>(pick.size()) == bounds.s) return;
    for (std::size_t i = from; i < u.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  if (failure) return Verdict<std::string>::no(*failure);
  auto v = Verdict<std::string>::yes();
  v.note = std::to_string(checked) + " sets checked";
  return v;
}

PropertyReport johnstone_report(const Bounds& bounds) {
  JohnstoneModel j;
  auto r = PropertyReport::blank("J");
  auto audited = [](bool b) { return b ? PropState::kAuditedTrue : PropState::kAuditedFalse; };
  const Index b = bounds.grid;
  const auto g = j.grid(b);
  r.set_state("dcpo", audited(johnstone_order_audit(b).holds && johnstone_basis_audit(b).holds));
  bool exact = true, qe = true;
  std::optional<JElem> ew, qw;
  for (JElem x : g) {
    if (exact && !generic::exact_at(j, x, b)) exact = false, ew = x;
    if (qe && !generic::quasiexact_at(j, x, b)) qe = false, qw = x;
  }
  r.set_state("exact", audited(exact), ew ? std::optional<nlohmann::ordered_json>(j.format(*ew)) : std::nullopt);
  r.set_state("quasiexact", audited(qe), qw ? std::optional<nlohmann::ordered_json>(j.format(*qw)) : std::nullopt);
  auto esc = column_escape_audit({0, 0}, bounds);
  if (esc.holds) r.set_state("quasicontinuous", PropState::kAuditedFalse, nlohmann::ordered_json("(0,0)"));
  auto wi = generic::weakly_increasing_counterexample(j, b);
  if (wi)
    r.set_state("weakly_increasing", PropState::kAuditedFalse,
                nlohmann::ordered_json::array({j.format(wi->x), j.format(wi->y), j.format(wi->z), j.format(wi->u)}));
  else
    r.set_state("weakly_increasing", PropState::kAuditedTrue);
  return r;
}

PropertyReport product_report(const ProductPoset& p) {
  auto r = PropertyReport::blank(p.name());
  auto audited = [](bool b) { return b ? PropState::kAuditedTrue : PropState::kAuditedFalse; };
  const Index level = product_level(p);
  r.set_state("dcpo", audited(is_dcpo(p.first()).holds && is_dcpo(p.second()).holds));
  bool exact = true, qe = true;
  std::optional<std::string> ew, qw;
  for (const auto& x : p.grid(level)) {
    if (exact && !generic::exact_at(p, x, level)) exact = false, ew = p.format(x);
    if (qe && !generic::quasiexact_at(p, x, level)) qe = false, qw = p.format(x);
  }
  r.set_state("exact", audited(exact), ew ? std::optional<nlohmann::ordered_json>(*ew) : std::nullopt);
  r.set_state("quasiexact", audited(qe), qw ? std::optional<nlohmann::ordered_json>(*qw) : std::nullopt);
  auto wi = generic::weakly_increasing_counterexample(p, level);
  if (wi)
    r.set_state("weakly_increasing", PropState::kAuditedFalse,
                nlohmann::ordered_json::array({p.format(wi->x), p.format(wi->y), p.format(wi->z), p.format(wi->u)}));
  else
    r.set_state("weakly_increasing", PropState::kAuditedTrue);
  return r;
}

PropertyReport gallery_report(const GalleryPoset& g, const Bounds& bounds) {
  return std::visit(
      [&](const auto& v) -> PropertyReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LadderPresentation>)
          return theorem_suite(v);
        else if constexpr (std::is_same_v<T, JohnstoneModel>)
          return johnstone_report(bounds);
        else
          return product_report(v);
      },
      g);
}

std::vector<Fact> parse_facts(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, "fact registry must be a JSON array");
  std::vector<Fact> out;
  for (const auto& e : j) {
    Fact f;
    try {
      f.poset = e.at("poset").get<std::string>();
      f.property = e.at("property").get<std::string>();
      f.expected = e.at("expected").get<bool>();
      f.statement = e.at("statement").get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::kParse, std::string("bad fact entry: ") + ex.what());
    }
    if (f.statement.empty()) throw Error(ErrorKind::kParse, "fact " + f.poset + ":" + f.property + " has no statement");
    if (e.contains("witness")) f.witness = e["witness"];
    if (e.contains("certificate")) f.certificate = e["certificate"];
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Fact> load_facts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, path + ": " + ex.what());
  }
  return parse_facts(j);
}

std::string default_facts_path() { return std::string(POSETLAB_DATA_DIR) + "/facts.json"; }

FactResult audit_fact(const GalleryPoset& g, const Fact& fact, const Bounds& bounds) {
  PropertyCall call = parse_call(fact.property);
  Outcome o = std::visit(
      [&](const auto& v) -> Outcome {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LadderPresentation>)
          return eval_ladder(v, call);
        else if constexpr (std::is_same_v<T, JohnstoneModel>)
          return eval_johnstone(v, call, fact.certificate, bounds);
        else
          return eval_product(v, call);
      },
      g);
  FactResult r{fact, o.value == fact.expected && witness_matches(fact, o), ""};
  std::ostringstream d;
  d << "got " << (o.value ? "true" : "false") << ", expected " << (fact.expected ? "true" : "false");
  if (!witness_matches(fact, o))
    d << "; witness " << (o.witness ? o.witness->dump() : "none") << " expected " << fact.witness->dump();
  if (!o.detail.empty()) d << " (" << o.detail << ")";
  r.detail = d.str();
  return r;
}

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += !r.passed;
  return n;
}

void SuiteResult::require_pass() const {
  if (failures() == 0) return;
  std::string msg;
  for (const auto& r : results)
    if (!r.passed) msg += (msg.empty() ? "" : "; ") + r.fact.poset + ":" + r.fact.property + " " + r.detail;
  throw Error(ErrorKind::kSuiteFailure, msg);
}

SuiteResult run_paper_suite(const std::vector<Fact>& facts, std::optional<std::string> only, const Bounds& bounds) {
  std::map<std::string, GalleryPoset> cache;
  if (only) fixture(*only);  // unknown names fail here
  SuiteResult out;
  for (const auto& f : facts) {
    if (only && f.poset != *only) continue;
    FactResult r{f, false, ""};
    try {
      auto it = cache.find(f.poset);
      if (it == cache.end()) it = cache.emplace(f.poset, fixture(f.poset)).first;
      r = audit_fact(it->second, f, bounds);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kBoundsTooSmall) throw;
      r.detail = e.what();
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

SuiteResult run_paper_suite(std::optional<std::string> only, const Bounds& bounds) {
  return run_paper_suite(load_facts(default_facts_path()), std::move(only), bounds);
}

}  // namespace posetlab
