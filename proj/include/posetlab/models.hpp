#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/ladder.hpp"

namespace posetlab {

// An order presented by an oracle: a partial order, a declared sup basis for
// each element, and a finite grid of sample elements per level.  Shapes are
// directed sets given by a cofinal chain shape_point(s, 0) <= shape_point(s, 1) <= ...
template <class M>
concept OrderModel = requires(const M& m, const typename M::element_type& a, const typename M::shape_type& s, Index n) {
  { m.leq(a, a) } -> std::convertible_to<bool>;
  { m.sup_basis(a) } -> std::same_as<std::vector<typename M::shape_type>>;
  { m.is_max_shape(s) } -> std::convertible_to<bool>;
  { m.below_shape(a, s) } -> std::convertible_to<bool>;
  { m.shape_point(s, n) } -> std::same_as<typename M::element_type>;
  { m.grid(n) } -> std::same_as<std::vector<typename M::element_type>>;
  { m.format(a) } -> std::convertible_to<std::string>;
};

class LadderModel {
 public:
  using element_type = Elem;
  using shape_type = DirectedShape;

  explicit LadderModel(const LadderPresentation& p) : p_(&p) {}
  const LadderPresentation& presentation() const { return *p_; }

  bool leq(Elem a, Elem b) const { return p_->leq(a, b); }
  std::vector<DirectedShape> sup_basis(Elem y) const { return posetlab::sup_basis(*p_, y); }
  bool is_max_shape(const DirectedShape& s) const { return s.is_max(); }
  bool below_shape(Elem g, const DirectedShape& s) const;
  Elem shape_point(const DirectedShape& s, Index n) const;
  std::vector<Elem> grid(Index level) const { return p_->scan_points(level); }
  std::string format(Elem e) const { return p_->format(e); }

 private:
  const LadderPresentation* p_;
};

// Binary product of two ladder presentations with the pairwise order and
// product-of-bases shapes.
class ProductPoset {
 public:
  using element_type = std::pair<Elem, Elem>;
  using shape_type = std::pair<DirectedShape, DirectedShape>;

  ProductPoset(LadderPresentation a, LadderPresentation b);
  ProductPoset(const ProductPoset& o) : a_(o.a_), b_(o.b_), ma_(a_), mb_(b_) {}
  ProductPoset& operator=(const ProductPoset&) = delete;

  const LadderPresentation& first() const { return a_; }
  const LadderPresentation& second() const { return b_; }
  std::string name() const { return a_.name() + "x" + b_.name(); }

  bool leq(const element_type& x, const element_type& y) const { return a_.leq(x.first, y.first) && b_.leq(x.second, y.second); }
  std::vector<shape_type> sup_basis(const element_type& y) const;
  bool is_max_shape(const shape_type& s) const { return s.first.is_max() && s.second.is_max(); }
  bool below_shape(const element_type& g, const shape_type& s) const {
    return ma_.below_shape(g.first, s.first) && mb_.below_shape(g.second, s.second);
  }
  element_type shape_point(const shape_type& s, Index n) const { return {ma_.shape_point(s.first, n), mb_.shape_point(s.second, n)}; }
  std::vector<element_type> grid(Index level) const;
  std::string format(const element_type& e) const { return "(" + a_.format(e.first) + "," + b_.format(e.second) + ")"; }
  std::optional<element_type> bottom() const;

 private:
  LadderPresentation a_, b_;
  LadderModel ma_, mb_;
};

// Johnstone's dcpo N x (N u {w}) with the standard order:
// (a,m) <= (a,n) for m <= n, (a,m) <= (a,w), (a,m) <= (b,w) when m <= b.
struct JElem {
  Index col = 0;
  Index level = 0;  // kOmega for the top of the column
  static constexpr Index kOmega = -1;
  bool is_omega() const { return level == kOmega; }
  friend auto operator<=>(const JElem&, const JElem&) = default;
};

struct JShape {
  bool is_column = false;  // Tails(column col), otherwise Max(max)
  JElem max;
  Index col = 0;
  friend bool operator==(const JShape&, const JShape&) = default;
};

class JohnstoneModel {
 public:
  using element_type = JElem;
  using shape_type = JShape;

  bool leq(JElem x, JElem y) const;
  std::vector<JShape> sup_basis(JElem y) const;
  bool is_max_shape(const JShape& s) const { return !s.is_column; }
  bool below_shape(JElem g, const JShape& s) const;
  JElem shape_point(const JShape& s, Index n) const { return s.is_column ? JElem{s.col, n} : s.max; }
  // Columns 0..level with levels 0..level and w.
  std::vector<JElem> grid(Index level) const;
  std::string format(JElem e) const;
  JElem parse(std::string_view text) const;
};

namespace generic {

template <OrderModel M>
bool weak_way_below(const M& m, const std::vector<typename M::element_type>& g, const typename M::element_type& x) {
  for (const auto& e : m.sup_basis(x)) {
    bool hit = false;
    for (const auto& a : g)
      if (m.below_shape(a, e)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

template <OrderModel M>
std::vector<typename M::element_type> wwb_down(const M& m, const typename M::element_type& x, Index level) {
  std::vector<typename M::element_type> out;
  for (const auto& g : m.grid(level))
    if (weak_way_below(m, {g}, x)) out.push_back(g);
  return out;
}

// Some declared shape of x lies inside wwb_down(x) (checked on its first
// level+1 points).
template <OrderModel M>
bool exact_at(const M& m, const typename M::element_type& x, Index level) {
  for (const auto& e : m.sup_basis(x)) {
    bool inside = true;
    if (m.is_max_shape(e)) {
      inside = weak_way_below(m, {x}, x);
    } else {
      for (Index n = 0; n <= level && inside; ++n) inside = weak_way_below(m, {m.shape_point(e, n)}, x);
    }
    if (inside) return true;
  }
  return false;
}

// Hitting-family criterion on the grid: conditions are the grid parts of
// down(E) for the non-Max shapes of x, plus down(x).  A far point of each
// shape is added to its condition.
template <OrderModel M>
bool quasiexact_at(const M& m, const typename M::element_type& x, Index level) {
  using E = typename M::element_type;
  const auto pts = m.grid(level);
  const Index far = 2 * level + 2;
  std::vector<std::vector<E>> conds;
  std::vector<E> tops;  // a far point of each condition's shape, for directedness
  {
    std::vector<E> dx;
    for (const auto& g : pts)
      if (m.leq(g, x)) dx.push_back(g);
    conds.push_back(std::move(dx));
    tops.push_back(x);
  }
  for (const auto& s : m.sup_basis(x)) {
    if (m.is_max_shape(s)) continue;
    std::vector<E> c;
    for (const auto& g : pts)
      if (m.below_shape(g, s)) c.push_back(g);
    c.push_back(m.shape_point(s, far));  // stands in for the part of s past the grid
    conds.push_back(std::move(c));
    tops.push_back(m.shape_point(s, far));
  }
  for (std::size_t i = 0; i < conds.size(); ++i) {
    if (conds[i].empty()) return false;
    for (const auto& g : conds[i])
      if (!m.leq(g, tops[i])) return false;
  }
  for (const auto& y : pts) {
    if (m.leq(x, y)) continue;
    for (const auto& c : conds) {
      bool escapes = false;
      for (const auto& g : c)
        if (!m.leq(g, y)) {
          escapes = true;
          break;
        }
      if (!escapes) return false;
    }
  }
  return true;
}

template <class E>
struct GridQuadruple {
  E x, y, z, u;
};

// x <<_w y <= z <<_w u implies x <<_w z, over the grid.
template <OrderModel M>
std::optional<GridQuadruple<typename M::element_type>> weakly_increasing_counterexample(const M& m, Index level) {
  const auto pts = m.grid(level);
  const std::size_t n = pts.size();
  std::vector<char> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = weak_way_below(m, {pts[i]}, pts[j]);
  for (std::size_t z = 0; z < n; ++z) {
    std::size_t u = n;
    for (std::size_t k = 0; k < n && u == n; ++k)
      if (w[z * n + k]) u = k;
    if (u == n) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if (w[x * n + z]) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (w[x * n + y] && m.leq(pts[y], pts[z])) return GridQuadruple<typename M::element_type>{pts[x], pts[y], pts[z], pts[u]};
    }
  }
  return std::nullopt;
}

}  // namespace generic

}  // namespace posetlab
