#include "posetlab/models.hpp"

#include <charconv>

#include "posetlab/error.hpp"

namespace posetlab {

bool LadderModel::below_shape(Elem g, const DirectedShape& s) const {
  if (s.is_max()) return p_->leq(g, s.max);
  for (int l : s.ladders)
    if (p_->approach(l).contains(g)) return true;
  return false;
}

Elem LadderModel::shape_point(const DirectedShape& s, Index n) const {
  if (s.is_max()) return s.max;
  auto k = cofinal_ladder(*p_, s.ladders);
  if (!k) throw Error(ErrorKind::kMalformedShape, p_->format(s) + " is not directed");
  std::size_t pos = static_cast<std::size_t>(std::find(s.ladders.begin(), s.ladders.end(), *k) - s.ladders.begin());
  return Elem::ladder(*k, s.starts[pos] + n);
}

ProductPoset::ProductPoset(LadderPresentation a, LadderPresentation b)
    : a_(std::move(a)), b_(std::move(b)), ma_(a_), mb_(b_) {}

std::vector<ProductPoset::shape_type> ProductPoset::sup_basis(const element_type& y) const {
  std::vector<shape_type> out;
  for (const auto& e1 : posetlab::sup_basis(a_, y.first))
    for (const auto& e2 : posetlab::sup_basis(b_, y.second)) out.emplace_back(e1, e2);
  return out;
}

std::vector<ProductPoset::element_type> ProductPoset::grid(Index level) const {
  std::vector<element_type> out;
  for (Elem x : a_.scan_points(level))
    for (Elem y : b_.scan_points(level)) out.emplace_back(x, y);
  return out;
}

std::optional<ProductPoset::element_type> ProductPoset::bottom() const {
  auto x = a_.bottom();
  auto y = b_.bottom();
  if (!x || !y) return std::nullopt;
  return element_type{*x, *y};
}

bool JohnstoneModel::leq(JElem x, JElem y) const {
  if (x == y) return true;
  if (x.is_omega()) return false;
  if (y.is_omega()) return x.col == y.col || x.level <= y.col;
  return x.col == y.col && x.level <= y.level;
}

std::vector<JShape> JohnstoneModel::sup_basis(JElem y) const {
  std::vector<JShape> out{{false, y, 0}};
  if (y.is_omega()) out.push_back({true, {}, y.col});
  return out;
}

bool JohnstoneModel::below_shape(JElem g, const JShape& s) const {
  if (!s.is_column) return leq(g, s.max);
  return !g.is_omega() && g.col == s.col;
}

std::vector<JElem> JohnstoneModel::grid(Index level) const {
  std::vector<JElem> out;
  for (Index c = 0; c <= level; ++c) {
    for (Index n = 0; n <= level; ++n) out.push_back({c, n});
    out.push_back({c, JElem::kOmega});
  }
  return out;
}

std::string JohnstoneModel::format(JElem e) const {
  return "(" + std::to_string(e.col) + "," + (e.is_omega() ? std::string("w") : std::to_string(e.level)) + ")";
}

JElem JohnstoneModel::parse(std::string_view t) const {
  auto bad = [&] { return Error(ErrorKind::kUnknownElement, std::string(t)); };
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') throw bad();
  auto body = t.substr(1, t.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw bad();
  auto num = [&](std::string_view s) {
    Index v = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw bad();
    return v;
  };
  JElem e;
  e.col = num(body.substr(0, comma));
  auto lv = body.substr(comma + 1);
  e.level = (lv == "w" || lv == "omega") ? JElem::kOmega : num(lv);
  return e;
}

}  // namespace posetlab
