#include "posetlab/symset.hpp"

#include <algorithm>
#include <cassert>

namespace posetlab {

IndexSet IndexSet::tail(Index t) {
  IndexSet s;
  s.toggles_ = {std::max<Index>(t, 0)};
  return s;
}

IndexSet IndexSet::segment(Index lo, Index hi) {
  IndexSet s;
  lo = std::max<Index>(lo, 0);
  if (hi < lo) return s;
  if (hi == kInf) return tail(lo);
  s.toggles_ = {lo, hi + 1};
  return s;
}

bool IndexSet::contains(Index n) const {
  auto it = std::upper_bound(toggles_.begin(), toggles_.end(), n);
  return (it - toggles_.begin()) % 2 == 1;
}

std::optional<Index> IndexSet::min() const {
  if (toggles_.empty()) return std::nullopt;
  return toggles_.front();
}

std::optional<Index> IndexSet::max() const {
  if (toggles_.empty()) return std::nullopt;
  if (infinite()) return kInf;
  return toggles_.back() - 1;
}

std::optional<Index> IndexSet::tail_start() const {
  if (!infinite()) return std::nullopt;
  return toggles_.back();
}

std::vector<IndexSet::Segment> IndexSet::segments() const {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < toggles_.size(); i += 2) {
    Index hi = i + 1 < toggles_.size() ? toggles_[i + 1] - 1 : kInf;
    out.push_back({toggles_[i], hi});
  }
  return out;
}

Index IndexSet::max_constant() const { return toggles_.empty() ? 0 : toggles_.back(); }

Index IndexSet::finite_size() const {
  Index n = 0;
  for (const auto& s : segments()) {
    if (s.hi == kInf) return kInf;
    n += s.hi - s.lo + 1;
  }
  return n;
}

IndexSet IndexSet::complement() const {
  IndexSet s;
  if (!toggles_.empty() && toggles_.front() == 0) {
    s.toggles_.assign(toggles_.begin() + 1, toggles_.end());
  } else {
    s.toggles_.reserve(toggles_.size() + 1);
    s.toggles_.push_back(0);
    s.toggles_.insert(s.toggles_.end(), toggles_.begin(), toggles_.end());
  }
  return s;
}

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::size_t i = 0, j = 0;
  bool in_a = false, in_b = false, in = false;
  while (i < a.toggles_.size() || j < b.toggles_.size()) {
    Index ta = i < a.toggles_.size() ? a.toggles_[i] : kInf;
    Index tb = j < b.toggles_.size() ? b.toggles_[j] : kInf;
    Index t = std::min(ta, tb);
    if (ta == t) { in_a = !in_a; ++i; }
    if (tb == t) { in_b = !in_b; ++j; }
    bool now = in_a && in_b;
    if (now != in) {
      out.toggles_.push_back(t);
      in = now;
    }
  }
  return out;
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  return (a.complement() & b.complement()).complement();
}

SymSet SymSet::universe(int num_base, int num_ladders) {
  SymSet s(num_base, num_ladders);
  s.base_.assign(s.base_.size(), true);
  for (auto& l : s.ladders_) l = IndexSet::all();
  return s;
}

SymSet SymSet::singleton(int num_base, int num_ladders, Elem e) {
  SymSet s(num_base, num_ladders);
  s.insert(e);
  return s;
}

bool SymSet::contains(Elem e) const {
  if (e.is_base()) return base_[static_cast<std::size_t>(e.id)];
  return ladders_[static_cast<std::size_t>(e.id)].contains(e.index);
}

void SymSet::insert(Elem e) {
  if (e.is_base()) {
    base_[static_cast<std::size_t>(e.id)] = true;
  } else {
    auto& l = ladders_[static_cast<std::size_t>(e.id)];
    l = l | IndexSet::point(e.index);
  }
}

bool SymSet::empty() const {
  return std::none_of(base_.begin(), base_.end(), [](bool b) { return b; }) &&
         std::all_of(ladders_.begin(), ladders_.end(), [](const IndexSet& l) { return l.empty(); });
}

bool SymSet::finite() const {
  return std::none_of(ladders_.begin(), ladders_.end(), [](const IndexSet& l) { return l.infinite(); });
}

std::optional<Elem> SymSet::first() const {
  for (std::size_t b = 0; b < base_.size(); ++b)
    if (base_[b]) return Elem::base(static_cast<int>(b));
  for (std::size_t i = 0; i < ladders_.size(); ++i)
    if (auto m = ladders_[i].min()) return Elem::ladder(static_cast<int>(i), *m);
  return std::nullopt;
}

std::vector<Elem> SymSet::points(Index max_index) const {
  std::vector<Elem> out;
  for (int b : base_members()) out.push_back(Elem::base(b));
  for (std::size_t i = 0; i < ladders_.size(); ++i)
    for (const auto& s : ladders_[i].segments())
      for (Index n = s.lo; n <= std::min(s.hi, max_index); ++n) out.push_back(Elem::ladder(static_cast<int>(i), n));
  return out;
}

std::vector<int> SymSet::base_members() const {
  std::vector<int> out;
  for (std::size_t b = 0; b < base_.size(); ++b)
    if (base_[b]) out.push_back(static_cast<int>(b));
  return out;
}

Index SymSet::max_constant() const {
  Index m = 0;
  for (const auto& l : ladders_) m = std::max(m, l.max_constant());
  return m;
}

SymSet SymSet::complement() const {
  SymSet s(num_base(), num_ladders());
  for (std::size_t b = 0; b < base_.size(); ++b) s.base_[b] = !base_[b];
  for (std::size_t i = 0; i < ladders_.size(); ++i) s.ladders_[i] = ladders_[i].complement();
  return s;
}

SymSet operator&(const SymSet& a, const SymSet& b) {
  assert(a.num_base() == b.num_base() && a.num_ladders() == b.num_ladders());
  SymSet s(a.num_base(), a.num_ladders());
  for (std::size_t i = 0; i < a.base_.size(); ++i) s.base_[i] = a.base_[i] && b.base_[i];
  for (std::size_t i = 0; i < a.ladders_.size(); ++i) s.ladders_[i] = a.ladders_[i] & b.ladders_[i];
  return s;
}

SymSet operator|(const SymSet& a, const SymSet& b) {
  assert(a.num_base() == b.num_base() && a.num_ladders() == b.num_ladders());
  SymSet s(a.num_base(), a.num_ladders());
  for (std::size_t i = 0; i < a.base_.size(); ++i) s.base_[i] = a.base_[i] || b.base_[i];
  for (std::size_t i = 0; i < a.ladders_.size(); ++i) s.ladders_[i] = a.ladders_[i] | b.ladders_[i];
  return s;
}

}  // namespace posetlab
