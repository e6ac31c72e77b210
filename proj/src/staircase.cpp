#include "posetlab/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace posetlab {

Staircase Staircase::constant(Index c) {
  Staircase s;
  s.tail_ = Tail::kConst;
  s.c_ = c;
  return s;
}

Staircase Staircase::shift(Index c) {
  Staircase s;
  s.tail_ = Tail::kShift;
  s.c_ = c;
  if (c < 0) s.prefix_.assign(static_cast<std::size_t>(-c), 0);
  s.normalize();
  return s;
}

Staircase Staircase::upto(Index theta, Index value) {
  Staircase s;
  if (theta >= 0) s.prefix_.assign(static_cast<std::size_t>(theta) + 1, value);
  s.normalize();
  return s;
}

Index Staircase::tail_at(Index n) const {
  switch (tail_) {
    case Tail::kInf: return kInf;
    case Tail::kConst: return c_;
    case Tail::kShift: return n + c_;
  }
  return kInf;
}

Index Staircase::operator()(Index n) const {
  if (n < static_cast<Index>(prefix_.size())) return prefix_[static_cast<std::size_t>(n)];
  return tail_at(n);
}

void Staircase::normalize() {
  while (!prefix_.empty()) {
    Index n = static_cast<Index>(prefix_.size()) - 1;
    Index t = tail_at(n);
    if (tail_ == Tail::kShift && t < 0) break;
    if (prefix_.back() != t) break;
    prefix_.pop_back();
  }
}

bool Staircase::is_shift() const {
  if (tail_ != Tail::kShift) return false;
  return *this == shift(c_);
}

Staircase Staircase::then(const Staircase& g) const {
  const Index lf = static_cast<Index>(prefix_.size());
  const Index lg = static_cast<Index>(g.prefix_.size());
  Staircase h;
  Index len = lf;
  switch (tail_) {
    case Tail::kInf: h.tail_ = Tail::kInf; break;
    case Tail::kConst: {
      Index v = g(c_);
      if (v == kInf) {
        h.tail_ = Tail::kInf;
      } else {
        h.tail_ = Tail::kConst;
        h.c_ = v;
      }
      break;
    }
    case Tail::kShift:
      len = std::max(lf, lg - c_);
      h.tail_ = g.tail_;
      h.c_ = g.tail_ == Tail::kShift ? g.c_ + c_ : g.c_;
      break;
  }
  h.prefix_.resize(static_cast<std::size_t>(std::max<Index>(len, 0)));
  for (Index n = 0; n < len; ++n) {
    Index v = (*this)(n);
    h.prefix_[static_cast<std::size_t>(n)] = v == kInf ? kInf : g(v);
  }
  h.normalize();
  return h;
}

Staircase Staircase::min(const Staircase& f, const Staircase& g) {
  Index len = std::max(f.prefix_.size(), g.prefix_.size());
  Staircase h;
  if (f.tail_ == Tail::kInf) {
    h.tail_ = g.tail_;
    h.c_ = g.c_;
  } else if (g.tail_ == Tail::kInf) {
    h.tail_ = f.tail_;
    h.c_ = f.c_;
  } else if (f.tail_ == g.tail_) {
    h.tail_ = f.tail_;
    h.c_ = std::min(f.c_, g.c_);
  } else {
    // one constant a, one shift n + b: the constant wins once n >= a - b
    const Staircase& k = f.tail_ == Tail::kConst ? f : g;
    const Staircase& s = f.tail_ == Tail::kConst ? g : f;
    len = std::max(len, k.c_ - s.c_);
    h.tail_ = Tail::kConst;
    h.c_ = k.c_;
  }
  h.prefix_.resize(static_cast<std::size_t>(std::max<Index>(len, 0)));
  for (Index n = 0; n < len; ++n) h.prefix_[static_cast<std::size_t>(n)] = std::min(f(n), g(n));
  h.normalize();
  return h;
}

Index Staircase::last_at_most(Index m) const {
  // f is monotone, so {n : f(n) <= m} is an initial segment.
  switch (tail_) {
    case Tail::kConst:
      if (c_ <= m) return kInf;
      break;
    case Tail::kShift:
      if (m >= kInf / 2) return kInf;
      {
        Index n = m - c_;
        if (n >= static_cast<Index>(prefix_.size())) return n;
      }
      break;
    case Tail::kInf: break;
  }
  Index last = -1;
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    if (prefix_[n] > m) break;
    last = static_cast<Index>(n);
  }
  return last;
}

Index Staircase::last_finite() const {
  if (tail_ != Tail::kInf) return kInf;
  return last_at_most(kInf - 1);
}

bool Staircase::has_fixpoint_or_below() const {
  for (std::size_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n] <= static_cast<Index>(n)) return true;
  switch (tail_) {
    case Tail::kInf: return false;
    case Tail::kConst: return true;
    case Tail::kShift: return c_ <= 0;
  }
  return false;
}

Index Staircase::max_constant() const {
  Index m = 0;
  for (Index v : prefix_)
    if (v != kInf) m = std::max(m, v);
  m = std::max<Index>(m, static_cast<Index>(prefix_.size()));
  if (tail_ != Tail::kInf) m = std::max(m, c_ < 0 ? -c_ : c_);
  return m;
}

std::string Staircase::debug_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ",";
    if (prefix_[i] == kInf) os << "inf"; else os << prefix_[i];
  }
  os << "]";
  switch (tail_) {
    case Tail::kInf: os << "inf"; break;
    case Tail::kConst: os << "const " << c_; break;
    case Tail::kShift: os << "n" << (c_ >= 0 ? "+" : "") << c_; break;
  }
  return os.str();
}

}  // namespace posetlab
