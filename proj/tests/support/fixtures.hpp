#pragma once

#include <vector>

#include "posetlab/dsl.hpp"
#include "posetlab/gallery.hpp"

namespace fx {

inline const posetlab::LadderPresentation& p1() {
  static const auto p = posetlab::ladder_fixture("P1");
  return p;
}
inline const posetlab::LadderPresentation& p2() {
  static const auto p = posetlab::ladder_fixture("P2");
  return p;
}
inline const posetlab::LadderPresentation& p3() {
  static const auto p = posetlab::ladder_fixture("P3");
  return p;
}
inline const posetlab::LadderPresentation& one() {
  static const auto p = posetlab::ladder_fixture("ONE");
  return p;
}
inline const posetlab::LadderPresentation& omega() {
  static const auto p = posetlab::parse_and_validate("poset omega { ladder X; }");
  return p;
}

inline std::vector<const posetlab::LadderPresentation*> ladder_gallery() { return {&p1(), &p2(), &p3(), &one()}; }

inline posetlab::Elem el(const posetlab::LadderPresentation& p, const char* s) { return p.parse_elem(s); }
inline posetlab::SymSet set(const posetlab::LadderPresentation& p, const char* s) { return p.parse_set(s); }

}  // namespace fx
