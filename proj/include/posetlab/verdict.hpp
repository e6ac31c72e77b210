#pragma once

#include <optional>
#include <string>

namespace posetlab {

template <class W>
struct Verdict {
  bool holds = true;
  std::optional<W> witness;
  std::string note;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(W w, std::string note = {}) { return {false, std::move(w), std::move(note)}; }
};

}  // namespace posetlab
