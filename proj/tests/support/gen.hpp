#pragma once

#include <random>
#include <string>
#include <vector>

#include "posetlab/finite_poset.hpp"
#include "posetlab/ladder.hpp"
#include "posetlab/search.hpp"

namespace gen {

using posetlab::Index;
using posetlab::IndexSet;
using posetlab::SymSet;

inline IndexSet random_index_set(std::mt19937_64& rng, Index limit = 8) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<Index> idx(0, limit);
  switch (kind(rng)) {
    case 0:
      return {};
    case 1:
      return IndexSet::point(idx(rng));
    case 2: {
      Index a = idx(rng), b = idx(rng);
      return IndexSet::segment(std::min(a, b), std::max(a, b));
    }
    case 3:
      return IndexSet::tail(idx(rng));
    default:
      return IndexSet::point(idx(rng)) | IndexSet::tail(idx(rng) + limit / 2);
  }
}

inline SymSet random_symset(std::mt19937_64& rng, int nb, int nl) {
  SymSet s(nb, nl);
  std::bernoulli_distribution coin(0.4);
  for (int b = 0; b < nb; ++b) s.set_base(b, coin(rng));
  for (int l = 0; l < nl; ++l) s.ladder(l) = random_index_set(rng);
  return s;
}

inline SymSet random_nonempty(std::mt19937_64& rng, const posetlab::LadderPresentation& p) {
  SymSet s = random_symset(rng, p.num_base(), p.num_ladders());
  while (s.empty()) s = random_symset(rng, p.num_base(), p.num_ladders());
  return s;
}

// Random finite set of points (size 1..k) with ladder indices <= limit.
inline SymSet random_finite(std::mt19937_64& rng, const posetlab::LadderPresentation& p, int k, Index limit) {
  auto pts = p.scan_points(limit);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_int_distribution<int> size(1, k);
  SymSet s = p.empty_set();
  for (int i = size(rng); i > 0; --i) s.insert(pts[pick(rng)]);
  return s;
}

inline posetlab::FinPoset random_finposet(std::mt19937_64& rng, int max_n = 8, double density = 0.3) {
  std::uniform_int_distribution<int> size(1, max_n);
  int n = size(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::bernoulli_distribution coin(density);
  std::vector<posetlab::FinPoset::Pair> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) covers.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
  return posetlab::FinPoset::build(names, covers);
}

// Validated presentations from the search generator, skipping rejects.
inline std::vector<posetlab::LadderPresentation> random_presentations(std::size_t n, std::uint64_t seed = 7,
                                                                      bool dcpo_only = false) {
  posetlab::GenConfig cfg;
  cfg.seed = seed;
  std::vector<posetlab::LadderPresentation> out;
  for (std::uint64_t i = 0; out.size() < n; ++i) {
    auto p = posetlab::random_presentation(cfg, i);
    if (!p) continue;
    if (dcpo_only && !posetlab::is_dcpo(*p).holds) continue;
    out.push_back(std::move(*p));
  }
  return out;
}

}  // namespace gen
