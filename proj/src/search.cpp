#include "posetlab/search.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>

#include <omp.h>

#include "posetlab/checkers.hpp"
#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"

namespace posetlab {

void GenConfig::validate() const {
  if (max_base < 1 || max_ladders < 0 || max_constant < 1 || !(density > 0.0 && density <= 1.0))
    throw Error(ErrorKind::kPreconditionFailed, "GenConfig bounds must be positive and density in (0,1]");
}

RawPresentation random_raw(const GenConfig& cfg, std::uint64_t index) {
  cfg.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto pick = [&](Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  const int nb = static_cast<int>(pick(1, cfg.max_base));
  const int nl = static_cast<int>(pick(0, cfg.max_ladders));
  RawPresentation raw;
  raw.name = "g" + std::to_string(index);
  for (int i = 0; i < nb; ++i) raw.base_ids.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < nl; ++i) raw.ladder_ids.push_back("L" + std::to_string(i));

  // Rules mostly follow a random rank so that few presentations are cyclic.
  const int n = nb + nl;
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  auto forward = [&](int u, int v) { return rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)] || coin(0.1); };

  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (i != j && rank[static_cast<std::size_t>(i)] < rank[static_cast<std::size_t>(j)] && coin(cfg.density))
        raw.order.emplace_back(raw.base_ids[static_cast<std::size_t>(i)], raw.base_ids[static_cast<std::size_t>(j)]);
  using K = RelStmt::Kind;
  for (int l = 0; l < nl; ++l) {
    const std::string& lad = raw.ladder_ids[static_cast<std::size_t>(l)];
    for (int b = 0; b < nb; ++b) {
      const std::string& base = raw.base_ids[static_cast<std::size_t>(b)];
      if (coin(cfg.density) && forward(b, nb + l)) raw.rels.push_back({base, lad, K::kFrom, pick(0, cfg.max_constant)});
      if (coin(cfg.density) && forward(nb + l, b)) {
        if (coin(0.75))
          raw.rels.push_back({lad, base, K::kAlways, 0});
        else
          raw.rels.push_back({lad, base, K::kUpto, pick(0, cfg.max_constant)});
      }
    }
    for (int m = 0; m < nl; ++m) {
      if (m == l || !coin(cfg.density / 2) || !forward(nb + l, nb + m)) continue;
      const std::string& other = raw.ladder_ids[static_cast<std::size_t>(m)];
      if (coin(0.5))
        raw.rels.push_back({lad, other, K::kShift, pick(-cfg.max_constant, cfg.max_constant)});
      else
        raw.rels.push_back({lad, other, K::kTail, pick(0, cfg.max_constant)});
    }
  }
  return raw;
}

std::optional<LadderPresentation> random_presentation(const GenConfig& cfg, std::uint64_t index) {
  RawPresentation raw = random_raw(cfg, index);
  try {
    return LadderPresentation::validate(raw);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kCycle || e.kind() == ErrorKind::kInexpressibleClosure) return std::nullopt;
    throw;
  }
}

struct PropertyQuery::Node {
  enum class Kind { kName, kNot, kAnd, kOr } kind = Kind::kName;
  std::string name;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

class QueryParser {
 public:
  explicit QueryParser(std::string_view t) : t_(t) {}

  std::shared_ptr<const PropertyQuery::Node> run() {
    auto n = parse_or();
    skip();
    if (i_ != t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return n;
  }

 private:
  using Node = PropertyQuery::Node;
  using Ptr = std::shared_ptr<const Node>;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kQueryParse, what + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Ptr binary(Node::Kind k, Ptr a, Ptr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = {std::move(a), std::move(b)};
    return n;
  }
  Ptr parse_or() {
    Ptr a = parse_and();
    while (eat('|')) a = binary(Node::Kind::kOr, a, parse_and());
    return a;
  }
  Ptr parse_and() {
    Ptr a = parse_unary();
    while (eat('&')) a = binary(Node::Kind::kAnd, a, parse_unary());
    return a;
  }
  Ptr parse_unary() {
    if (eat('!')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kNot;
      n->kids = {parse_unary()};
      return n;
    }
    if (eat('(')) {
      Ptr a = parse_or();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    skip();
    std::size_t start = i_;
    while (i_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_' || t_[i_] == '-')) ++i_;
    if (start == i_) fail(i_ < t_.size() ? "unexpected '" + std::string(1, t_[i_]) + "'" : "unexpected end of query");
    auto n = std::make_shared<Node>();
    n->name = canonical_property_name(t_.substr(start, i_ - start));
    return n;
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

bool eval_node(const PropertyQuery::Node& n, const PropertyReport& r) {
  using K = PropertyQuery::Node::Kind;
  switch (n.kind) {
    case K::kName:
      return r.is(n.name);
    case K::kNot:
      return !eval_node(*n.kids[0], r);
    case K::kAnd:
      return eval_node(*n.kids[0], r) && eval_node(*n.kids[1], r);
    case K::kOr:
      return eval_node(*n.kids[0], r) || eval_node(*n.kids[1], r);
  }
  return false;
}

struct Slot {
  bool valid = false;
  bool dcpo = false;
  std::optional<ScanMatch> match;
  std::optional<Error> error;
};

Slot scan_one(const GenConfig& cfg, std::uint64_t index, const PropertyQuery& q) {
  Slot s;
  try {
    auto p = random_presentation(cfg, index);
    if (!p) return s;
    s.valid = true;
    PropertyReport r = theorem_suite(*p);
    s.dcpo = r.is("dcpo");
    if (q.eval(r)) s.match = ScanMatch{index, p->raw(), std::move(r)};
  } catch (const Error& e) {
    s.error = e;
  }
  return s;
}

ScanSummary merge(std::vector<Slot>& slots) {
  ScanSummary out;
  out.count = slots.size();
  for (auto& s : slots) {
    if (s.error) throw *s.error;
    out.generated += s.valid;
    out.rejected += !s.valid;
    out.dcpos += s.dcpo;
    if (s.match) out.matches.push_back(std::move(*s.match));
  }
  return out;
}

}  // namespace

PropertyQuery PropertyQuery::parse(std::string_view text) {
  PropertyQuery q;
  q.text_ = std::string(text);
  q.root_ = QueryParser(text).run();
  return q;
}

bool PropertyQuery::eval(const PropertyReport& r) const { return eval_node(*root_, r); }

ScanSummary scan(const GenConfig& cfg, std::uint64_t count, const PropertyQuery& q, int jobs) {
  cfg.validate();
  std::vector<Slot> slots(count);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) slots[static_cast<std::size_t>(i)] = scan_one(cfg, static_cast<std::uint64_t>(i), q);
  return merge(slots);
}

ScanSummary scan_serial(const GenConfig& cfg, std::uint64_t count, const PropertyQuery& q) {
  cfg.validate();
  std::vector<Slot> slots(count);
  for (std::uint64_t i = 0; i < count; ++i) slots[i] = scan_one(cfg, i, q);
  return merge(slots);
}

nlohmann::ordered_json scan_summary_json(const ScanSummary& s, const GenConfig& cfg, const PropertyQuery& q) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = {{"seed", cfg.seed},
                 {"max_base", cfg.max_base},
                 {"max_ladders", cfg.max_ladders},
                 {"density", cfg.density},
                 {"max_constant", cfg.max_constant}};
  j["query"] = q.text();
  j["count"] = s.count;
  j["generated"] = s.generated;
  j["rejected"] = s.rejected;
  j["dcpos"] = s.dcpos;
  j["matches"] = nlohmann::ordered_json::array();
  for (const auto& m : s.matches) j["matches"].push_back({{"index", m.index}, {"file", m.raw.name + ".pos"}, {"report", report_to_json(m.report)}});
  return j;
}

void write_scan(const ScanSummary& s, const GenConfig& cfg, const PropertyQuery& q, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const auto& m : s.matches) {
    std::ofstream out(fs::path(dir) / (m.raw.name + ".pos"));
    out << print_presentation(m.raw);
  }
  std::ofstream out(fs::path(dir) / "summary.json");
  out << scan_summary_json(s, cfg, q).dump(2) << "\n";
}

}  // namespace posetlab
