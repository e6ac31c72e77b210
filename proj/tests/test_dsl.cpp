#include <doctest.h>

#include <map>
#include <regex>
#include <set>

#include "posetlab/checkers.hpp"
#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"
#include "posetlab/gallery.hpp"
#include "posetlab/report.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace posetlab;
using fx::el;

namespace {

ErrorKind error_of(const char* text) {
  try {
    parse_and_validate(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kSuiteFailure;
}

std::vector<std::pair<std::string, std::string>> dot_edges(const std::string& dot) {
  static const std::regex edge(R"re("([^"]+)" -> "([^"]+)";)re");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it) out.emplace_back((*it)[1], (*it)[2]);
  return out;
}

std::size_t dot_nodes(const std::string& dot) {
  static const std::regex node(R"re(^  "[^"]+";$)re", std::regex::multiline);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("parse examples") {
  auto p1 = parse_and_validate("poset p1 { base a b c d; ladder X; order { a<b; b<c; c<d; } rel { X <= c always; } }");
  CHECK(p1.num_base() == 4);
  CHECK(p1.num_ladders() == 1);
  CHECK(p1.leq(el(p1, "X(9)"), el(p1, "c")));
  CHECK_FALSE(p1.leq(el(p1, "a"), el(p1, "X(0)")));
  auto p2 = parse_and_validate("poset p2 { base top; ladder Y1 Y2; rel { Y1 <= top always; Y2 <= top always; } }");
  CHECK(p2.leq(el(p2, "Y2(3)"), el(p2, "top")));
  CHECK_FALSE(p2.leq(el(p2, "Y1(3)"), el(p2, "Y2(3)")));
  CHECK(error_of("poset bad { order { a<a; } }") == ErrorKind::kUnknownId);
  CHECK(error_of("poset bad { base a; ladder a; }") == ErrorKind::kDuplicateId);
  auto raw = parse_presentation("poset c { base a; ladder L M; # note\n rel { L <= a upto 3; a <= M from 2; L <= M tail 4; M <= L shift -1; } }");
  REQUIRE(raw.rels.size() == 4);
  CHECK(raw.rels[0].kind == RelStmt::Kind::kUpto);
  CHECK(raw.rels[3].kind == RelStmt::Kind::kShift);
  CHECK(raw.rels[3].value == -1);
}

TEST_CASE("parse errors carry locations") {
  auto loc = [](const char* text) {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(loc("poset p {\n  base a\n}") == std::pair{3, 1});
  CHECK(loc("poset p { base a; }\nextra") == std::pair{2, 1});
  CHECK(loc("poset p {\n  rel { a <= b sideways 3; }\n}") == std::pair{2, 16});
  CHECK(loc("poset 3 {}") == std::pair{1, 7});
  CHECK(loc("poset p { base a; # c\n ladder L; rel { L <= a upto x; } }") == std::pair{2, 30});
  CHECK(loc("") == std::pair{1, 1});
  CHECK(error_of("poset p { base a; ladder L; rel { L <= a shift 1; } }") == ErrorKind::kInvalidRule);
}

TEST_CASE("print and parse round trip") {
  for (auto* p : fx::ladder_gallery()) CHECK(parse_presentation(print_presentation(p->raw())) == p->raw());
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto raw = random_raw(GenConfig{}, i);
    auto text = print_presentation(raw);
    CHECK(parse_presentation(text) == raw);
    CHECK(print_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("export_dot examples") {
  auto d1 = export_dot(fx::p1(), 2);
  CHECK(dot_nodes(d1) == 7);
  std::set<std::pair<std::string, std::string>> e1;
  for (auto& e : dot_edges(d1)) e1.insert(e);
  CHECK(e1 == std::set<std::pair<std::string, std::string>>{
                  {"a", "b"}, {"b", "c"}, {"c", "d"}, {"X(0)", "X(1)"}, {"X(1)", "X(2)"}, {"X(2)", "c"}});
  auto d0 = export_dot(fx::one(), 3);
  CHECK(dot_nodes(d0) == 1);
  CHECK(dot_edges(d0).empty());
  auto d2 = export_dot(fx::p2(), 0);
  CHECK(dot_edges(d2) == std::vector<std::pair<std::string, std::string>>{{"Y1(0)", "top"}, {"Y2(0)", "top"}});
  CHECK(export_dot(fx::p2(), 0) == d2);
}

TEST_CASE("export_dot closes to the truncation order") {
  auto ps = gen::random_presentations(40, 31);
  for (auto* g : fx::ladder_gallery()) ps.push_back(*g);
  for (const auto& p : ps) {
    const Index depth = 3;
    FinPoset t = truncate(p, depth);
    auto dot = export_dot(p, depth);
    CHECK(dot_nodes(dot) == t.size());
    const std::size_t n = t.size();
    std::vector<char> reach(n * n, 0);
    for (auto& [a, b] : dot_edges(dot)) {
      FinIndex i = t.index(a), j = t.index(b);
      CHECK(t.less(i, j));
      reach[i * n + j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach[k * n + j]) reach[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(static_cast<bool>(reach[i * n + j]) == t.less(i, j));
        if (reach[i * n + i]) FAIL("cycle at " << t.name(i));
      }
  }
}

TEST_CASE("report_json examples") {
  auto j2 = nlohmann::json::parse(report_json(property_report(fx::p2())));
  CHECK(j2["schema"] == 1);
  CHECK(j2["poset"] == "p2");
  CHECK(j2["properties"]["exact"] == false);
  CHECK(j2["witnesses"]["exact"] == "top");
  auto j1 = nlohmann::json::parse(report_json(property_report(fx::p1())));
  CHECK(j1["properties"]["weakly_increasing"] == false);
  CHECK(j1["witnesses"]["weakly_increasing"] == nlohmann::json::array({"a", "b", "c", "d"}));
  auto jj = nlohmann::json::parse(report_json(johnstone_report()));
  CHECK(jj["properties"]["quasicontinuous"] == nlohmann::json{{"audited", false}});
  CHECK(jj["properties"]["exact"] == nlohmann::json{{"audited", true}});
}

TEST_CASE("report_json key order and determinism") {
  auto text = report_json(property_report(fx::p1()));
  CHECK(text == report_json(property_report(fx::p1())));
  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "poset", "properties", "witnesses", "anomalies"});
  std::vector<std::string> props;
  for (auto& [k, v] : j["properties"].items()) props.push_back(k);
  CHECK(props == kPropertyNames);
  for (const auto& p : gen::random_presentations(30, 37))
    CHECK(report_json(property_report(p)) == report_json(property_report(p)));
}
