#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"
#include "posetlab/ladder.hpp"
#include "posetlab/search.hpp"

using namespace posetlab;

namespace {

std::string dump(const ScanSummary& s, const GenConfig& cfg, const PropertyQuery& q) {
  return scan_summary_json(s, cfg, q).dump(2);
}

}  // namespace

TEST_CASE("generation snapshot") {
  const char* g0 =
      "poset g0 {\n"
      "  base a b;\n"
      "  ladder L0;\n"
      "  rel {\n"
      "    L0 <= a always;\n"
      "    b <= L0 from 0;\n"
      "  }\n"
      "}\n";
  CHECK(print_presentation(random_raw(GenConfig{}, 0)) == g0);
  REQUIRE(random_presentation(GenConfig{}, 0).has_value());
}

TEST_CASE("generation is deterministic") {
  GenConfig cfg;
  cfg.seed = 99;
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(random_raw(cfg, i) == random_raw(cfg, i));
  GenConfig other = cfg;
  other.seed = 100;
  int same = 0;
  for (std::uint64_t i = 0; i < 50; ++i) same += random_raw(cfg, i) == random_raw(other, i);
  CHECK(same < 50);
}

TEST_CASE("no ladders gives finite posets") {
  GenConfig cfg;
  cfg.max_ladders = 0;
  cfg.max_base = 6;
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto p = random_presentation(cfg, i);
    REQUIRE(p);
    CHECK(p->num_ladders() == 0);
    CHECK(p->num_base() >= 1);
    CHECK(is_dcpo(*p).holds);
  }
}

TEST_CASE("config validation") {
  GenConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_base = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = GenConfig{};
  cfg.density = 1.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("query parsing") {
  PropertyReport r = PropertyReport::blank("t");
  r.set("exact", false);
  r.set("quasiexact", true);
  r.set("dcpo", true);
  CHECK(PropertyQuery::parse("quasiexact & !exact").eval(r));
  CHECK(PropertyQuery::parse("exact | quasiexact").eval(r));
  CHECK_FALSE(PropertyQuery::parse("exact | !quasiexact & dcpo").eval(r));
  CHECK(PropertyQuery::parse("!(exact & dcpo)").eval(r));
  CHECK(PropertyQuery::parse("weakly-increasing | dcpo").eval(r));
  for (const char* bad : {"((", "exact &", "bogus", "exact quasiexact", "", "!"}) {
    try {
      PropertyQuery::parse(bad);
      FAIL("parsed: " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kQueryParse);
    }
  }
}

TEST_CASE("scan queries") {
  GenConfig cfg;
  auto qe = scan(cfg, 500, PropertyQuery::parse("quasiexact & !exact"));
  CHECK_FALSE(qe.matches.empty());
  for (auto& m : qe.matches) {
    CHECK(m.report.value("quasiexact") == true);
    CHECK(m.report.value("exact") == false);
  }
  CHECK(scan(cfg, 500, PropertyQuery::parse("exact & !quasiexact")).matches.empty());
  auto all = scan(cfg, 300, PropertyQuery::parse("dcpo"));
  auto q = scan(cfg, 300, PropertyQuery::parse("dcpo & quasiexact"));
  CHECK(all.dcpos == all.matches.size());
  CHECK(q.matches.size() == all.dcpos);
  CHECK(all.rejection_rate() < 0.9);
  CHECK(all.generated + all.rejected == all.count);
}

TEST_CASE("parallel scan equals the serial reference") {
  GenConfig cfg;
  cfg.seed = 7;
  auto q = PropertyQuery::parse("quasicontinuous | !meet_continuous");
  auto serial = scan_serial(cfg, 200, q);
  for (int jobs : {1, 2, 4}) CHECK(dump(scan(cfg, 200, q, jobs), cfg, q) == dump(serial, cfg, q));
}

TEST_CASE("write_scan") {
  namespace fs = std::filesystem;
  GenConfig cfg;
  auto q = PropertyQuery::parse("!meet_continuous");
  auto s = scan(cfg, 100, q);
  REQUIRE_FALSE(s.matches.empty());
  fs::path dir = fs::temp_directory_path() / "posetlab_write_scan";
  fs::remove_all(dir);
  write_scan(s, cfg, q, dir.string());
  for (auto& m : s.matches) {
    fs::path f = dir / ("g" + std::to_string(m.index) + ".pos");
    REQUIRE(fs::exists(f));
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(parse_presentation(text) == m.raw);
  }
  std::ifstream js(dir / "summary.json");
  auto j = nlohmann::json::parse(js);
  CHECK(j["count"] == 100);
  CHECK(j["matches"].size() == s.matches.size());
  fs::remove_all(dir);
}
