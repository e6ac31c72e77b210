#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posetlab/cli.hpp"

namespace {

const std::string kGallery = std::string(POSETLAB_TEST_DATA) + "/gallery/";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = posetlab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", kGallery + "p2.pos", "--properties", "exact"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "exact=false"));
  CHECK(has(r.out, "witness top"));
  r = run({"check", kGallery + "p1.pos", "--properties", "weakly-increasing"});
  CHECK(has(r.out, R"(weakly_increasing=false  witness ["a","b","c","d"])"));
  r = run({"check", kGallery + "p1.pos", "--properties", "dcpo"});
  CHECK(has(r.out, "dcpo=true"));
  r = run({"check", kGallery + "p1.pos", "--properties", "exact,quasiexact", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["properties"] == nlohmann::json{{"exact", true}, {"quasiexact", true}});
  CHECK(r.err.empty());
}

TEST_CASE("check expectations and errors") {
  CHECK(run({"check", kGallery + "p1.pos", "--expect", "exact=true"}).code == 0);
  auto r = run({"check", kGallery + "p1.pos", "--expect", "exact=false"});
  CHECK(r.code == 1);
  CHECK(run({"check", kGallery + "missing.pos"}).code == 2);
  CHECK(run({"check", kGallery + "p1.pos", "--properties", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  namespace fs = std::filesystem;
  fs::path bad = fs::temp_directory_path() / "posetlab_bad.pos";
  std::ofstream(bad) << "poset p {\n  base a\n}\n";
  r = run({"check", bad.string()});
  CHECK(r.code == 2);
  CHECK(has(r.err, "3:1"));
  CHECK(r.out.empty());
  fs::remove(bad);
}

TEST_CASE("rel") {
  auto r = run({"rel", kGallery + "p1.pos", "--wwb", "a", "c"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "false"));
  CHECK(has(r.out, "Tails(X)"));
  r = run({"rel", kGallery + "p1.pos", "--wwb", "a", "b"});
  CHECK(has(r.out, ": true"));
  r = run({"rel", kGallery + "p2.pos", "--wb", "Y1(0)", "Y1(5)"});
  CHECK(has(r.out, "false"));
  CHECK(has(r.out, "Tails(Y2) has sup top"));
  r = run({"rel", kGallery + "p1.pos", "--wwb", "a", "c", "--oracle"});
  CHECK(has(r.out, "oracle: false"));
  CHECK(run({"rel", kGallery + "p1.pos", "--wwb", "q", "b"}).code == 2);
  CHECK(run({"rel", kGallery + "p1.pos", "--wwb", "--wb", "a", "b"}).code == 2);
}

TEST_CASE("topo") {
  auto r = run({"topo", kGallery + "p2.pos", "{Y1(0..)}", "--topology", "wf", "--closure"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "{top, Y1(0..)}"));
  CHECK(run({"topo", kGallery + "p2.pos", "{top}", "--topology", "wwb"}).code == 2);
}

TEST_CASE("gallery") {
  CHECK(run({"gallery", "--run-all"}).code == 0);
  auto r = run({"gallery", "--poset", "J"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "12/12"));
  CHECK(run({"gallery", "--poset", "P9"}).code == 2);
  namespace fs = std::filesystem;
  fs::path facts = fs::temp_directory_path() / "posetlab_facts.json";
  std::ofstream(facts) << R"([{"poset": "P2", "property": "exact", "expected": true, "statement": "control"}])";
  r = run({"gallery", "--run-all", "--facts", facts.string()});
  CHECK(r.code == 1);
  fs::remove(facts);
}

TEST_CASE("search and export") {
  auto a = run({"search", "--seed", "42", "--count", "100", "--query", "quasiexact & !exact"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"search", "--seed", "42", "--count", "100", "--query", "quasiexact & !exact", "--jobs", "3"}).out);
  CHECK(run({"search", "--query", "(("}).code == 2);
  CHECK(run({"search", "--density", "2"}).code == 2);
  auto e = run({"export", kGallery + "p1.pos", "--dot", "--depth", "2"});
  CHECK(e.code == 0);
  CHECK(has(e.out, "digraph"));
  CHECK(has(e.out, "\"X(2)\" -> \"c\";"));
  auto src = run({"export", kGallery + "p2.pos"});
  CHECK(has(src.out, "Y1 <= top always;"));
}

TEST_CASE("config file") {
  namespace fs = std::filesystem;
  fs::path cfg = fs::temp_directory_path() / "posetlab_cfg.json";
  std::ofstream(cfg) << R"({"bounds": {"M": 0}})";
  CHECK(run({"--config", cfg.string(), "gallery", "--poset", "J"}).code == 2);
  std::ofstream(cfg) << R"({"depth": 1})";
  auto r = run({"--config", cfg.string(), "export", kGallery + "p2.pos", "--dot"});
  CHECK(has(r.out, "Y1(1)"));
  CHECK_FALSE(has(r.out, "Y1(2)"));
  std::ofstream(cfg) << "{not json";
  CHECK(run({"--config", cfg.string(), "gallery", "--poset", "P1"}).code == 2);
  fs::remove(cfg);
}
