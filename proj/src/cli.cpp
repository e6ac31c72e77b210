#include "posetlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "posetlab/checkers.hpp"
#include "posetlab/dsl.hpp"
#include "posetlab/error.hpp"
#include "posetlab/gallery.hpp"
#include "posetlab/oracle.hpp"
#include "posetlab/search.hpp"
#include "posetlab/topology.hpp"

namespace posetlab {

namespace {

struct Config {
  Index depth = 4;
  Bounds bounds;
  Index nstar_slack = 0;
};

// Keys: depth, bounds.M, bounds.s, bounds.B, nstar_slack.
Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot read config " + path);
  nlohmann::json j;
  try {
    in >> j;
    c.depth = j.value("depth", c.depth);
    c.nstar_slack = j.value("nstar_slack", c.nstar_slack);
    if (j.contains("bounds")) {
      const auto& b = j["bounds"];
      c.bounds.m = b.value("M", c.bounds.m);
      c.bounds.s = b.value("s", c.bounds.s);
      c.bounds.grid = b.value("B", c.bounds.grid);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LadderPresentation load(const std::string& path) { return parse_and_validate(read_file(path)); }

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kSuiteFailure:
    case ErrorKind::kImplicationViolation:
    case ErrorKind::kCertificateRejected:
      return 1;
    default:
      return 2;
  }
}

SymSet parse_elems(const LadderPresentation& p, const std::vector<std::string>& items) {
  SymSet s = p.empty_set();
  for (const auto& item : items) {
    std::string cur;
    int depth = 0;
    auto flush = [&] {
      auto b = cur.find_first_not_of(' ');
      if (b != std::string::npos) s.insert(p.parse_elem(cur.substr(b, cur.find_last_not_of(' ') - b + 1)));
      cur.clear();
    };
    for (char ch : item) {
      depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
      if (ch == ',' && depth == 0)
        flush();
      else
        cur += ch;
    }
    flush();
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  spdlog::logger log("posetlab", sink);
  log.set_pattern("%l: %v");

  CLI::App app{"posetlab: decision procedures for ladder presentations of posets"};
  app.require_subcommand(1);
  std::string config_path;
  if (const char* env = std::getenv("POSETLAB_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "JSON config (depth, bounds.M, bounds.s, bounds.B, nstar_slack)");

  std::string file, format = "text";
  std::vector<std::string> props, expects;
  auto* check = app.add_subcommand("check", "property report for a .pos file");
  check->add_option("file", file, ".pos file")->required();
  check->add_option("--properties", props, "properties to report")->delimiter(',');
  check->add_option("--expect", expects, "name=true|false; exit 1 on mismatch")->delimiter(',');
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  bool wwb = false, wb = false, use_oracle = false;
  std::vector<std::string> rel_args;
  auto* rel = app.add_subcommand("rel", "decide G <<_w x or G << x");
  rel->add_option("file", file)->required();
  auto* wwb_flag = rel->add_flag("--wwb", wwb, "weak way-below");
  rel->add_flag("--wb", wb, "way-below")->excludes(wwb_flag);
  rel->add_flag("--oracle", use_oracle, "cross-check with the brute-force oracle");
  rel->add_option("elems", rel_args, "G elements then x")->required()->expected(2, -1);
  rel->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string topo_name = "scott", set_text;
  bool want_closure = false;
  auto* topo = app.add_subcommand("topo", "interior or closure of a set");
  topo->add_option("file", file)->required();
  topo->add_option("set", set_text, "set such as {a, X(2..)}")->required();
  topo->add_option("--topology", topo_name)->check(CLI::IsMember({"scott", "wwb", "wf"}));
  topo->add_flag("--closure", want_closure, "closure instead of interior");

  bool run_all = false, want_report = false;
  std::string poset_name, facts_path;
  auto* gallery = app.add_subcommand("gallery", "run the fact registry over the fixtures");
  auto* all_flag = gallery->add_flag("--run-all", run_all);
  gallery->add_option("--poset", poset_name)->excludes(all_flag);
  gallery->add_option("--facts", facts_path, "fact registry (JSON)");
  gallery->add_flag("--report", want_report, "print the property report of --poset instead of running facts");
  gallery->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  GenConfig gen;
  std::uint64_t count = 100;
  std::string query = "quasiexact", out_dir;
  int jobs = 0;
  auto* search = app.add_subcommand("search", "scan random presentations");
  search->add_option("--seed", gen.seed);
  search->add_option("--count", count);
  search->add_option("--query", query);
  search->add_option("--out", out_dir, "directory for matches and summary.json");
  search->add_option("--jobs", jobs, "OpenMP threads (0 = default)");
  search->add_option("--max-base", gen.max_base);
  search->add_option("--max-ladders", gen.max_ladders);
  search->add_option("--density", gen.density);
  search->add_option("--max-constant", gen.max_constant);

  bool dot = false;
  Index depth = -1;
  auto* exp = app.add_subcommand("export", "DOT or canonical text of a .pos file");
  exp->add_option("file", file)->required();
  exp->add_flag("--dot", dot, "Hasse diagram of the truncation");
  exp->add_option("--depth", depth);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Config cfg = load_config(config_path);

    if (*check) {
      auto p = load(file);
      PropertyReport r = theorem_suite(p);
      if (!props.empty()) {
        std::vector<std::string> names;
        for (const auto& n : props) names.push_back(canonical_property_name(n));
        r = r.select(names);
      }
      out << (format == "json" ? report_json(r) : report_text(r));
      int code = 0;
      for (const auto& e : expects) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::kQueryParse, "expected name=value in " + e);
        std::string name = canonical_property_name(e.substr(0, eq));
        std::string want = e.substr(eq + 1);
        if (want != "true" && want != "false") throw Error(ErrorKind::kQueryParse, "expected true or false in " + e);
        PropertyReport full = theorem_suite(p);
        auto got = full.value(name);
        if (!got || *got != (want == "true")) {
          err << "mismatch: " << name << " expected " << want << "\n";
          code = 1;
        }
      }
      return code;
    }

    if (*rel) {
      if (!wwb && !wb) throw CLI::ValidationError("rel", "one of --wwb or --wb is required");
      auto p = load(file);
      std::vector<std::string> g(rel_args.begin(), rel_args.end() - 1);
      SymSet gs = parse_elems(p, g);
      Elem x = p.parse_elem(rel_args.back());
      auto ex = wwb ? explain_weak_way_below(p, gs, x) : explain_way_below(p, gs, x);
      std::optional<bool> oracle_verdict;
      if (use_oracle) {
        Index d = p.uniformity_threshold() + cfg.nstar_slack + 3;
        oracle_verdict = wwb ? oracle_wwb(p, gs, x, d) : oracle_wb(p, gs, x, d);
      }
      const std::string op = wwb ? "<<_w" : "<<";
      if (format == "json") {
        nlohmann::ordered_json j;
        j["relation"] = wwb ? "wwb" : "wb";
        j["G"] = p.format(gs);
        j["x"] = p.format(x);
        j["holds"] = ex.holds;
        j["shape"] = ex.shape ? nlohmann::ordered_json(p.format(*ex.shape)) : nlohmann::ordered_json();
        j["sup"] = ex.sup ? nlohmann::ordered_json(p.format(*ex.sup)) : nlohmann::ordered_json();
        if (oracle_verdict) j["oracle"] = *oracle_verdict;
        out << j.dump(2) << "\n";
      } else {
        out << p.format(gs) << " " << op << " " << p.format(x) << ": " << (ex.holds ? "true" : "false") << "\n";
        if (ex.shape)
          out << "  " << p.format(*ex.shape) << " has sup " << p.format(*ex.sup) << " and misses up(G)\n";
        if (oracle_verdict) out << "  oracle: " << (*oracle_verdict ? "true" : "false") << "\n";
      }
      if (oracle_verdict && *oracle_verdict != ex.holds) {
        err << "oracle disagrees\n";
        return 1;
      }
      return 0;
    }

    if (*topo) {
      auto p = load(file);
      SymSet s = p.parse_set(set_text);
      TopologyTag tag = topo_name == "scott" ? TopologyTag::kScott : topo_name == "wwb" ? TopologyTag::kWwb : TopologyTag::kWf;
      SymSet r = want_closure ? closure(p, tag, s) : interior(p, tag, s);
      out << (want_closure ? "closure" : "interior") << "(" << topo_name << ", " << p.format(s) << ") = " << p.format(r) << "\n";
      return 0;
    }

    if (*gallery) {
      if (!run_all && poset_name.empty()) throw CLI::ValidationError("gallery", "give --run-all or --poset");
      if (want_report) {
        if (poset_name.empty()) throw CLI::ValidationError("gallery", "--report needs --poset");
        PropertyReport r = gallery_report(fixture(poset_name), cfg.bounds);
        out << (format == "json" ? report_json(r) : report_text(r));
        return 0;
      }
      auto facts = load_facts(facts_path.empty() ? default_facts_path() : facts_path);
      std::optional<std::string> only;
      if (!poset_name.empty()) only = poset_name;
      SuiteResult s = run_paper_suite(facts, only, cfg.bounds);
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : s.results)
          j.push_back({{"poset", r.fact.poset}, {"property", r.fact.property}, {"passed", r.passed}, {"detail", r.detail}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : s.results)
          out << (r.passed ? "pass " : "FAIL ") << r.fact.poset << " " << r.fact.property << "  " << r.detail << "\n";
        out << s.results.size() - s.failures() << "/" << s.results.size() << " facts hold\n";
      }
      return s.failures() == 0 ? 0 : 1;
    }

    if (*search) {
      PropertyQuery q = PropertyQuery::parse(query);
      ScanSummary s = scan(gen, count, q, jobs);
      log.info("rejection rate {:.3f} ({} of {})", s.rejection_rate(), s.rejected, s.count);
      out << "query " << q.text() << "\n";
      out << "count " << s.count << " generated " << s.generated << " rejected " << s.rejected << " dcpos " << s.dcpos
          << " matches " << s.matches.size() << "\n";
      for (const auto& m : s.matches) out << "  " << m.index << " " << m.raw.name << "\n";
      if (!out_dir.empty()) write_scan(s, gen, q, out_dir);
      return 0;
    }

    if (*exp) {
      auto p = load(file);
      if (dot)
        out << export_dot(p, depth >= 0 ? depth : cfg.depth);
      else
        out << print_presentation(p.raw());
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace posetlab
