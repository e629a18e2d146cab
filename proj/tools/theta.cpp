// theta: build, analyse and verify prime coprime graphs of finite groups.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "theta/errors.hpp"
#include "theta/graph.hpp"
#include "theta/report.hpp"
#include "theta/search.hpp"
#include "theta/selector.hpp"
#include "theta/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTheorem = 2;

struct SelectorArgs {
  std::optional<std::uint64_t> cyclic, dihedral, dicyclic, heisenberg;
  std::vector<std::uint64_t> elem_abelian;
  std::vector<std::string> product;
  std::optional<std::string> custom;

  void attach(CLI::App* cmd) {
    auto* group = cmd->add_option_group("group", "exactly one group selector");
    group->add_option("--cyclic", cyclic, "Z_N")->type_name("N");
    group->add_option("--dihedral", dihedral, "D_N (order 2N)")->type_name("N");
    group->add_option("--dicyclic", dicyclic, "Dic_N (order 4N)")->type_name("N");
    group->add_option("--elem-abelian", elem_abelian, "(Z_P)^M")->expected(2)->type_name("P M");
    group->add_option("--heisenberg", heisenberg, "UT(3,P)")->type_name("P");
    group->add_option("--product", product, "direct product of two selectors, e.g. cyclic:2 dihedral:3")
        ->expected(2)
        ->type_name("SEL SEL");
    group->add_option("--custom", custom, "JSON file {\"labels\": [...], \"orders\": [...]}")->type_name("PATH");
    group->require_option(1);
  }

  std::string key() const {
    if (cyclic) return "cyclic:" + std::to_string(*cyclic);
    if (dihedral) return "dihedral:" + std::to_string(*dihedral);
    if (dicyclic) return "dicyclic:" + std::to_string(*dicyclic);
    if (heisenberg) return "heisenberg:" + std::to_string(*heisenberg);
    if (!elem_abelian.empty()) {
      return "elementary_abelian:" + std::to_string(elem_abelian[0]) + "," + std::to_string(elem_abelian[1]);
    }
    if (!product.empty()) return product[0] + "*" + product[1];
    return "custom:" + *custom;
  }
};

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("theta");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("THETA_LOG")) {
    const std::string s = lvl;
    if (s == "error") spdlog::set_level(spdlog::level::err);
    else if (s == "warn") spdlog::set_level(spdlog::level::warn);
    else if (s == "info") spdlog::set_level(spdlog::level::info);
    else if (s == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring unknown THETA_LOG level '{}'", s);
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw theta::ValidationError("cannot write '" + out_path + "'");
  out << text;
}

theta::ThetaGraph load_graph(const SelectorArgs& sel) {
  const std::string key = sel.key();
  spdlog::info("building Theta for {}", key);
  theta::ThetaGraph t(theta::parse_selector(key));
  for (const auto& w : t.warnings()) spdlog::warn("{}: {}", w.code, w.message);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Prime coprime graphs of finite groups: structure, connectivity and signless Laplacian spectra"};
  app.require_subcommand(1);

  SelectorArgs analyze_sel, spectrum_sel, export_sel;
  std::string out_path;
  bool no_timestamp = false;
  std::uint64_t budget = theta::kDefaultHamiltonBudget;

  auto* analyze = app.add_subcommand("analyze", "full structural and spectral report as JSON");
  analyze_sel.attach(analyze);
  analyze->add_option("--out", out_path, "write the report here instead of stdout");
  analyze->add_flag("--no-timestamp", no_timestamp, "omit generated_at for byte-identical output");
  analyze->add_option("--budget", budget, "Hamiltonian search node budget")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "numeric and closed-form signless Laplacian spectrum");
  spectrum_sel.attach(spectrum);
  spectrum->add_option("--out", out_path, "write the JSON here instead of stdout");

  std::string suite = "all";
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "run the theorem cross-check battery");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(theta::verify_suite_names()));
  verify->add_flag("--corrupt", corrupt, "negative control: drop one identity edge in every graph");

  std::uint64_t max_order = 20;
  std::string families_arg = "cyclic,dihedral,dicyclic,elementary_abelian,heisenberg,product";
  bool skip_completed = false;
  unsigned threads = 0;
  auto* search = app.add_subcommand("search", "classify groups by kappa versus |S(G)|");
  search->add_option("--max-order", max_order, "largest group order")->required()->check(CLI::Range(3u, 100000u));
  search->add_option("--families", families_arg, "comma-separated family list");
  search->add_option("--out", out_path, "CSV output path; a JSON-lines twin is written to PATH.jsonl");
  search->add_flag("--skip-completed", skip_completed, "skip groups already present in --out and append");
  search->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  std::string format = "dot";
  auto* exp = app.add_subcommand("export", "write the graph as DOT or JSON");
  export_sel.attach(exp);
  exp->add_option("--format", format, "dot or json");
  exp->add_option("--out", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      theta::ReportOptions opts;
      opts.hamilton_budget = budget;
      opts.timestamp = !no_timestamp;
      const auto t = load_graph(analyze_sel);
      write_output(theta::analysis_report(t, opts).dump(2) + "\n", out_path);
    } else if (*spectrum) {
      const auto t = load_graph(spectrum_sel);
      nlohmann::json doc = {{"report_version", theta::kReportVersion},
                            {"group", theta::group_json(t.group())},
                            {"spectrum", theta::spectrum_json(t)}};
      write_output(doc.dump(2) + "\n", out_path);
    } else if (*verify) {
      const auto factory = corrupt ? theta::corrupted_graph_factory() : theta::default_graph_factory();
      const auto rows = theta::run_verify(suite, factory);
      const bool ok = theta::print_verify_table(std::cout, rows);
      std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
      return ok ? kExitOk : kExitTheorem;
    } else if (*search) {
      theta::SearchOptions opts;
      opts.max_order = max_order;
      opts.threads = threads;
      opts.families.clear();
      std::stringstream ss(families_arg);
      for (std::string f; std::getline(ss, f, ',');) {
        if (!f.empty()) opts.families.insert(theta::parse_family(f));
      }
      std::set<std::string> skip;
      std::optional<std::ofstream> csv, jsonl;
      if (!out_path.empty()) {
        bool need_header = true;
        if (skip_completed) {
          std::ifstream prior(out_path);
          if (prior) {
            skip = theta::completed_ids(prior);
            prior.clear();
            prior.seekg(0, std::ios::end);
            need_header = prior.tellg() <= 0;
          }
        }
        const auto mode = skip_completed ? std::ios::app : std::ios::trunc;
        csv.emplace(out_path, std::ios::out | mode);
        jsonl.emplace(out_path + ".jsonl", std::ios::out | mode);
        if (!*csv || !*jsonl) throw theta::ValidationError("cannot write '" + out_path + "'");
        if (need_header) *csv << theta::kSearchCsvHeader << '\n';
      } else {
        std::cout << theta::kSearchCsvHeader << '\n';
      }
      const auto summary = theta::run_search(opts, csv ? &*csv : &std::cout, jsonl ? &*jsonl : nullptr, skip);
      std::ostream& log = out_path.empty() ? std::cerr : std::cout;
      log << "evaluated " << summary.evaluated << ", skipped " << summary.skipped << '\n';
      for (const auto& [cls, count] : summary.per_class) log << "  " << cls << ": " << count << '\n';
    } else if (*exp) {
      const auto t = load_graph(export_sel);
      if (format == "dot") {
        write_output(theta::export_dot(t), out_path);
      } else if (format == "json") {
        write_output(theta::export_json(t), out_path);
      } else {
        throw theta::ValidationError("unknown export format '" + format + "' (expected dot or json)");
      }
    }
  } catch (const theta::ConsistencyError& ex) {
    spdlog::error("theorem cross-check failed: {}", ex.what());
    return kExitTheorem;
  } catch (const std::exception& ex) {
    spdlog::error("{}", ex.what());
    return kExitInput;
  }
  return kExitOk;
}
