#include "theta/report.hpp"

#include <chrono>
#include <ctime>

#include "theta/errors.hpp"
#include "theta/spectra.hpp"

namespace theta {

using nlohmann::json;

namespace {

constexpr double kSpectrumTol = 1e-7;

json spectrum_entries(const SpectrumResult& s) {
  json arr = json::array();
  for (const auto& e : s.entries) {
    arr.push_back({{"value_display", e.display()},
                   {"value_numeric", e.value},
                   {"multiplicity", e.multiplicity},
                   {"kind", to_string(s.kind)}});
  }
  return arr;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json group_json(const GroupSpec& g) {
  json profile = json::array();
  for (const auto& [order, count] : order_profile(g)) profile.push_back({{"order", order}, {"count", count}});
  return {{"family", to_string(g.family())},
          {"descriptor", g.descriptor()},
          {"key", g.key()},
          {"params", g.params()},
          {"size", g.size()},
          {"order_profile", profile}};
}

json spectrum_json(const ThetaGraph& t) {
  const auto numeric = eig_sym(build_Q(t));
  json out = {{"numeric", spectrum_entries(numeric)}, {"closed_form", "unsupported"}, {"match", nullptr}};
  const auto& g = t.group();
  if ((g.family() == Family::cyclic || g.family() == Family::dihedral) && !g.params().empty()) {
    try {
      const auto closed = closed_form_spectrum(g.family(), g.params().front());
      out["closed_form"] = spectrum_entries(closed);
      out["match"] = spectra_equal(closed, numeric, kSpectrumTol);
    } catch (const UnsupportedShape&) {
    }
  }
  return out;
}

json analysis_report(const ThetaGraph& t, const ReportOptions& opts) {
  json props;
  const bool connected = is_connected(t);
  props["connected"] = {{"value", connected}, {"method", "bfs"}};
  if (connected) {
    props["diameter"] = {{"value", diameter(t)}, {"method", "bfs"}};
  } else {
    props["diameter"] = {{"value", nullptr}, {"method", "bfs"}};
  }
  const auto g = girth(t);
  props["girth"] = {{"value", g ? json(*g) : json("infinite")}, {"method", "bfs"}};
  props["eulerian"] = {{"value", is_eulerian(t)}, {"method", "dual_criteria"}};
  const bool complete = is_complete(t);
  props["complete"] = {{"value", complete}, {"method", "dual_criteria"}};
  const auto dom = domination_number(t);
  props["domination_number"] = {{"value", dom.number}, {"method", "dual_criteria"}, {"witness", dom.witness}};
  const auto pl = planarity(t.adjacency());
  props["planar"] = {{"value", pl.planar}, {"method", to_string(pl.method)}};

  const auto ham = is_hamiltonian(t, opts.hamilton_budget);
  json hj = {{"status", to_string(ham.status)},
             {"method", to_string(ham.method)},
             {"nodes_explored", ham.nodes_explored},
             {"budget", opts.hamilton_budget}};
  if (ham.status == HamiltonStatus::yes) hj["cycle"] = ham.cycle;
  if (ham.method == HamiltonMethod::toughness_refuted) {
    hj["witness"] = ham.tough_witness;
    hj["witness_components"] = ham.witness_components;
  }
  props["hamiltonian"] = hj;

  const auto kappa = vertex_connectivity(t);
  json kj = {{"value", kappa.kappa}, {"method", to_string(kappa.method)}};
  if (!kappa.witness_cut.empty()) kj["witness"] = kappa.witness_cut;
  props["vertex_connectivity"] = kj;

  const auto s = prime_order_set(t);
  props["prime_order_set"] = {{"size", s.size()}, {"indices", s.indices}, {"method", "order_scan"}};
  const auto op = open_problem_classify(t, kappa);
  props["open_problem_class"] = {{"value", to_string(op.cls)}, {"method", "kappa_vs_S"}};

  json warnings = json::array();
  for (const auto& w : t.warnings()) warnings.push_back({{"code", w.code}, {"message", w.message}});

  json report = {{"report_version", kReportVersion},
                 {"group", group_json(t.group())},
                 {"graph",
                  {{"vertices", t.n_vertices()},
                   {"edges", t.edge_count()},
                   {"degree_min", min_degree(t)},
                   {"degree_max", max_degree(t)}}},
                 {"properties", props},
                 {"spectrum", spectrum_json(t)},
                 {"warnings", warnings}};
  if (opts.timestamp) report["generated_at"] = utc_now();
  return report;
}

std::string revalidate_report(const json& report, const ThetaGraph& t) {
  try {
    const auto& props = report.at("properties");
    const auto& ham = props.at("hamiltonian");
    if (ham.contains("cycle") && !validate_hamiltonian_cycle(t.adjacency(), ham.at("cycle").get<std::vector<std::size_t>>())) {
      return "hamiltonian cycle does not re-validate";
    }
    if (ham.contains("witness")) {
      const auto removed = ham.at("witness").get<std::vector<std::size_t>>();
      if (components_after_removal(t, removed) <= removed.size()) return "toughness witness does not re-validate";
    }
    const auto& kj = props.at("vertex_connectivity");
    if (kj.contains("witness")) {
      const auto cut = kj.at("witness").get<std::vector<std::size_t>>();
      if (cut.size() != kj.at("value").get<std::size_t>() || components_after_removal(t, cut) < 2) {
        return "connectivity witness does not re-validate";
      }
    }
    for (std::size_t v : props.at("domination_number").at("witness").get<std::vector<std::size_t>>()) {
      if (t.adjacency().degree(v) + 1 != t.n_vertices()) return "domination witness does not re-validate";
    }
  } catch (const json::exception& ex) {
    return std::string("malformed report: ") + ex.what();
  }
  return {};
}

}  // namespace theta
