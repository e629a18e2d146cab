#include "theta/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"

namespace theta {

namespace {

bool coprime_rule(std::uint64_t a, std::uint64_t b) { return numtheory::is_one_or_prime(numtheory::gcd(a, b)); }

std::vector<Warning> graph_warnings(const GroupSpec& g) {
  std::vector<Warning> w = g.warnings();
  if (g.size() <= 2) {
    w.push_back({"small_group", "group has " + std::to_string(g.size()) +
                                    " element(s); the coprime graph is defined for |G| > 2"});
  }
  return w;
}

}  // namespace

ThetaGraph::ThetaGraph(GroupSpec group) : group_(std::move(group)), adj_(group_.size()) {
  const auto& els = group_.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (coprime_rule(els[i].order, els[j].order)) adj_.set(i, j, true);
    }
  }
  warnings_ = graph_warnings(group_);
}

ThetaGraph::ThetaGraph(GroupSpec group, AdjacencyMatrix adjacency)
    : group_(std::move(group)), adj_(std::move(adjacency)) {
  if (adj_.size() != group_.size()) throw ValidationError("adjacency size does not match group size");
  warnings_ = graph_warnings(group_);
}

bool ThetaGraph::matches_predicate() const {
  for (std::size_t i = 0; i < n_vertices(); ++i) {
    if (adj_.test(i, i)) return false;
    for (std::size_t j = i + 1; j < n_vertices(); ++j) {
      if (adj_.test(i, j) != coprime_rule(order(i), order(j))) return false;
    }
  }
  return true;
}

ThetaGraph build_theta(GroupSpec g) { return ThetaGraph(std::move(g)); }

bool adjacent(const ThetaGraph& t, std::size_t i, std::size_t j) {
  if (i >= t.n_vertices() || j >= t.n_vertices()) throw DomainError("adjacent: vertex index out of range");
  return t.adjacency().test(i, j);
}

PrimeOrderSet prime_order_set(const ThetaGraph& t) {
  PrimeOrderSet s;
  for (std::size_t v = 0; v < t.n_vertices(); ++v) {
    if (numtheory::is_one_or_prime(t.order(v))) s.indices.push_back(v);
  }
  return s;
}

std::size_t degree(const ThetaGraph& t, std::size_t v) {
  if (v >= t.n_vertices()) throw DomainError("degree: vertex index out of range");
  return t.adjacency().degree(v);
}

std::size_t min_degree(const ThetaGraph& t) {
  const auto& d = t.adjacency().degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

std::size_t max_degree(const ThetaGraph& t) {
  const auto& d = t.adjacency().degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ThetaGraph& t) {
  std::ostringstream os;
  os << "graph " << dot_quote("Theta(" + t.group().descriptor() + ")") << " {\n";
  for (const auto& e : t.group().elements()) {
    os << "  " << dot_quote(e.label) << " [order=" << e.order << "];\n";
  }
  for (const auto& [i, j] : t.adjacency().edges()) {
    os << "  " << dot_quote(t.group().element(i).label) << " -- " << dot_quote(t.group().element(j).label)
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const ThetaGraph& t) {
  using nlohmann::json;
  const auto& g = t.group();
  json labels = json::array();
  json orders = json::array();
  for (const auto& e : g.elements()) {
    labels.push_back(e.label);
    orders.push_back(e.order);
  }
  json edges = json::array();
  for (const auto& [i, j] : t.adjacency().edges()) edges.push_back({i, j});
  json doc = {
      {"group",
       {{"family", to_string(g.family())},
        {"descriptor", g.descriptor()},
        {"key", g.key()},
        {"params", g.params()},
        {"size", g.size()}}},
      {"n_vertices", t.n_vertices()},
      {"edge_count", t.edge_count()},
      {"labels", labels},
      {"orders", orders},
      {"edges", edges},
      {"degrees", t.adjacency().degrees()},
  };
  return doc.dump(2) + "\n";
}

ThetaGraph parse_graph_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    auto orders = doc.at("orders").get<std::vector<std::uint64_t>>();
    GroupSpec g = from_orders(std::move(labels), std::move(orders));
    AdjacencyMatrix adj(g.size());
    for (const auto& e : doc.at("edges")) {
      const auto i = e.at(0).get<std::size_t>();
      const auto j = e.at(1).get<std::size_t>();
      if (i >= g.size() || j >= g.size() || i == j) throw ValidationError("graph json: bad edge");
      adj.set(i, j, true);
    }
    return ThetaGraph(std::move(g), std::move(adj));
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("graph json: ") + ex.what());
  }
}

}  // namespace theta
