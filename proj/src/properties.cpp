#include "theta/properties.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"

namespace theta {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const AdjacencyMatrix& g, std::size_t src, const std::vector<char>* blocked = nullptr) {
  const std::size_t words = g.words_per_row();
  std::vector<std::size_t> dist(g.size(), kUnseen);
  std::vector<std::uint64_t> open(words, 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!(blocked && (*blocked)[v])) open[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  std::vector<std::size_t> frontier{src};
  dist[src] = 0;
  open[src / 64] &= ~(std::uint64_t{1} << (src % 64));
  std::vector<std::uint64_t> next(words);
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t u : frontier) {
      const std::uint64_t* row = g.row(u);
      for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
    }
    frontier.clear();
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= open[w];
      open[w] &= ~next[w];
      for (std::uint64_t word = next[w]; word != 0; word &= word - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        dist[v] = level;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const AdjacencyMatrix& g) {
  if (g.size() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnseen; });
}

bool is_connected(const ThetaGraph& t) { return is_connected(t.adjacency()); }

std::size_t diameter(const AdjacencyMatrix& g) {
  if (g.size() == 0) throw DomainError("diameter: empty graph");
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) {
      if (d == kUnseen) throw DomainError("diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t diameter(const ThetaGraph& t) { return diameter(t.adjacency()); }

std::optional<std::size_t> girth(const AdjacencyMatrix& g) {
  std::size_t best = kUnseen;
  const std::size_t n = g.size();
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

std::optional<std::size_t> girth(const ThetaGraph& t) { return girth(t.adjacency()); }

std::size_t components_after_removal(const AdjacencyMatrix& g, const std::vector<std::size_t>& removed) {
  std::vector<char> blocked(g.size(), 0);
  for (std::size_t v : removed) {
    if (v >= g.size()) throw DomainError("components_after_removal: vertex index out of range");
    blocked[v] = 1;
  }
  std::vector<char> seen = blocked;
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    ++count;
    for (std::size_t d = 0; const auto dist : bfs_distances(g, v, &blocked)) {
      if (dist != kUnseen) seen[d] = 1;
      ++d;
    }
  }
  return count;
}

std::size_t components_after_removal(const ThetaGraph& t, const std::vector<std::size_t>& removed) {
  return components_after_removal(t.adjacency(), removed);
}

bool is_eulerian(const ThetaGraph& t) {
  const auto& degs = t.adjacency().degrees();
  const bool graph_side =
      is_connected(t) && std::all_of(degs.begin(), degs.end(), [](std::size_t d) { return d % 2 == 0; });
  bool group_side = t.n_vertices() % 2 == 1;
  for (std::size_t v = 0; v < t.n_vertices() && group_side; ++v) {
    if (v != t.identity() && !numtheory::is_prime(t.order(v))) group_side = false;
  }
  if (graph_side != group_side) {
    throw ConsistencyError("eulerian", "degree criterion says " + std::string(graph_side ? "yes" : "no") +
                                           " but order criterion says " + (group_side ? "yes" : "no") +
                                           " for " + t.group().descriptor());
  }
  return graph_side;
}

bool is_complete(const ThetaGraph& t) {
  const std::size_t n = t.n_vertices();
  const bool graph_side = t.edge_count() == n * (n - 1) / 2;
  bool group_side = true;
  for (std::size_t v = 0; v < n && group_side; ++v) group_side = numtheory::is_one_or_prime(t.order(v));
  if (graph_side != group_side) {
    throw ConsistencyError("complete", "edge count says " + std::string(graph_side ? "yes" : "no") +
                                           " but order criterion says " + (group_side ? "yes" : "no") +
                                           " for " + t.group().descriptor());
  }
  return graph_side;
}

bool is_singleton_dominating(const ThetaGraph& t, std::size_t v) {
  if (v >= t.n_vertices()) throw DomainError("is_singleton_dominating: vertex index out of range");
  const bool by_row = t.adjacency().degree(v) + 1 == t.n_vertices();
  const bool by_order = numtheory::is_one_or_prime(t.order(v));
  if (by_row != by_order) {
    throw ConsistencyError("domination", "vertex " + t.group().element(v).label + " of order " +
                                             std::to_string(t.order(v)) + (by_row ? " dominates" : " does not dominate") +
                                             " in " + t.group().descriptor());
  }
  return by_row;
}

Domination domination_number(const ThetaGraph& t) {
  if (!is_singleton_dominating(t, t.identity())) {
    throw ConsistencyError("domination", "identity does not dominate " + t.group().descriptor());
  }
  return {1, {t.identity()}};
}

std::string_view to_string(PlanarityMethod m) noexcept {
  switch (m) {
    case PlanarityMethod::trivial: return "trivial";
    case PlanarityMethod::euler_bound: return "euler_bound";
    case PlanarityMethod::boyer_myrvold: return "boyer_myrvold";
  }
  return "unknown";
}

PlanarityResult planarity(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  if (n <= 4) return {true, PlanarityMethod::trivial};
  if (g.edge_count() > 3 * n - 6) return {false, PlanarityMethod::euler_bound};
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(n);
  for (const auto& [i, j] : g.edges()) boost::add_edge(i, j, bg);
  return {boost::boyer_myrvold_planarity_test(bg), PlanarityMethod::boyer_myrvold};
}

bool is_planar(const AdjacencyMatrix& g) { return planarity(g).planar; }
bool is_planar(const ThetaGraph& t) { return is_planar(t.adjacency()); }

std::string_view to_string(HamiltonStatus s) noexcept {
  switch (s) {
    case HamiltonStatus::yes: return "yes";
    case HamiltonStatus::no: return "no";
    case HamiltonStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(HamiltonMethod m) noexcept {
  switch (m) {
    case HamiltonMethod::exact_search: return "exact_search";
    case HamiltonMethod::ore_sufficient: return "ore_sufficient";
    case HamiltonMethod::toughness_refuted: return "toughness_refuted";
  }
  return "unknown";
}

bool validate_hamiltonian_cycle(const AdjacencyMatrix& g, const std::vector<std::size_t>& cycle) {
  const std::size_t n = g.size();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.test(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

namespace {

bool ore_condition(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      if (!g.test(v, w) && g.degree(v) + g.degree(w) < n) return false;
    }
  }
  return true;
}

// Palmer's gap-closing construction. Succeeds whenever Ore's condition holds.
std::optional<std::vector<std::size_t>> ore_cycle(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::size_t gap = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.test(c[i], c[(i + 1) % n])) {
        gap = i;
        break;
      }
    }
    if (gap == n) return c;
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(gap), c.end());
    std::size_t j = 2;
    while (j + 1 < n && !(g.test(c[0], c[j]) && g.test(c[1], c[j + 1]))) ++j;
    if (j + 1 >= n) return std::nullopt;
    std::reverse(c.begin() + 1, c.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  return std::nullopt;
}

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<std::size_t>& keep) {
  std::vector<char> in(n, 0);
  for (std::size_t v : keep) in[v] = 1;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> greedy_independent_set(const AdjacencyMatrix& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
  std::vector<std::size_t> chosen;
  for (std::size_t v : order) {
    if (std::none_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return g.test(u, v); })) chosen.push_back(v);
  }
  return chosen;
}

bool try_toughness(const AdjacencyMatrix& g, std::vector<std::size_t> removed, HamiltonianVerdict& out) {
  if (removed.empty() || removed.size() >= g.size()) return false;
  std::sort(removed.begin(), removed.end());
  const std::size_t comps = components_after_removal(g, removed);
  if (comps <= removed.size()) return false;
  out.status = HamiltonStatus::no;
  out.method = HamiltonMethod::toughness_refuted;
  out.tough_witness = std::move(removed);
  out.witness_components = comps;
  return true;
}

class HamiltonSearch {
 public:
  HamiltonSearch(const AdjacencyMatrix& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  HamiltonianVerdict run() {
    HamiltonianVerdict v;
    const std::size_t n = g_.size();
    start_ = 0;
    for (std::size_t u = 1; u < n; ++u) {
      if (g_.degree(u) < g_.degree(start_)) start_ = u;
    }
    unvisited_.assign(g_.words_per_row(), 0);
    for (std::size_t u = 0; u < n; ++u) unvisited_[u / 64] |= std::uint64_t{1} << (u % 64);
    clear(start_);
    path_.push_back(start_);
    const bool found = extend();
    v.nodes_explored = nodes_;
    v.method = HamiltonMethod::exact_search;
    if (found) {
      v.status = HamiltonStatus::yes;
      v.cycle = path_;
    } else {
      v.status = aborted_ ? HamiltonStatus::inconclusive : HamiltonStatus::no;
    }
    return v;
  }

 private:
  void clear(std::size_t u) { unvisited_[u / 64] &= ~(std::uint64_t{1} << (u % 64)); }
  void mark(std::size_t u) { unvisited_[u / 64] |= std::uint64_t{1} << (u % 64); }

  // Every unvisited vertex needs two neighbours among the unvisited ones plus
  // the two path ends.
  bool feasible(std::size_t cur) const {
    std::vector<std::uint64_t> avail = unvisited_;
    avail[cur / 64] |= std::uint64_t{1} << (cur % 64);
    avail[start_ / 64] |= std::uint64_t{1} << (start_ % 64);
    for (std::size_t w = 0; w < unvisited_.size(); ++w) {
      for (std::uint64_t word = unvisited_[w]; word != 0; word &= word - 1) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        const std::uint64_t* row = g_.row(u);
        int count = 0;
        for (std::size_t k = 0; k < avail.size() && count < 2; ++k) count += std::popcount(row[k] & avail[k]);
        if (count < 2) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const std::size_t cur = path_.back();
    if (path_.size() == g_.size()) return g_.test(cur, start_);
    if (!feasible(cur)) return false;
    std::vector<std::size_t> next;
    for (std::size_t u : g_.neighbors(cur)) {
      if ((unvisited_[u / 64] >> (u % 64)) & 1u) next.push_back(u);
    }
    std::stable_sort(next.begin(), next.end(), [&](auto a, auto b) { return g_.degree(a) < g_.degree(b); });
    for (std::size_t u : next) {
      clear(u);
      path_.push_back(u);
      if (extend()) return true;
      path_.pop_back();
      mark(u);
      if (aborted_) return false;
    }
    return false;
  }

  const AdjacencyMatrix& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t start_ = 0;
  std::vector<std::uint64_t> unvisited_;
  std::vector<std::size_t> path_;
};

HamiltonianVerdict hamiltonian_pipeline(const AdjacencyMatrix& g, std::uint64_t budget,
                                        const std::vector<std::vector<std::size_t>>& removal_candidates) {
  HamiltonianVerdict v;
  if (g.size() < 3) return v;
  if (ore_condition(g)) {
    if (auto c = ore_cycle(g)) {
      v.status = HamiltonStatus::yes;
      v.method = HamiltonMethod::ore_sufficient;
      v.cycle = std::move(*c);
      return v;
    }
    throw ConsistencyError("ore", "Ore's condition holds but no cycle was constructed");
  }
  for (const auto& removed : removal_candidates) {
    if (try_toughness(g, removed, v)) return v;
  }
  if (try_toughness(g, complement_of(g.size(), greedy_independent_set(g)), v)) return v;
  return HamiltonSearch(g, budget).run();
}

}  // namespace

HamiltonianVerdict is_hamiltonian(const AdjacencyMatrix& g, std::uint64_t node_budget) {
  return hamiltonian_pipeline(g, node_budget, {});
}

HamiltonianVerdict is_hamiltonian(const ThetaGraph& t, std::uint64_t node_budget) {
  std::vector<std::vector<std::size_t>> candidates;
  std::uint64_t max_order = 0;
  for (std::size_t v = 0; v < t.n_vertices(); ++v) max_order = std::max(max_order, t.order(v));
  if (!numtheory::is_one_or_prime(max_order)) {
    // Elements of equal composite order are pairwise non-adjacent.
    std::vector<std::size_t> top;
    for (std::size_t v = 0; v < t.n_vertices(); ++v) {
      if (t.order(v) == max_order) top.push_back(v);
    }
    candidates.push_back(complement_of(t.n_vertices(), top));
  }
  candidates.push_back(prime_order_set(t).indices);
  return hamiltonian_pipeline(t.adjacency(), node_budget, candidates);
}

namespace {

// Unit-capacity vertex-split network: vertex v becomes in(v) = 2v and
// out(v) = 2v + 1 joined by an arc of capacity 1.
class SplitNetwork {
 public:
  SplitNetwork(const AdjacencyMatrix& g, std::size_t s, std::size_t t) : head_(2 * g.size(), -1) {
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    for (std::size_t v = 0; v < g.size(); ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
    for (const auto& [u, w] : g.edges()) {
      add_arc(2 * u + 1, 2 * w, kInf);
      add_arc(2 * w + 1, 2 * u, kInf);
    }
  }

  bool augment(std::size_t src, std::size_t sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<std::size_t> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty() && !seen[sink]) {
      const std::size_t u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        const auto to = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[to]) {
          seen[to] = 1;
          via[to] = a;
          q.push(to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t v = sink; v != src;) {
      const int a = via[v];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      v = arcs_[a ^ 1].to;
    }
    return true;
  }

  std::vector<char> reachable(std::size_t src) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<std::size_t> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int next;
  };

  void add_arc(std::size_t u, std::size_t v, int cap) {
    arcs_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 0, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t local_connectivity(const AdjacencyMatrix& g, std::size_t s, std::size_t t, std::size_t cap,
                               std::vector<std::size_t>* cut) {
  if (s >= g.size() || t >= g.size() || s == t) throw DomainError("local_connectivity: bad terminals");
  if (g.test(s, t)) throw DomainError("local_connectivity: terminals are adjacent");
  SplitNetwork net(g, s, t);
  const std::size_t src = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (flow < cap && net.augment(src, sink)) ++flow;
  if (cut && flow < cap) {
    cut->clear();
    const auto seen = net.reachable(src);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) cut->push_back(v);
    }
  }
  return flow;
}

std::string_view to_string(ConnectivityMethod m) noexcept {
  return m == ConnectivityMethod::complete_rule ? "complete_rule" : "max_flow";
}

ConnectivityResult vertex_connectivity(const AdjacencyMatrix& g) {
  const std::size_t n = g.size();
  ConnectivityResult r;
  if (n == 0 || g.edge_count() == n * (n - 1) / 2) {
    r.kappa = n == 0 ? 0 : n - 1;
    r.method = ConnectivityMethod::complete_rule;
    return r;
  }
  r.method = ConnectivityMethod::max_flow;
  if (!is_connected(g)) {
    r.kappa = 0;
    return r;
  }

  // Even's scheme: some vertex among the first kappa + 1 of any order lies
  // outside a minimum separator, with a component of later vertices beyond it.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) < g.degree(b); });

  // kappa <= delta; the neighbourhood of a non-universal minimum-degree vertex
  // separates it.
  const std::size_t v0 = order.front();
  r.kappa = g.degree(v0);
  r.witness_cut = g.neighbors(v0);

  std::vector<std::size_t> cut;
  for (std::size_t i = 0; i < n && i <= r.kappa; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t s = order[i];
      const std::size_t t = order[j];
      if (g.test(s, t)) continue;
      const std::size_t k = local_connectivity(g, s, t, r.kappa, &cut);
      if (k < r.kappa) {
        r.kappa = k;
        r.witness_cut = cut;
      }
    }
  }
  std::sort(r.witness_cut.begin(), r.witness_cut.end());
  if (r.witness_cut.size() != r.kappa || components_after_removal(g, r.witness_cut) < 2) {
    throw ConsistencyError("vertex_connectivity", "witness cut does not separate the graph");
  }
  return r;
}

ConnectivityResult vertex_connectivity(const ThetaGraph& t) {
  ConnectivityResult r = vertex_connectivity(t.adjacency());
  if (r.kappa > min_degree(t)) {
    throw ConsistencyError("kappa_le_delta", "kappa exceeds minimum degree for " + t.group().descriptor());
  }
  return r;
}

std::string_view to_string(OpenProblemClass c) noexcept {
  switch (c) {
    case OpenProblemClass::complete: return "complete";
    case OpenProblemClass::kappa_equals_S: return "kappa_equals_S";
    case OpenProblemClass::kappa_exceeds_S: return "kappa_exceeds_S";
    case OpenProblemClass::kappa_below_S: return "kappa_below_S";
  }
  return "unknown";
}

OpenProblemResult open_problem_classify(const ThetaGraph& t, const ConnectivityResult& kappa) {
  const std::size_t s = prime_order_set(t).size();
  OpenProblemResult r{OpenProblemClass::complete, kappa.kappa, s};
  if (is_complete(t)) return r;
  if (kappa.kappa == s) {
    r.cls = OpenProblemClass::kappa_equals_S;
  } else if (kappa.kappa > s) {
    r.cls = OpenProblemClass::kappa_exceeds_S;
  } else {
    r.cls = OpenProblemClass::kappa_below_S;
  }
  if (t.group().family() == Family::cyclic && r.cls != OpenProblemClass::kappa_equals_S) {
    throw ConsistencyError("kappa_cyclic", "max-flow gives " + std::to_string(kappa.kappa) + " but |S| = " +
                                               std::to_string(s) + " for " + t.group().descriptor());
  }
  return r;
}

OpenProblemResult open_problem_classify(const ThetaGraph& t) {
  return open_problem_classify(t, vertex_connectivity(t));
}

}  // namespace theta
