#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "theta/adjacency.hpp"
#include "theta/graph.hpp"

namespace theta {

// Pure graph algorithms work on any AdjacencyMatrix; the ThetaGraph overloads
// add the group-theoretic cross-checks.

bool is_connected(const AdjacencyMatrix& g);
bool is_connected(const ThetaGraph& t);

/// Throws DomainError on a disconnected or empty graph.
std::size_t diameter(const AdjacencyMatrix& g);
std::size_t diameter(const ThetaGraph& t);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const AdjacencyMatrix& g);
std::optional<std::size_t> girth(const ThetaGraph& t);

/// Connected components of the subgraph induced on V \ removed.
std::size_t components_after_removal(const AdjacencyMatrix& g, const std::vector<std::size_t>& removed);
std::size_t components_after_removal(const ThetaGraph& t, const std::vector<std::size_t>& removed);

/// Euler-circuit criterion (connected, all degrees even) checked against the
/// group criterion (|G| odd, every non-identity order prime). Throws
/// ConsistencyError when they differ.
bool is_eulerian(const ThetaGraph& t);

/// Edge count n(n-1)/2 checked against "no element of composite order".
bool is_complete(const ThetaGraph& t);

/// {v} dominates iff o(v) is 1 or prime; checked against a row scan.
bool is_singleton_dominating(const ThetaGraph& t, std::size_t v);

struct Domination {
  std::size_t number;
  std::vector<std::size_t> witness;
};

/// Always 1 with the identity as witness; throws ConsistencyError if the
/// identity row is not full.
Domination domination_number(const ThetaGraph& t);

enum class PlanarityMethod { trivial, euler_bound, boyer_myrvold };

struct PlanarityResult {
  bool planar;
  PlanarityMethod method;
};

std::string_view to_string(PlanarityMethod m) noexcept;

PlanarityResult planarity(const AdjacencyMatrix& g);
bool is_planar(const AdjacencyMatrix& g);
bool is_planar(const ThetaGraph& t);

enum class HamiltonStatus { yes, no, inconclusive };
enum class HamiltonMethod { exact_search, ore_sufficient, toughness_refuted };

std::string_view to_string(HamiltonStatus s) noexcept;
std::string_view to_string(HamiltonMethod m) noexcept;

struct HamiltonianVerdict {
  HamiltonStatus status = HamiltonStatus::no;
  HamiltonMethod method = HamiltonMethod::exact_search;
  /// Vertex sequence of a Hamiltonian cycle (first vertex not repeated).
  std::vector<std::size_t> cycle;
  /// For toughness_refuted: the removed set whose deletion leaves more
  /// components than its size.
  std::vector<std::size_t> tough_witness;
  std::size_t witness_components = 0;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultHamiltonBudget = 10'000'000;

/// Ore check (with a constructed cycle), then 1-toughness refutation, then
/// exact backtracking bounded by node_budget.
HamiltonianVerdict is_hamiltonian(const AdjacencyMatrix& g, std::uint64_t node_budget = kDefaultHamiltonBudget);

/// As above, with additional toughness splits derived from element orders:
/// the class of maximal composite order and S(G).
HamiltonianVerdict is_hamiltonian(const ThetaGraph& t, std::uint64_t node_budget = kDefaultHamiltonBudget);

bool validate_hamiltonian_cycle(const AdjacencyMatrix& g, const std::vector<std::size_t>& cycle);

/// Local vertex connectivity between non-adjacent s and t via unit-capacity
/// max-flow on the split digraph; stops early once the flow reaches `cap`.
/// Fills `cut` with a minimum s-t separator when the flow stays below cap.
std::size_t local_connectivity(const AdjacencyMatrix& g, std::size_t s, std::size_t t, std::size_t cap,
                               std::vector<std::size_t>* cut = nullptr);

enum class ConnectivityMethod { complete_rule, max_flow };

std::string_view to_string(ConnectivityMethod m) noexcept;

struct ConnectivityResult {
  std::size_t kappa = 0;
  /// Minimum separator; empty for complete graphs.
  std::vector<std::size_t> witness_cut;
  ConnectivityMethod method = ConnectivityMethod::complete_rule;
};

ConnectivityResult vertex_connectivity(const AdjacencyMatrix& g);
ConnectivityResult vertex_connectivity(const ThetaGraph& t);

enum class OpenProblemClass { complete, kappa_equals_S, kappa_exceeds_S, kappa_below_S };

std::string_view to_string(OpenProblemClass c) noexcept;

struct OpenProblemResult {
  OpenProblemClass cls;
  std::size_t kappa;
  std::size_t s_size;
};

/// Compares kappa with |S(G)|. kappa < |S| is reported as kappa_below_S,
/// except for cyclic groups, where it throws ConsistencyError.
OpenProblemResult open_problem_classify(const ThetaGraph& t);
OpenProblemResult open_problem_classify(const ThetaGraph& t, const ConnectivityResult& kappa);

}  // namespace theta
