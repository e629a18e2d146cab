#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "theta/adjacency.hpp"
#include "theta/groups.hpp"

namespace theta {

/// Prime coprime graph: vertices are group elements, x ~ y iff
/// gcd(o(x), o(y)) is 1 or prime. Vertex order follows the GroupSpec.
class ThetaGraph {
 public:
  explicit ThetaGraph(GroupSpec group);

  /// Rebuilds a graph from serialized adjacency without re-deriving it from
  /// orders. Used by the JSON loader and by test fixtures; call
  /// matches_predicate() to check the result.
  ThetaGraph(GroupSpec group, AdjacencyMatrix adjacency);

  const GroupSpec& group() const noexcept { return group_; }
  const AdjacencyMatrix& adjacency() const noexcept { return adj_; }
  std::size_t n_vertices() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return adj_.edge_count(); }
  std::uint64_t order(std::size_t v) const { return group_.order(v); }
  std::size_t identity() const noexcept { return group_.identity_index(); }

  /// Group warnings plus graph-level ones such as "small_group".
  const std::vector<Warning>& warnings() const noexcept { return warnings_; }

  /// True when every pair agrees with the gcd-of-orders rule.
  bool matches_predicate() const;

 private:
  GroupSpec group_;
  AdjacencyMatrix adj_;
  std::vector<Warning> warnings_;
};

ThetaGraph build_theta(GroupSpec g);

/// Throws DomainError when i or j is out of range.
bool adjacent(const ThetaGraph& t, std::size_t i, std::size_t j);

/// S(G): the identity plus every element of prime order.
struct PrimeOrderSet {
  std::vector<std::size_t> indices;
  bool includes_identity = true;

  std::size_t size() const noexcept { return indices.size(); }
};

PrimeOrderSet prime_order_set(const ThetaGraph& t);

std::size_t degree(const ThetaGraph& t, std::size_t v);
std::size_t min_degree(const ThetaGraph& t);
std::size_t max_degree(const ThetaGraph& t);

std::string export_dot(const ThetaGraph& t);
std::string export_json(const ThetaGraph& t);

/// Inverse of export_json. The group is restored as a custom spec carrying the
/// serialized labels and orders; adjacency comes from the edge list verbatim.
ThetaGraph parse_graph_json(const std::string& text);

}  // namespace theta
