#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "theta/graph.hpp"

namespace theta {

/// Builds the graph a check runs on. The default derives it from the orders;
/// fixtures substitute a tampered builder to exercise failure reporting.
using GraphFactory = std::function<ThetaGraph(GroupSpec)>;

GraphFactory default_graph_factory();

/// Drops the edge between the identity and the last vertex of every graph.
GraphFactory corrupted_graph_factory();

struct VerifyRow {
  std::string suite;
  std::string theorem;
  std::size_t groups_tested = 0;
  bool passed = true;
  std::string failure;  // first failing case
};

/// Suites: spectra, block_identity, connectivity, dicyclic, eulerian,
/// completeness, planarity, hamiltonian, structure, equitable, or all.
std::vector<std::string> verify_suite_names();

/// Runs the theorem cross-checks of one suite (or "all"). Throws
/// ValidationError for an unknown suite name.
std::vector<VerifyRow> run_verify(const std::string& suite, const GraphFactory& factory = default_graph_factory());

/// Fixed-width table, one line per theorem; returns true when all rows pass.
bool print_verify_table(std::ostream& os, const std::vector<VerifyRow>& rows);

}  // namespace theta
