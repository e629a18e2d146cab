#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "theta/groups.hpp"
#include "theta/properties.hpp"

namespace theta {

/// One evaluated group in the open-problem search.
struct SearchRecord {
  std::string family;
  std::string params;
  std::size_t order = 0;
  bool complete = false;
  std::size_t kappa = 0;
  std::size_t s_size = 0;
  OpenProblemClass cls = OpenProblemClass::complete;
  double ms = 0.0;

  /// family + "|" + params; identifies a record across runs.
  std::string id() const { return family + "|" + params; }
};

inline constexpr const char* kSearchCsvHeader = "family,params,order,complete,kappa,s_size,class,ms";

std::string to_csv(const SearchRecord& r);
nlohmann::json to_json(const SearchRecord& r);

/// Parses one CSV data line written by to_csv. Throws ValidationError.
SearchRecord parse_csv_record(const std::string& line);

/// Record ids found in an existing CSV stream (header and blank lines skipped).
std::set<std::string> completed_ids(std::istream& csv);

struct SearchOptions {
  std::uint64_t max_order = 20;
  /// Any of cyclic, dihedral, dicyclic, elementary_abelian, heisenberg, product.
  std::set<Family> families{Family::cyclic,           Family::dihedral,   Family::dicyclic,
                            Family::elementary_abelian, Family::heisenberg, Family::product};
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Groups with 3 <= |G| <= max_order in the deterministic enumeration order:
/// families in declaration order, ascending parameters; products pair every
/// base-family group with |G| >= 2 (unordered, factor sizes multiplied).
std::vector<GroupSpec> enumerate_search_groups(const SearchOptions& opts);

SearchRecord evaluate_search_group(const GroupSpec& g);

struct SearchSummary {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> per_class;
};

/// Evaluates groups concurrently and emits records in enumeration order.
/// Groups whose id is in `skip` are not evaluated. Null sinks are ignored.
SearchSummary run_search(const SearchOptions& opts, std::ostream* csv, std::ostream* jsonl,
                         const std::set<std::string>& skip = {});

Family parse_family(const std::string& name);

}  // namespace theta
