#pragma once

#include <string>

#include "theta/groups.hpp"

namespace theta {

/// Parses a group key: "cyclic:N", "dihedral:N", "dicyclic:N",
/// "elementary_abelian:P,M" (alias "elem-abelian:P,M"), "heisenberg:P",
/// "custom:PATH", or factors joined by '*' for a direct product.
/// Throws ValidationError on malformed input.
GroupSpec parse_selector(const std::string& key);

/// Reads {"labels": [...], "orders": [...]} from a JSON document.
GroupSpec load_custom_group(const std::string& json_text);
GroupSpec load_custom_group_file(const std::string& path);

}  // namespace theta
