#include "theta/selector.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "theta/errors.hpp"

namespace theta {

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw ValidationError("bad number '" + s + "' in " + context);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

GroupSpec parse_single(const std::string& key) {
  const auto colon = key.find(':');
  if (colon == std::string::npos) throw ValidationError("group selector '" + key + "' lacks ':'");
  const std::string family = key.substr(0, colon);
  const std::string args = key.substr(colon + 1);
  try {
    if (family == "custom") return load_custom_group_file(args);
    const auto parts = split(args, ',');
    auto arg = [&](std::size_t i) { return parse_uint(parts.at(i), key); };
    auto expect = [&](std::size_t n) {
      if (parts.size() != n) throw ValidationError("group selector '" + key + "' expects " + std::to_string(n) + " argument(s)");
    };
    if (family == "cyclic") {
      expect(1);
      return cyclic(arg(0));
    }
    if (family == "dihedral") {
      expect(1);
      return dihedral(arg(0));
    }
    if (family == "dicyclic") {
      expect(1);
      return dicyclic(arg(0));
    }
    if (family == "heisenberg") {
      expect(1);
      return heisenberg(arg(0));
    }
    if (family == "elementary_abelian" || family == "elem-abelian") {
      expect(2);
      const auto m = arg(1);
      if (m > 64) throw ValidationError("elementary abelian rank too large");
      return elementary_abelian(arg(0), static_cast<unsigned>(m));
    }
  } catch (const DomainError& ex) {
    throw ValidationError(ex.what());
  }
  throw ValidationError("unknown group family '" + family + "'");
}

}  // namespace

GroupSpec parse_selector(const std::string& key) {
  const auto factors = split(key, '*');
  if (factors.empty()) throw ValidationError("empty group selector");
  GroupSpec g = parse_single(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_single(factors[i]));
  return g;
}

GroupSpec load_custom_group(const std::string& json_text) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    return from_orders(doc.at("labels").get<std::vector<std::string>>(),
                       doc.at("orders").get<std::vector<std::uint64_t>>());
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("custom group file: ") + ex.what());
  }
}

GroupSpec load_custom_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open custom group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_custom_group(buf.str());
}

}  // namespace theta
