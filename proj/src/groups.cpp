#include "theta/groups.hpp"

#include <array>
#include <set>

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"

namespace theta {

namespace nt = numtheory;

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::dicyclic: return "dicyclic";
    case Family::elementary_abelian: return "elementary_abelian";
    case Family::heisenberg: return "heisenberg";
    case Family::product: return "product";
    case Family::custom: return "custom";
  }
  return "unknown";
}

GroupSpec::GroupSpec(Family family, std::vector<std::uint64_t> params, std::string descriptor,
                     std::string key, std::vector<Element> elements)
    : family_(family),
      params_(std::move(params)),
      descriptor_(std::move(descriptor)),
      key_(std::move(key)),
      elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].order == 1) {
      identity_ = i;
      break;
    }
  }
}

namespace {

std::string power_label(const std::string& prefix, const char* gen, std::uint64_t k) {
  if (k == 0) return prefix.empty() ? "1" : prefix;
  std::string s = prefix + gen;
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

GroupSpec cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic: n must be positive");
  std::vector<Element> els;
  els.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) els.push_back({std::to_string(k), n / nt::gcd(n, k)});
  return GroupSpec(Family::cyclic, {n}, "Z_" + std::to_string(n), "cyclic:" + std::to_string(n),
                   std::move(els));
}

GroupSpec dihedral(std::uint64_t n) {
  if (n == 0) throw DomainError("dihedral: n must be positive");
  std::vector<Element> els;
  els.reserve(2 * n);
  for (std::uint64_t i = 0; i < n; ++i) els.push_back({power_label("", "r", i), n / nt::gcd(n, i)});
  for (std::uint64_t i = 0; i < n; ++i) els.push_back({power_label("s", "r", i), 2});
  return GroupSpec(Family::dihedral, {n}, "D_" + std::to_string(n), "dihedral:" + std::to_string(n),
                   std::move(els));
}

GroupSpec dicyclic(std::uint64_t n) {
  if (n < 2) throw DomainError("dicyclic: n must be at least 2");
  const std::uint64_t m = 2 * n;
  std::vector<Element> els;
  els.reserve(2 * m);
  for (std::uint64_t k = 0; k < m; ++k) els.push_back({power_label("", "a", k), m / nt::gcd(m, k)});
  // (xa^k)^2 = x a^k x a^k = x x a^{-k} a^k = x^2 = a^n, which has order 2.
  for (std::uint64_t k = 0; k < m; ++k) els.push_back({power_label("x", "a", k), 4});
  return GroupSpec(Family::dicyclic, {n}, "Dic_" + std::to_string(n), "dicyclic:" + std::to_string(n),
                   std::move(els));
}

GroupSpec elementary_abelian(std::uint64_t p, unsigned m) {
  if (!nt::is_prime(p)) throw DomainError("elementary_abelian: p must be prime");
  if (m == 0) throw DomainError("elementary_abelian: m must be positive");
  const std::uint64_t size = nt::ipow(p, m);
  std::vector<Element> els;
  els.reserve(size);
  std::vector<std::uint64_t> digits(m, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned d = m; d-- > 0;) {
      digits[d] = rest % p;
      rest /= p;
    }
    std::string label = "(";
    for (unsigned d = 0; d < m; ++d) label += (d ? "," : "") + std::to_string(digits[d]);
    label += ")";
    els.push_back({std::move(label), idx == 0 ? 1u : p});
  }
  const std::string sp = std::to_string(p);
  return GroupSpec(Family::elementary_abelian, {p, m}, "(Z_" + sp + ")^" + std::to_string(m),
                   "elementary_abelian:" + sp + "," + std::to_string(m), std::move(els));
}

namespace {

// [[1, a, c], [0, 1, b], [0, 0, 1]] stored as (a, b, c).
using UniTri = std::array<std::uint64_t, 3>;

UniTri multiply(const UniTri& x, const UniTri& y, std::uint64_t p) {
  return {(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p};
}

}  // namespace

GroupSpec heisenberg(std::uint64_t p) {
  if (!nt::is_prime(p)) throw DomainError("heisenberg: p must be prime");
  std::vector<Element> els;
  els.reserve(p * p * p);
  const UniTri identity{0, 0, 0};
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        const UniTri g{a, b, c};
        std::uint64_t order = 1;
        for (UniTri acc = g; acc != identity; acc = multiply(acc, g, p)) ++order;
        els.push_back({"[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]",
                       order});
      }
    }
  }
  return GroupSpec(Family::heisenberg, {p}, "UT(3," + std::to_string(p) + ")",
                   "heisenberg:" + std::to_string(p), std::move(els));
}

GroupSpec direct_product(const GroupSpec& g, const GroupSpec& h) {
  std::vector<Element> els;
  els.reserve(g.size() * h.size());
  for (const auto& x : g.elements()) {
    for (const auto& y : h.elements()) {
      els.push_back({"(" + x.label + "," + y.label + ")", nt::lcm(x.order, y.order)});
    }
  }
  std::vector<std::uint64_t> params = g.params();
  params.insert(params.end(), h.params().begin(), h.params().end());
  GroupSpec out(Family::product, std::move(params), g.descriptor() + " x " + h.descriptor(),
                g.key() + "*" + h.key(), std::move(els));
  out.warnings_ = g.warnings();
  out.warnings_.insert(out.warnings_.end(), h.warnings().begin(), h.warnings().end());
  return out;
}

GroupSpec from_orders(std::vector<std::string> labels, std::vector<std::uint64_t> orders) {
  if (labels.empty()) throw ValidationError("custom group: no elements");
  if (labels.size() != orders.size()) {
    throw ValidationError("custom group: " + std::to_string(labels.size()) + " labels but " +
                          std::to_string(orders.size()) + " orders");
  }
  std::set<std::string> seen;
  std::size_t identities = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) throw ValidationError("custom group: duplicate label '" + labels[i] + "'");
    if (orders[i] == 0) throw ValidationError("custom group: element '" + labels[i] + "' has order 0");
    if (orders[i] == 1) ++identities;
  }
  if (identities != 1) {
    throw ValidationError("custom group: expected exactly one element of order 1, found " +
                          std::to_string(identities));
  }
  const std::uint64_t size = labels.size();
  std::vector<Element> els;
  els.reserve(size);
  std::vector<Warning> warnings;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (size % orders[i] != 0) {
      warnings.push_back({"lagrange", "order " + std::to_string(orders[i]) + " of '" + labels[i] +
                                          "' does not divide group size " + std::to_string(size)});
    }
    els.push_back({std::move(labels[i]), orders[i]});
  }
  GroupSpec out(Family::custom, {size}, "custom(" + std::to_string(size) + ")", "custom:" + std::to_string(size),
                std::move(els));
  out.warnings_ = std::move(warnings);
  return out;
}

OrderProfile order_profile(const GroupSpec& g) {
  OrderProfile prof;
  for (const auto& e : g.elements()) ++prof[e.order];
  return prof;
}

}  // namespace theta
