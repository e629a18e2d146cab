#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

enum class Family { cyclic, dihedral, dicyclic, elementary_abelian, heisenberg, product, custom };

std::string_view to_string(Family f) noexcept;

/// Machine-readable diagnostic carried alongside a group or graph.
struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct Element {
  std::string label;
  std::uint64_t order;
};

/// Order multiset: order -> number of elements with that order.
using OrderProfile = std::map<std::uint64_t, std::size_t>;

/// A finite group reduced to what the coprime graph needs: labelled elements
/// and their orders. Immutable once built by one of the constructors below.
class GroupSpec {
 public:
  Family family() const noexcept { return family_; }
  /// Family parameters: {n}, {p, m}, {p}; concatenated for products.
  const std::vector<std::uint64_t>& params() const noexcept { return params_; }
  /// Human-readable name such as "Z_6", "D_9", "Dic_3", "Z_2 x Z_3".
  const std::string& descriptor() const noexcept { return descriptor_; }
  /// Selector-style key such as "cyclic:6" or "cyclic:2*cyclic:3".
  const std::string& key() const noexcept { return key_; }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  std::uint64_t order(std::size_t i) const { return elements_.at(i).order; }
  std::size_t identity_index() const noexcept { return identity_; }
  const std::vector<Warning>& warnings() const noexcept { return warnings_; }

  friend GroupSpec cyclic(std::uint64_t n);
  friend GroupSpec dihedral(std::uint64_t n);
  friend GroupSpec dicyclic(std::uint64_t n);
  friend GroupSpec elementary_abelian(std::uint64_t p, unsigned m);
  friend GroupSpec heisenberg(std::uint64_t p);
  friend GroupSpec direct_product(const GroupSpec& g, const GroupSpec& h);
  friend GroupSpec from_orders(std::vector<std::string> labels, std::vector<std::uint64_t> orders);

 private:
  GroupSpec(Family family, std::vector<std::uint64_t> params, std::string descriptor, std::string key,
            std::vector<Element> elements);

  Family family_;
  std::vector<std::uint64_t> params_;
  std::string descriptor_;
  std::string key_;
  std::vector<Element> elements_;
  std::size_t identity_ = 0;
  std::vector<Warning> warnings_;
};

/// Z_n with labels "0".."n-1"; o(k) = n / gcd(n, k).
GroupSpec cyclic(std::uint64_t n);

/// D_n of order 2n: rotations r^i at indices 0..n-1, then reflections sr^i.
GroupSpec dihedral(std::uint64_t n);

/// Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, ax = xa^{-1}> of order 4n, n >= 2.
/// Elements a^k at indices 0..2n-1, then xa^k.
GroupSpec dicyclic(std::uint64_t n);

/// (Z_p)^m, vectors enumerated in lexicographic order.
GroupSpec elementary_abelian(std::uint64_t p, unsigned m);

/// Upper unitriangular 3x3 matrices over F_p; orders by repeated multiplication.
GroupSpec heisenberg(std::uint64_t p);

/// g x h; o((a, b)) = lcm(o(a), o(b)).
GroupSpec direct_product(const GroupSpec& g, const GroupSpec& h);

/// User-supplied group. Rejects empty input, length mismatch, zero orders,
/// duplicate labels and anything but exactly one identity. Orders that do not
/// divide the element count produce a "lagrange" warning, not an error.
GroupSpec from_orders(std::vector<std::string> labels, std::vector<std::uint64_t> orders);

OrderProfile order_profile(const GroupSpec& g);

}  // namespace theta
