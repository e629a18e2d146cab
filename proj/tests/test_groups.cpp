#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/groups.hpp"
#include "theta/numtheory.hpp"

using namespace theta;

namespace {

// Dic_n elements a^k x^e as (k, e); x a^j = a^{-j} x and x^2 = a^n.
struct DicElem {
  std::uint64_t k;
  int e;
  bool operator==(const DicElem&) const = default;
};

DicElem dic_mul(DicElem u, DicElem v, std::uint64_t n) {
  const std::uint64_t m = 2 * n;
  std::uint64_t k = u.e == 0 ? (u.k + v.k) % m : (u.k + m - v.k) % m;
  int e = u.e + v.e;
  if (e == 2) {
    k = (k + n) % m;
    e = 0;
  }
  return {k, e};
}

std::uint64_t dic_order(DicElem g, std::uint64_t n) {
  std::uint64_t o = 1;
  for (DicElem acc = g; !(acc == DicElem{0, 0}); acc = dic_mul(acc, g, n)) ++o;
  return o;
}

// Full Cayley-table check of the relations, then element orders.
std::vector<std::uint64_t> dicyclic_oracle_orders(std::uint64_t n) {
  const DicElem a{1, 0}, x{0, 1};
  REQUIRE(dic_mul(x, x, n) == DicElem{n % (2 * n), 0});
  REQUIRE(dic_mul(a, x, n) == dic_mul(x, DicElem{2 * n - 1, 0}, n));
  std::vector<std::uint64_t> orders;
  for (int e = 0; e < 2; ++e)
    for (std::uint64_t k = 0; k < 2 * n; ++k) orders.push_back(dic_order({k, e}, n));
  return orders;
}

std::uint64_t matrix_order(std::array<std::uint64_t, 9> m, std::uint64_t p) {
  const std::array<std::uint64_t, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto mul = [p](const auto& x, const auto& y) {
    std::array<std::uint64_t, 9> z{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < 3; ++k) s += x[i * 3 + k] * y[k * 3 + j];
        z[i * 3 + j] = s % p;
      }
    return z;
  };
  std::uint64_t o = 1;
  for (auto acc = m; acc != id; acc = mul(acc, m)) ++o;
  return o;
}

OrderProfile profile_of(const std::vector<std::uint64_t>& orders) {
  OrderProfile p;
  for (auto o : orders) ++p[o];
  return p;
}

void check_invariants(const GroupSpec& g) {
  std::size_t ids = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.size() % g.order(i) == 0);
    if (g.order(i) == 1) {
      ++ids;
      CHECK(i == g.identity_index());
    }
  }
  CHECK(ids == 1);
  std::set<std::string> labels;
  for (const auto& e : g.elements()) labels.insert(e.label);
  CHECK(labels.size() == g.size());
}

}  // namespace

TEST_CASE("cyclic orders") {
  const auto g = cyclic(6);
  std::vector<std::uint64_t> orders;
  for (const auto& e : g.elements()) orders.push_back(e.order);
  CHECK(orders == std::vector<std::uint64_t>{1, 6, 3, 2, 3, 6});
  // Oracle: smallest k with k * x = 0 mod n.
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto c = cyclic(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t k = 1;
      while ((k * x) % n != 0) ++k;
      CHECK(c.order(x) == k);
    }
  }
  CHECK(cyclic(1).size() == 1);
  CHECK(cyclic(1).order(0) == 1);
  CHECK(cyclic(8).order(4) == 2);
  CHECK_THROWS_AS(cyclic(0), DomainError);
}

TEST_CASE("dihedral orders") {
  CHECK(order_profile(dihedral(3)) == OrderProfile{{1, 1}, {2, 3}, {3, 2}});
  const auto d6 = dihedral(6);
  for (std::size_t i = 6; i < 12; ++i) CHECK(d6.order(i) == 2);
  CHECK(d6.element(0).label == "1");
  CHECK(d6.element(7).label == "sr");
  CHECK(order_profile(dihedral(1)) == OrderProfile{{1, 1}, {2, 1}});
}

TEST_CASE("dicyclic orders agree with a Cayley-table oracle") {
  const auto d3 = dicyclic(3);
  std::vector<std::string> s;
  for (std::size_t i = 0; i < d3.size(); ++i) {
    if (numtheory::is_one_or_prime(d3.order(i))) s.push_back(d3.element(i).label);
  }
  CHECK(s == std::vector<std::string>{"1", "a^2", "a^3", "a^4"});
  CHECK(d3.element(7).label == "xa");
  CHECK(d3.order(7) == 4);
  CHECK(order_profile(dicyclic(2)) == OrderProfile{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_profile(dicyclic(3)) == OrderProfile{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const auto g = dicyclic(n);
    const auto oracle = dicyclic_oracle_orders(n);
    REQUIRE(oracle.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.order(i) == oracle[i]);
    for (std::size_t i = 2 * n; i < 4 * n; ++i) CHECK(g.order(i) == 4);
  }
  CHECK_THROWS_AS(dicyclic(1), DomainError);
}

TEST_CASE("elementary abelian") {
  CHECK(order_profile(elementary_abelian(3, 2)) == OrderProfile{{1, 1}, {3, 8}});
  CHECK(order_profile(elementary_abelian(2, 3)) == OrderProfile{{1, 1}, {2, 7}});
  CHECK(order_profile(elementary_abelian(5, 1)) == order_profile(cyclic(5)));
  CHECK_THROWS_AS(elementary_abelian(4, 2), DomainError);
}

TEST_CASE("heisenberg orders agree with matrix powers") {
  CHECK(order_profile(heisenberg(3)) == OrderProfile{{1, 1}, {3, 26}});
  CHECK(order_profile(heisenberg(2)) == OrderProfile{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_profile(heisenberg(5)) == OrderProfile{{1, 1}, {5, 124}});
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c) oracle.push_back(matrix_order({1, a, c, 0, 1, b, 0, 0, 1}, p));
    CHECK(order_profile(heisenberg(p)) == profile_of(oracle));
    if (p > 2) CHECK(order_profile(heisenberg(p)) == OrderProfile{{1, 1}, {p, p * p * p - 1}});
  }
  CHECK_THROWS_AS(heisenberg(6), DomainError);
}

TEST_CASE("direct products use lcm of component orders") {
  CHECK(order_profile(direct_product(cyclic(3), cyclic(3))) == order_profile(elementary_abelian(3, 2)));
  CHECK(order_profile(direct_product(cyclic(2), cyclic(3))) == order_profile(cyclic(6)));
  CHECK(order_profile(direct_product(cyclic(4), cyclic(2))) == OrderProfile{{1, 1}, {2, 3}, {4, 4}});
  const auto g = direct_product(cyclic(2), dihedral(3));
  CHECK(g.family() == Family::product);
  CHECK(g.key() == "cyclic:2*dihedral:3");
  CHECK(g.element(1).label == "(0,r)");
}

TEST_CASE("from_orders validation") {
  const auto g = from_orders({"e", "a", "b"}, {1, 3, 3});
  CHECK(g.size() == 3);
  CHECK(g.warnings().empty());
  const auto w = from_orders({"e", "a"}, {1, 3});
  REQUIRE(w.warnings().size() == 1);
  CHECK(w.warnings()[0].code == "lagrange");
  CHECK_THROWS_AS(from_orders({"e", "e2"}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(from_orders({}, {}), ValidationError);
  CHECK_THROWS_AS(from_orders({"a", "b"}, {2, 2}), ValidationError);
  CHECK_THROWS_AS(from_orders({"e", "e"}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(from_orders({"e"}, {1, 2}), ValidationError);
}

TEST_CASE("family sizes and group invariants") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(cyclic(n).size() == n);
    CHECK(dihedral(n).size() == 2 * n);
    check_invariants(cyclic(n));
    check_invariants(dihedral(n));
  }
  for (std::uint64_t n = 2; n <= 12; ++n) {
    CHECK(dicyclic(n).size() == 4 * n);
    check_invariants(dicyclic(n));
  }
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned m = 1; m <= 3; ++m) {
      CHECK(elementary_abelian(p, m).size() == numtheory::ipow(p, m));
      check_invariants(elementary_abelian(p, m));
    }
    CHECK(heisenberg(p).size() == p * p * p);
    check_invariants(heisenberg(p));
  }
  const auto prod = direct_product(dihedral(4), dicyclic(2));
  CHECK(prod.size() == 64);
  check_invariants(prod);
}
