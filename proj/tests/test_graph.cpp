#include <numeric>

#include "doctest.h"
#include "json.hpp"
#include "theta/errors.hpp"
#include "theta/graph.hpp"
#include "theta/numtheory.hpp"

using namespace theta;

namespace {

std::vector<GroupSpec> sample_groups() {
  std::vector<GroupSpec> gs;
  for (std::uint64_t n = 1; n <= 60; ++n) gs.push_back(cyclic(n));
  for (std::uint64_t n = 1; n <= 40; ++n) gs.push_back(dihedral(n));
  for (std::uint64_t n = 2; n <= 12; ++n) gs.push_back(dicyclic(n));
  gs.push_back(elementary_abelian(3, 3));
  gs.push_back(heisenberg(5));
  gs.push_back(direct_product(cyclic(4), dihedral(6)));
  return gs;
}

}  // namespace

TEST_CASE("Theta(Z_6) is K_6 minus the generator edge") {
  const auto t = build_theta(cyclic(6));
  CHECK(t.edge_count() == 14);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const bool want = i != j && !((i == 1 && j == 5) || (i == 5 && j == 1));
      CHECK(adjacent(t, i, j) == want);
    }
}

TEST_CASE("Theta(Z_7) is complete; Theta(D_4) joins every reflection to every rotation") {
  const auto t = build_theta(cyclic(7));
  CHECK(t.edge_count() == 21);
  const auto d = build_theta(dihedral(4));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 4; s < 8; ++s) CHECK(adjacent(d, r, s));
}

TEST_CASE("adjacent") {
  const auto t = build_theta(cyclic(12));
  CHECK(adjacent(t, 2, 3));
  CHECK_FALSE(adjacent(t, 1, 5));
  CHECK_FALSE(adjacent(t, 4, 4));
  CHECK_THROWS_AS(adjacent(t, 0, 12), DomainError);
}

TEST_CASE("prime order set") {
  CHECK(prime_order_set(build_theta(cyclic(12))).indices == std::vector<std::size_t>{0, 4, 6, 8});
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {3, 5}, {5, 7}, {2, 11}}) {
    CHECK(prime_order_set(build_theta(cyclic(p * q))).size() == p + q - 1);
  }
  for (auto [p, m] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 3}, {5, 2}, {2, 5}}) {
    CHECK(prime_order_set(build_theta(cyclic(numtheory::ipow(p, m)))).size() == p);
  }
}

TEST_CASE("degrees") {
  for (std::uint64_t q : {3, 5, 7, 11}) {
    const auto t = build_theta(cyclic(2 * q));
    CHECK(degree(t, 1) == q + 1);
  }
  const auto z8 = build_theta(cyclic(8));
  CHECK(degree(z8, 0) == 7);
  const auto& d = z8.adjacency().degrees();
  CHECK(std::count(d.begin(), d.end(), 7u) == 2);
  CHECK(min_degree(build_theta(cyclic(9))) == 3);
  CHECK(degree(build_theta(cyclic(9)), 1) == 3);
}

TEST_CASE("min degree of Theta(Z_n) equals |S| at every generator for composite n") {
  for (std::uint64_t n = 4; n <= 120; ++n) {
    if (numtheory::is_prime(n)) continue;
    const auto t = build_theta(cyclic(n));
    const auto s = prime_order_set(t).size();
    CHECK(min_degree(t) == s);
    for (std::uint64_t k = 1; k < n; ++k) {
      if (numtheory::gcd(k, n) == 1) CHECK(degree(t, k) == s);
    }
  }
}

TEST_CASE("structural invariants and brute-force adjacency re-derivation") {
  for (const auto& g : sample_groups()) {
    const auto t = build_theta(g);
    const auto& adj = t.adjacency();
    std::size_t deg_sum = 0;
    for (std::size_t i = 0; i < t.n_vertices(); ++i) {
      CHECK_FALSE(adj.test(i, i));
      std::size_t row = 0;
      for (std::size_t j = 0; j < t.n_vertices(); ++j) {
        CHECK(adj.test(i, j) == adj.test(j, i));
        const auto gd = numtheory::gcd(g.order(i), g.order(j));
        const bool want = i != j && (gd == 1 || numtheory::is_prime(gd));
        CHECK(adj.test(i, j) == want);
        row += adj.test(i, j);
      }
      CHECK(row == adj.degree(i));
      deg_sum += row;
      if (i != t.identity()) CHECK(adj.test(t.identity(), i));
    }
    CHECK(deg_sum == 2 * t.edge_count());
    CHECK(t.matches_predicate());
  }
}

TEST_CASE("small groups carry a warning") {
  CHECK(build_theta(cyclic(1)).warnings().front().code == "small_group");
  CHECK(build_theta(cyclic(2)).warnings().front().code == "small_group");
  CHECK(build_theta(cyclic(3)).warnings().empty());
}

TEST_CASE("DOT export") {
  const auto dot = export_dot(build_theta(cyclic(3)));
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 3 + 3 + 1);
  CHECK(dot.find("\"0\" -- \"1\";") != std::string::npos);
  const auto dot4 = export_dot(build_theta(cyclic(4)));
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot4.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 5);
  CHECK(dot4.find("\"1\" -- \"3\"") == std::string::npos);
  CHECK_THROWS_AS(build_theta(from_orders({}, {})), ValidationError);
}

TEST_CASE("JSON export and round trip") {
  const auto doc6 = nlohmann::json::parse(export_json(build_theta(cyclic(6))));
  CHECK(doc6["edge_count"] == 14);
  CHECK(doc6["group"]["family"] == "cyclic");
  CHECK(nlohmann::json::parse(export_json(build_theta(dihedral(6))))["edge_count"] == 65);
  for (const auto& g : sample_groups()) {
    const auto t = build_theta(g);
    const auto back = parse_graph_json(export_json(t));
    CHECK(back.adjacency() == t.adjacency());
    for (std::size_t i = 0; i < t.n_vertices(); ++i) {
      CHECK(back.group().element(i).label == g.element(i).label);
      CHECK(back.order(i) == g.order(i));
    }
  }
  CHECK_THROWS_AS(parse_graph_json("{"), ValidationError);
  CHECK_THROWS_AS(parse_graph_json(R"({"labels":["e","a"],"orders":[1,2],"edges":[[0,5]]})"), ValidationError);
}
