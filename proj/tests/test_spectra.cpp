#include <cmath>
#include <limits>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/numtheory.hpp"
#include "theta/spectra.hpp"

using namespace theta;

namespace {

// Oracle independent of Jacobi: rank of (M - x I) by Gaussian elimination
// with partial pivoting. The multiplicity of x in a symmetric M is n - rank.
std::size_t nullity(const SymMatrix& m, double x, double tol = 1e-8) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j) - (i == j ? x : 0.0);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= tol) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      const double f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return n - rank;
}

SpectrumResult spectrum(std::initializer_list<std::pair<double, std::size_t>> items) {
  SpectrumResult s;
  for (auto [v, m] : items) s.entries.push_back({v, m, std::nullopt});
  return s;
}

void check_against_rank_oracle(const SpectrumResult& closed, const SymMatrix& q) {
  std::size_t total = 0;
  for (const auto& e : closed.entries) {
    CHECK(nullity(q, e.value) == e.multiplicity);
    total += e.multiplicity;
  }
  CHECK(total == q.size());
}

}  // namespace

TEST_CASE("build_Q") {
  const auto q5 = build_Q(build_theta(cyclic(5)));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(q5(i, j) == (i == j ? 4.0 : 1.0));

  const auto q4 = build_Q(build_theta(cyclic(4)));
  CHECK(q4(0, 0) == 3);
  CHECK(q4(1, 1) == 2);
  CHECK(q4(2, 2) == 3);
  CHECK(q4(3, 3) == 2);
  CHECK(q4(1, 3) == 0);
  CHECK(q4(3, 1) == 0);
  CHECK(q4(0, 1) == 1);
  CHECK(q4(1, 2) == 1);
  CHECK(build_Q(build_theta(cyclic(6))).trace() == 28);
}

TEST_CASE("Surd canonical form and display") {
  const Surd a(12, 1, 48, 2);  // (12 + sqrt 48) / 2 = 6 + 2 sqrt 3
  CHECK(a == Surd(6, 1, 12));
  CHECK(a.display() == "6+2*sqrt(3)");
  CHECK(Surd(6, -1, 12).display() == "6-2*sqrt(3)");
  CHECK(Surd(13, 1, 121, 2) == Surd::integer(12));
  CHECK(Surd(13, -1, 121, 2) == Surd::integer(1));
  CHECK(Surd(13, 1, 153, 2).display() == "(13+3*sqrt(17))/2");
  CHECK(Surd(0, -1, 8).display() == "-2*sqrt(2)");
  CHECK(Surd(7, 0, 0, 2).display() == "7/2");
  CHECK(Surd(15, 1, 45).display() == "15+3*sqrt(5)");
  CHECK_THROWS_AS(Surd(1, 1, 2, 3), DomainError);
}

TEST_CASE("Surd value is within one ulp of direct evaluation") {
  for (std::int64_t a = -40; a <= 40; a += 3) {
    for (std::uint64_t b = 0; b <= 3000; b += 7) {
      for (int s : {-1, 1}) {
        const double direct = static_cast<double>(a) + s * std::sqrt(static_cast<double>(b));
        const double v = Surd(a, s, b).value();
        const double ulp = std::nextafter(std::abs(direct), std::numeric_limits<double>::infinity()) - std::abs(direct);
        CHECK(std::abs(v - direct) <= ulp);
      }
    }
  }
}

TEST_CASE("eig_sym basics") {
  SymMatrix m(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = (i == j ? 3.0 : 0.0) + 1.0;
  CHECK(spectra_equal(eig_sym(m), spectrum({{8, 1}, {3, 4}}), 1e-10));
  const auto e = eig_sym(m);
  REQUIRE(e.entries.size() == 2);
  CHECK(e.entries[0].multiplicity == 1);
  CHECK(e.entries[1].multiplicity == 4);

  SymMatrix id(4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1.0;
  const auto ei = eig_sym(id);
  REQUIRE(ei.entries.size() == 1);
  CHECK(ei.entries[0].multiplicity == 4);

  SymMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_sym(bad), DomainError);
}

TEST_CASE("eig_sym matches rank oracle, trace and positivity on Theta graphs") {
  for (const auto& g : {cyclic(6), cyclic(12), cyclic(30), dihedral(6), dicyclic(3), heisenberg(2),
                        direct_product(cyclic(2), cyclic(4))}) {
    const auto q = build_Q(build_theta(g));
    const auto e = eig_sym(q);
    CHECK(e.dimension() == q.size());
    CHECK(std::abs(e.weighted_sum() - q.trace()) <= 1e-8 * q.trace());
    for (const auto& entry : e.entries) {
      CHECK(entry.value >= -1e-9);
      CHECK(nullity(q, entry.value, 1e-7) == entry.multiplicity);
    }
  }
}

TEST_CASE("closed forms: frozen examples") {
  const auto c9 = closed_form_spectrum(Family::cyclic, 9);
  CHECK(spectra_equal(c9, spectrum({{12, 1}, {7, 2}, {3, 5}, {1, 1}}), 0.0));
  REQUIRE(c9.entries.size() == 4);
  CHECK(c9.entries[0].exact == Surd::integer(12));

  const auto c6 = closed_form_spectrum(Family::cyclic, 6);
  REQUIRE(c6.entries.size() == 3);
  CHECK(c6.entries[0].display() == "6+2*sqrt(3)");
  CHECK(c6.entries[1].exact == Surd::integer(4));
  CHECK(c6.entries[1].multiplicity == 4);
  CHECK(c6.entries[2].display() == "6-2*sqrt(3)");

  const auto d6 = closed_form_spectrum(Family::dihedral, 6);
  REQUIRE(d6.entries.size() == 3);
  CHECK(d6.entries[0].display() == "15+3*sqrt(5)");
  CHECK(d6.entries[1].exact == Surd::integer(10));
  CHECK(d6.entries[1].multiplicity == 10);
  CHECK(d6.entries[2].display() == "15-3*sqrt(5)");

  const auto d9 = closed_form_spectrum(Family::dihedral, 9);
  CHECK(spectra_equal(d9, spectrum({{20 + std::sqrt(136.0), 1}, {16, 11}, {12, 5}, {20 - std::sqrt(136.0), 1}}),
                      1e-12));

  CHECK(spectra_equal(closed_form_spectrum(Family::cyclic, 5), spectrum({{8, 1}, {3, 4}}), 0.0));
  CHECK(spectra_equal(closed_form_spectrum(Family::dihedral, 5), spectrum({{18, 1}, {8, 9}}), 0.0));

  CHECK_THROWS_AS(closed_form_spectrum(Family::cyclic, 30), UnsupportedShape);
  CHECK_THROWS_AS(closed_form_spectrum(Family::cyclic, 12), UnsupportedShape);
  CHECK_THROWS_AS(closed_form_spectrum(Family::cyclic, 1), UnsupportedShape);
  CHECK_THROWS_AS(closed_form_spectrum(Family::dicyclic, 3), UnsupportedShape);
}

TEST_CASE("closed forms agree with the eigensolver and the rank oracle") {
  for (std::uint64_t n : {2, 3, 5, 7, 6, 10, 14, 15, 21, 33, 35, 4, 8, 16, 9, 27, 25, 49}) {
    const auto q = build_Q(build_theta(cyclic(n)));
    const auto closed = closed_form_spectrum(Family::cyclic, n);
    CHECK(spectra_equal(closed, eig_sym(q), 1e-7));
    check_against_rank_oracle(closed, q);
  }
  for (std::uint64_t n : {2, 3, 5, 6, 10, 15, 21, 4, 8, 9, 27, 25}) {
    const auto q = build_Q(build_theta(dihedral(n)));
    const auto closed = closed_form_spectrum(Family::dihedral, n);
    CHECK(spectra_equal(closed, eig_sym(q), 1e-7));
    check_against_rank_oracle(closed, q);
  }
}

TEST_CASE("spectrum comparison helpers") {
  const auto s6 = eig_sym(build_Q(build_theta(cyclic(6))));
  CHECK(spectrum_contains(spectrum({{6 + 2 * std::sqrt(3.0), 1}, {6 - 2 * std::sqrt(3.0), 1}}), s6, 1e-7));
  CHECK_FALSE(spectrum_contains(spectrum({{4, 5}}), s6, 1e-7));
  CHECK(spectrum_contains(s6, s6, 0.0));
  CHECK_FALSE(spectra_equal(spectrum({{3, 1}}), spectrum({{3, 2}}), 1e-7));
  CHECK(spectra_equal(closed_form_spectrum(Family::cyclic, 9), eig_sym(build_Q(build_theta(cyclic(9)))), 1e-7));
}

TEST_CASE("equitable partitions") {
  const auto z6 = build_theta(cyclic(6));
  const Partition two{{0, 2, 3, 4}, {1, 5}};
  CHECK(is_equitable(z6, two).equitable);
  const auto qp = quotient_matrix(z6, two);
  CHECK(qp.quotient == std::vector<std::vector<std::int64_t>>{{8, 2}, {4, 4}});

  const auto bad = is_equitable(z6, {{0, 1}, {2, 3, 4, 5}});
  CHECK_FALSE(bad.equitable);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_THROWS_AS(quotient_matrix(z6, {{0, 1}, {2, 3, 4, 5}}), ValidationError);

  Partition singletons;
  for (std::size_t v = 0; v < 6; ++v) singletons.push_back({v});
  CHECK(is_equitable(z6, singletons).equitable);

  CHECK_THROWS_AS(is_equitable(z6, {{0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(is_equitable(z6, {{0, 1, 2, 3, 4, 5}, {5}}), ValidationError);

  const auto z9 = build_theta(cyclic(9));
  CHECK(quotient_matrix(z9, {{0, 3, 6}, {1, 2, 4, 5, 7, 8}}).quotient ==
        std::vector<std::vector<std::int64_t>>{{10, 6}, {3, 3}});

  const auto d9 = build_theta(dihedral(9));
  const auto part = theorem_partition(d9.group());
  CHECK(part[0] == std::vector<std::size_t>{0, 3, 6});
  CHECK(quotient_matrix(d9, part).quotient ==
        std::vector<std::vector<std::int64_t>>{{19, 6, 9}, {3, 12, 9}, {3, 6, 25}});
}

TEST_CASE("quotient spectra embed in the full spectrum") {
  for (const auto& g : {cyclic(6), cyclic(35), cyclic(27), dihedral(10), dihedral(25)}) {
    const auto t = build_theta(g);
    const auto qp = quotient_matrix(t, theorem_partition(g));
    CHECK(spectrum_contains(quotient_spectrum(qp), eig_sym(build_Q(t)), 1e-7));
  }
  const auto z6 = build_theta(cyclic(6));
  const auto qs = quotient_spectrum(quotient_matrix(z6, {{0, 2, 3, 4}, {1, 5}}));
  CHECK(spectra_equal(qs, spectrum({{6 + 2 * std::sqrt(3.0), 1}, {6 - 2 * std::sqrt(3.0), 1}}), 1e-9));
  CHECK_THROWS_AS(theorem_partition(cyclic(7)), UnsupportedShape);
  CHECK_THROWS_AS(theorem_partition(dicyclic(3)), UnsupportedShape);
}
