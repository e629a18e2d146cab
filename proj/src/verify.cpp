#include "theta/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"
#include "theta/properties.hpp"
#include "theta/spectra.hpp"

namespace theta {

namespace nt = numtheory;

GraphFactory default_graph_factory() {
  return [](GroupSpec g) { return ThetaGraph(std::move(g)); };
}

GraphFactory corrupted_graph_factory() {
  return [](GroupSpec g) {
    const ThetaGraph clean(g);
    AdjacencyMatrix adj = clean.adjacency();
    if (adj.size() >= 2) adj.set(clean.identity(), adj.size() - 1 == clean.identity() ? 0 : adj.size() - 1, false);
    return ThetaGraph(std::move(g), std::move(adj));
  };
}

namespace {

constexpr double kTol = 1e-7;

// Accumulates one table row; a case fails by returning a message or throwing.
class Row {
 public:
  Row(std::vector<VerifyRow>& out, std::string suite, std::string theorem) : out_(out) {
    row_.suite = std::move(suite);
    row_.theorem = std::move(theorem);
  }
  ~Row() { out_.push_back(std::move(row_)); }

  template <class F>
  void check(const std::string& name, F&& f) {
    ++row_.groups_tested;
    std::string why;
    try {
      why = f();
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    if (!why.empty() && row_.passed) {
      row_.passed = false;
      row_.failure = name + ": " + why;
    }
  }

 private:
  std::vector<VerifyRow>& out_;
  VerifyRow row_;
};

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::vector<GroupSpec> family_groups(std::size_t max_size) {
  std::vector<GroupSpec> gs;
  for (std::uint64_t n = 1; n <= max_size; ++n) gs.push_back(cyclic(n));
  for (std::uint64_t n = 1; 2 * n <= max_size; ++n) gs.push_back(dihedral(n));
  for (std::uint64_t n = 2; 4 * n <= max_size; ++n) gs.push_back(dicyclic(n));
  for (std::uint64_t p = 2; p * p <= max_size; ++p) {
    if (!nt::is_prime(p)) continue;
    unsigned m = 2;
    for (std::uint64_t s = p * p; s <= max_size; s *= p, ++m) gs.push_back(elementary_abelian(p, m));
  }
  for (std::uint64_t p = 2; p * p * p <= max_size; ++p) {
    if (nt::is_prime(p)) gs.push_back(heisenberg(p));
  }
  return gs;
}

void spectra_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  struct Case {
    const char* theorem;
    Family family;
    std::vector<std::uint64_t> ns;
  };
  const std::vector<Case> cases = {
      {"Q spectrum of Z_p", Family::cyclic, {2, 3, 5, 7, 11, 13}},
      {"Q spectrum of Z_pq", Family::cyclic, {6, 10, 14, 15, 21, 33, 35}},
      {"Q spectrum of Z_p^m", Family::cyclic, {4, 8, 16, 32, 9, 27, 25, 49}},
      {"Q spectrum of D_p (complete)", Family::dihedral, {2, 3, 5, 7}},
      {"Q spectrum of D_pq", Family::dihedral, {6, 10, 15, 21}},
      {"Q spectrum of D_p^m", Family::dihedral, {4, 8, 9, 27, 25}},
  };
  for (const auto& c : cases) {
    Row row(out, "spectra", c.theorem);
    for (auto n : c.ns) {
      const GroupSpec g = c.family == Family::cyclic ? cyclic(n) : dihedral(n);
      row.check(g.descriptor(), [&] {
        const ThetaGraph t = make(g);
        const SymMatrix q = build_Q(t);
        const auto numeric = eig_sym(q);
        const auto closed = closed_form_spectrum(c.family, n);
        if (!spectra_equal(closed, numeric, kTol)) return std::string("closed form differs from eigensolver");
        const double trace = 2.0 * static_cast<double>(t.edge_count());
        return expect(std::abs(numeric.weighted_sum() - trace) <= 1e-8 * trace, "eigenvalue sum differs from 2|E|");
      });
    }
  }
}

void block_identity_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "block_identity", "rotation block of Q(D_n) = Q(Z_n) + nI");
  for (std::uint64_t n = 1; n <= 30; ++n) {
    row.check("n=" + std::to_string(n), [&] {
      const SymMatrix qd = build_Q(make(dihedral(n)));
      const SymMatrix qz = build_Q(make(cyclic(n)));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double want = qz(i, j) + (i == j ? static_cast<double>(n) : 0.0);
          if (qd(i, j) != want) return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs";
        }
      }
      return std::string();
    });
  }
}

void connectivity_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  {
    Row row(out, "connectivity", "kappa(Z_p) = p - 1");
    for (std::uint64_t n = 2; n <= 31; ++n) {
      if (!nt::is_prime(n)) continue;
      row.check("Z_" + std::to_string(n), [&] {
        return expect(vertex_connectivity(make(cyclic(n))).kappa == n - 1, "kappa != n-1");
      });
    }
  }
  {
    Row row(out, "connectivity", "kappa(Z_n) = |S(Z_n)| for composite n");
    for (std::uint64_t n = 4; n <= 60; ++n) {
      if (nt::is_prime(n)) continue;
      row.check("Z_" + std::to_string(n), [&] {
        const ThetaGraph t = make(cyclic(n));
        const auto k = vertex_connectivity(t);
        return expect(k.kappa == prime_order_set(t).size(), "kappa=" + std::to_string(k.kappa) + " but |S|=" +
                                                                std::to_string(prime_order_set(t).size()));
      });
    }
  }
  {
    Row row(out, "connectivity", "kappa(Z_pq) = p + q - 1, kappa(Z_p^m) = p");
    for (std::uint64_t n = 4; n <= 60; ++n) {
      const auto f = nt::factorize(n);
      std::uint64_t want = 0;
      if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) want = f[0].prime + f[1].prime - 1;
      if (f.size() == 1 && f[0].exponent >= 2) want = f[0].prime;
      if (want == 0) continue;
      row.check("Z_" + std::to_string(n),
                [&] { return expect(vertex_connectivity(make(cyclic(n))).kappa == want, "formula mismatch"); });
    }
  }
}

void dicyclic_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "dicyclic", "kappa(Dic_3) = 6 > |S(Dic_3)| = 4");
  row.check("Dic_3", [&] {
    const ThetaGraph t = make(dicyclic(3));
    const auto k = vertex_connectivity(t);
    const auto op = open_problem_classify(t, k);
    return expect(k.kappa == 6 && op.s_size == 4 && op.cls == OpenProblemClass::kappa_exceeds_S,
                  "kappa=" + std::to_string(k.kappa) + " |S|=" + std::to_string(op.s_size));
  });
}

void eulerian_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "eulerian", "Eulerian iff |G| odd and every non-identity order prime");
  for (const auto& g : family_groups(200)) {
    row.check(g.descriptor(), [&] {
      bool theorem = g.size() % 2 == 1;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (v != g.identity_index() && !nt::is_prime(g.order(v))) theorem = false;
      }
      return expect(is_eulerian(make(g)) == theorem, "disagrees with theorem");
    });
  }
}

void completeness_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  {
    Row row(out, "completeness", "Theta(Z_n) complete iff n prime");
    for (std::uint64_t n = 2; n <= 100; ++n) {
      row.check("Z_" + std::to_string(n),
                [&] { return expect(is_complete(make(cyclic(n))) == nt::is_prime(n), "disagrees with theorem"); });
    }
  }
  {
    Row row(out, "completeness", "Theta(D_n) complete iff n prime");
    for (std::uint64_t n = 2; n <= 50; ++n) {
      row.check("D_" + std::to_string(n),
                [&] { return expect(is_complete(make(dihedral(n))) == nt::is_prime(n), "disagrees with theorem"); });
    }
  }
  {
    Row row(out, "completeness", "Theta((Z_p)^m) and Theta(UT(3,3)) complete");
    std::vector<GroupSpec> gs = {heisenberg(3)};
    for (auto [p, m] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
      gs.push_back(elementary_abelian(p, m));
    }
    for (const auto& g : gs) {
      row.check(g.descriptor(), [&] { return expect(is_complete(make(g)), "not complete"); });
    }
  }
}

bool power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

void planarity_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "planarity", "Theta(Z_n) planar iff n = 3 or n = 2^i");
  for (std::uint64_t n = 1; n <= 64; ++n) {
    row.check("Z_" + std::to_string(n), [&] {
      return expect(is_planar(make(cyclic(n))) == (n == 3 || power_of_two(n)), "disagrees with theorem");
    });
  }
}

void hamiltonian_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "hamiltonian", "Theta(Z_pq) Hamiltonian iff p = 2");
  for (std::uint64_t n : {6, 10, 14, 22}) {
    row.check("Z_" + std::to_string(n), [&] {
      const ThetaGraph t = make(cyclic(n));
      const auto v = is_hamiltonian(t);
      return expect(v.status == HamiltonStatus::yes && validate_hamiltonian_cycle(t.adjacency(), v.cycle),
                    "no validated cycle");
    });
  }
  for (std::uint64_t n : {15, 21, 33, 35}) {
    row.check("Z_" + std::to_string(n), [&] {
      const ThetaGraph t = make(cyclic(n));
      const auto v = is_hamiltonian(t);
      return expect(v.status == HamiltonStatus::no && v.method == HamiltonMethod::toughness_refuted &&
                        components_after_removal(t, v.tough_witness) > v.tough_witness.size(),
                    "no validated toughness witness");
    });
  }
}

void structure_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "structure", "connected, diameter <= 2, girth 3, domination number 1");
  auto groups = family_groups(200);
  groups.push_back(direct_product(cyclic(2), cyclic(6)));
  groups.push_back(direct_product(dihedral(3), cyclic(3)));
  groups.push_back(direct_product(dicyclic(2), cyclic(5)));
  for (const auto& g : groups) {
    row.check(g.descriptor(), [&] {
      const ThetaGraph t = make(g);
      if (!is_connected(t)) return std::string("disconnected");
      if (diameter(t) > 2) return std::string("diameter > 2");
      if (t.n_vertices() > 2 && girth(t) != std::optional<std::size_t>(3)) return std::string("girth != 3");
      const auto d = domination_number(t);
      return expect(d.number == 1 && d.witness == std::vector<std::size_t>{t.identity()}, "domination");
    });
  }
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix printed_quotient(const GroupSpec& g) {
  using I = std::int64_t;
  const I n = static_cast<I>(g.params().front());
  const auto f = nt::factorize(static_cast<std::uint64_t>(n));
  const bool semiprime = f.size() == 2;
  const I p = static_cast<I>(f.front().prime);
  const I phi = static_cast<I>(nt::euler_phi(static_cast<std::uint64_t>(n)));
  if (g.family() == Family::cyclic) {
    if (semiprime) return {{2 * n - phi - 2, phi}, {n - phi, n - phi}};
    return {{n + p - 2, n - p}, {p, p}};
  }
  if (semiprime) return {{3 * n - 2 - phi, phi, n}, {n - phi, 2 * n - phi, n}, {n - phi, phi, 3 * n - 2}};
  return {{2 * (n - 1) + p, n - p, n}, {p, n + p, n}, {p, n - p, 3 * n - 2}};
}

void equitable_suite(std::vector<VerifyRow>& out, const GraphFactory& make) {
  Row row(out, "equitable", "theorem partitions are equitable; Q_pi spectrum embeds in Q");
  std::vector<GroupSpec> gs;
  for (std::uint64_t n : {6, 10, 14, 15, 21, 33, 35, 4, 8, 16, 9, 27, 25, 49}) gs.push_back(cyclic(n));
  for (std::uint64_t n : {6, 10, 15, 21, 4, 8, 9, 27, 25}) gs.push_back(dihedral(n));
  for (const auto& g : gs) {
    row.check(g.descriptor(), [&] {
      const ThetaGraph t = make(g);
      const Partition blocks = theorem_partition(g);
      if (!is_equitable(t, blocks).equitable) return std::string("partition not equitable");
      const auto qp = quotient_matrix(t, blocks);
      if (qp.quotient != printed_quotient(g)) return std::string("quotient differs from the closed form");
      return expect(spectrum_contains(quotient_spectrum(qp), eig_sym(build_Q(t)), kTol),
                    "quotient spectrum not contained");
    });
  }
}

using SuiteFn = void (*)(std::vector<VerifyRow>&, const GraphFactory&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"spectra", spectra_suite},           {"block_identity", block_identity_suite},
      {"connectivity", connectivity_suite}, {"dicyclic", dicyclic_suite},
      {"eulerian", eulerian_suite},         {"completeness", completeness_suite},
      {"planarity", planarity_suite},       {"hamiltonian", hamiltonian_suite},
      {"structure", structure_suite},       {"equitable", equitable_suite},
  };
  return s;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.emplace_back("all");
  return names;
}

std::vector<VerifyRow> run_verify(const std::string& suite, const GraphFactory& factory) {
  std::vector<VerifyRow> rows;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      fn(rows, factory);
      found = true;
    }
  }
  if (!found) throw ValidationError("unknown verify suite '" + suite + "'");
  return rows;
}

bool print_verify_table(std::ostream& os, const std::vector<VerifyRow>& rows) {
  bool ok = true;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-15s %-62s %7s  %s\n", "suite", "theorem", "groups", "result");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-15s %-62s %7zu  %s", r.suite.c_str(), r.theorem.c_str(), r.groups_tested,
                  r.passed ? "PASS" : "FAIL");
    os << buf;
    if (!r.passed) os << "  (" << r.failure << ")";
    os << '\n';
    ok = ok && r.passed;
  }
  return ok;
}

}  // namespace theta
