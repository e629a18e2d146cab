#include "theta/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"

namespace theta {

namespace nt = numtheory;

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

bool SymMatrix::is_symmetric(double tol) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

Surd::Surd(std::int64_t a, int s, std::uint64_t b, std::int64_t d) : a_(a), s_(s), b_(b), d_(d) {
  if (d_ != 1 && d_ != 2) throw DomainError("Surd: denominator must be 1 or 2");
  if (s_ != 0) s_ = s_ > 0 ? 1 : -1;
  if (s_ == 0 || b_ == 0) {
    s_ = 0;
    b_ = 0;
  } else if (const auto r = nt::isqrt(b_); r * r == b_) {
    a_ += s_ * static_cast<std::int64_t>(r);
    s_ = 0;
    b_ = 0;
  }
  if (d_ == 2 && a_ % 2 == 0 && b_ % 4 == 0) {
    a_ /= 2;
    b_ /= 4;
    d_ = 1;
  }
}

double Surd::value() const noexcept {
  double v = static_cast<double>(a_);
  if (s_ != 0) v += s_ * std::sqrt(static_cast<double>(b_));
  return v / static_cast<double>(d_);
}

std::string Surd::display() const {
  std::string out;
  if (s_ == 0) {
    out = std::to_string(a_);
    return d_ == 1 ? out : out + "/2";
  }
  // b = k^2 * r with r squarefree
  std::uint64_t k = 1;
  std::uint64_t r = b_;
  for (std::uint64_t f = 2; f * f <= r; ++f) {
    while (r % (f * f) == 0) {
      r /= f * f;
      k *= f;
    }
  }
  if (a_ != 0) out = std::to_string(a_);
  if (s_ < 0) {
    out += "-";
  } else if (a_ != 0) {
    out += "+";
  }
  if (k > 1) out += std::to_string(k) + "*";
  out += "sqrt(" + std::to_string(r) + ")";
  return d_ == 1 ? out : "(" + out + ")/2";
}

std::string_view to_string(SpectrumKind k) noexcept {
  return k == SpectrumKind::closed_form ? "closed_form" : "numeric";
}

std::string SpectrumEntry::display() const {
  if (exact) return exact->display();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", value);
  return buf;
}

std::size_t SpectrumResult::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& e : entries) d += e.multiplicity;
  return d;
}

double SpectrumResult::weighted_sum() const noexcept {
  double s = 0.0;
  for (const auto& e : entries) s += e.value * static_cast<double>(e.multiplicity);
  return s;
}

std::vector<double> SpectrumResult::flattened() const {
  std::vector<double> out;
  out.reserve(dimension());
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SymMatrix build_Q(const AdjacencyMatrix& g) {
  SymMatrix q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    q(i, i) = static_cast<double>(g.degree(i));
    for (std::size_t j : g.neighbors(i)) q(i, j) = 1.0;
  }
  return q;
}

SymMatrix build_Q(const ThetaGraph& t) { return build_Q(t.adjacency()); }

SpectrumResult eig_sym(const SymMatrix& m, double tol) {
  if (!m.is_symmetric()) throw DomainError("eig_sym: matrix is not symmetric");
  const std::size_t n = m.size();
  SymMatrix a = m;
  const double norm = m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() >= tol * norm; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());

  SpectrumResult out;
  out.kind = SpectrumKind::numeric;
  const double group_tol = 1e-7 * std::max(1.0, norm);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    double sum = ev[i];
    while (j < n && ev[j - 1] - ev[j] <= group_tol) sum += ev[j++];
    out.entries.push_back({sum / static_cast<double>(j - i), j - i, std::nullopt});
    i = j;
  }
  return out;
}

namespace {

enum class Shape { prime, semiprime, prime_power, other };

struct ShapeInfo {
  Shape shape = Shape::other;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
};

ShapeInfo classify(std::uint64_t n) {
  if (n < 2) return {};
  const auto f = nt::factorize(n);
  if (f.size() == 1 && f[0].exponent == 1) return {Shape::prime, f[0].prime, 0, 1};
  if (f.size() == 1) return {Shape::prime_power, f[0].prime, 0, f[0].exponent};
  if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) return {Shape::semiprime, f[0].prime, f[1].prime, 0};
  return {};
}

class ExactSpectrum {
 public:
  void add(Surd v, std::int64_t mult) {
    if (mult <= 0) return;
    for (auto& [val, m] : items_) {
      if (val == v) {
        m += static_cast<std::size_t>(mult);
        return;
      }
    }
    items_.emplace_back(v, static_cast<std::size_t>(mult));
  }

  // Both roots of x^2 - sum*x + product.
  void add_quadratic_roots(std::int64_t sum, std::int64_t product) {
    const std::int64_t disc = sum * sum - 4 * product;
    add(Surd(sum, +1, static_cast<std::uint64_t>(disc), 2), 1);
    add(Surd(sum, -1, static_cast<std::uint64_t>(disc), 2), 1);
  }

  void add_pair(std::int64_t centre, std::int64_t radicand) {
    add(Surd(centre, +1, static_cast<std::uint64_t>(radicand)), 1);
    add(Surd(centre, -1, static_cast<std::uint64_t>(radicand)), 1);
  }

  SpectrumResult finish() {
    SpectrumResult out;
    out.kind = SpectrumKind::closed_form;
    for (auto& [v, m] : items_) out.entries.push_back({v.value(), m, v});
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const auto& x, const auto& y) { return x.value > y.value; });
    return out;
  }

 private:
  std::vector<std::pair<Surd, std::size_t>> items_;
};

std::string unsupported_message(Family family, std::uint64_t n) {
  return "no closed form for " + std::string(to_string(family)) + " n=" + std::to_string(n) +
         "; supported: cyclic or dihedral with n = p, p*q (distinct primes) or p^m (m >= 2)";
}

}  // namespace

SpectrumResult closed_form_spectrum(Family family, std::uint64_t n) {
  if (family != Family::cyclic && family != Family::dihedral) throw UnsupportedShape(unsupported_message(family, n));
  const ShapeInfo sh = classify(n);
  if (sh.shape == Shape::other) throw UnsupportedShape(unsupported_message(family, n));

  using I = std::int64_t;
  const I N = static_cast<I>(n);
  const I p = static_cast<I>(sh.p);
  const I q = static_cast<I>(sh.q);
  ExactSpectrum s;

  if (family == Family::cyclic) {
    switch (sh.shape) {
      case Shape::prime:
        s.add(Surd::integer(2 * (N - 1)), 1);
        s.add(Surd::integer(N - 2), N - 1);
        break;
      case Shape::semiprime:
        s.add(Surd::integer(p + q - 1), p * q - p - q);
        s.add(Surd::integer(p * q - 2), p + q - 2);
        s.add_quadratic_roots(p * q + 2 * p + 2 * q - 4, 2 * (p + q - 1) * (p + q - 2));
        break;
      case Shape::prime_power:
        s.add(Surd::integer(p), N - p - 1);
        s.add(Surd::integer(N - 2), p - 1);
        s.add_quadratic_roots(N + 2 * p - 2, 2 * p * (p - 1));
        break;
      case Shape::other:
        break;
    }
    return s.finish();
  }

  const I phi = static_cast<I>(nt::euler_phi(n));
  switch (sh.shape) {
    case Shape::prime:
      // Theta(D_p) is complete on 2p vertices.
      s.add(Surd::integer(2 * (2 * N - 1)), 1);
      s.add(Surd::integer(2 * N - 2), 2 * N - 1);
      break;
    case Shape::semiprime:
      s.add(Surd::integer(2 * (N - 1)), 2 * N - phi - 1);
      s.add(Surd::integer(2 * N - phi), phi - 1);
      s.add_pair(3 * N - phi - 1, N * N + 2 * phi * N - phi * phi - 2 * N + 1);
      break;
    case Shape::prime_power:
      s.add(Surd::integer(2 * N - 2), N + p - 1);
      s.add(Surd::integer(p + N), N - p - 1);
      s.add_pair(2 * N + p - 1, 2 * N * N - 2 * N - p * p + 1);
      break;
    case Shape::other:
      break;
  }
  return s.finish();
}

bool spectrum_contains(const SpectrumResult& sub, const SpectrumResult& full, double tol) {
  const auto a = sub.flattened();
  const auto b = full.flattened();
  // Both descending: greedy two-pointer matching is optimal on the line.
  std::size_t j = 0;
  for (double x : a) {
    while (j < b.size() && b[j] > x + tol) ++j;
    if (j == b.size() || std::abs(b[j] - x) > tol) return false;
    ++j;
  }
  return true;
}

bool spectra_equal(const SpectrumResult& a, const SpectrumResult& b, double tol) {
  const auto x = a.flattened();
  const auto y = b.flattened();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> block_of(std::size_t n, const Partition& blocks) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kNone);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("partition: empty block " + std::to_string(b));
    for (std::size_t v : blocks[b]) {
      if (v >= n) throw ValidationError("partition: vertex " + std::to_string(v) + " out of range");
      if (owner[v] != kNone) throw ValidationError("partition: vertex " + std::to_string(v) + " in two blocks");
      owner[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == kNone) throw ValidationError("partition: vertex " + std::to_string(v) + " not covered");
  }
  return owner;
}

std::vector<std::size_t> counts_into_blocks(const AdjacencyMatrix& g, std::size_t v,
                                            const std::vector<std::size_t>& owner, std::size_t k) {
  std::vector<std::size_t> c(k, 0);
  for (std::size_t w : g.neighbors(v)) ++c[owner[w]];
  return c;
}

}  // namespace

EquitabilityCheck is_equitable(const AdjacencyMatrix& g, const Partition& blocks) {
  const auto owner = block_of(g.size(), blocks);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t first = blocks[b].front();
    const auto ref = counts_into_blocks(g, first, owner, blocks.size());
    for (std::size_t v : blocks[b]) {
      const auto c = counts_into_blocks(g, v, owner, blocks.size());
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] != ref[j]) return {false, std::make_pair(first, v), b, j};
      }
    }
  }
  return {true, std::nullopt, 0, 0};
}

EquitabilityCheck is_equitable(const ThetaGraph& t, const Partition& blocks) {
  return is_equitable(t.adjacency(), blocks);
}

EquitablePartition quotient_matrix(const AdjacencyMatrix& g, const Partition& blocks) {
  const auto check = is_equitable(g, blocks);
  if (!check.equitable) {
    throw ValidationError("partition is not equitable: vertices " + std::to_string(check.witness->first) + " and " +
                          std::to_string(check.witness->second) + " of block " + std::to_string(check.from_block) +
                          " differ in neighbours inside block " + std::to_string(check.to_block));
  }
  const auto owner = block_of(g.size(), blocks);
  const std::size_t k = blocks.size();
  EquitablePartition out;
  out.blocks = blocks;
  out.quotient.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    out.neighbor_counts.push_back(counts_into_blocks(g, blocks[i].front(), owner, k));
    const auto& b = out.neighbor_counts.back();
    const auto deg = std::accumulate(b.begin(), b.end(), std::size_t{0});
    for (std::size_t j = 0; j < k; ++j) out.quotient[i][j] = static_cast<std::int64_t>(b[j]);
    out.quotient[i][i] = static_cast<std::int64_t>(b[i] + deg);
  }
  return out;
}

EquitablePartition quotient_matrix(const ThetaGraph& t, const Partition& blocks) {
  return quotient_matrix(t.adjacency(), blocks);
}

SpectrumResult quotient_spectrum(const EquitablePartition& p) {
  const std::size_t k = p.quotient.size();
  SymMatrix s(k);
  for (std::size_t i = 0; i < k; ++i) {
    s(i, i) = static_cast<double>(p.quotient[i][i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) s(i, j) = std::sqrt(static_cast<double>(p.neighbor_counts[i][j] * p.neighbor_counts[j][i]));
    }
  }
  return eig_sym(s);
}

Partition theorem_partition(const GroupSpec& g) {
  const bool cyclic_family = g.family() == Family::cyclic;
  if ((!cyclic_family && g.family() != Family::dihedral) || g.params().empty()) {
    throw UnsupportedShape("theorem partition: only cyclic and dihedral groups are covered");
  }
  const std::uint64_t n = g.params().front();
  const ShapeInfo sh = classify(n);
  if (sh.shape != Shape::semiprime && sh.shape != Shape::prime_power) {
    throw UnsupportedShape(unsupported_message(g.family(), n) + " (prime n has no proper partition)");
  }
  Partition blocks(cyclic_family ? 2 : 3);
  // Rotations (or the elements of Z_n) occupy indices 0..n-1.
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t o = g.order(k);
    const bool first = sh.shape == Shape::semiprime ? o != n : (o == 1 || o == sh.p);
    blocks[first ? 0 : 1].push_back(k);
  }
  if (!cyclic_family) {
    for (std::size_t k = n; k < 2 * n; ++k) blocks[2].push_back(k);
  }
  return blocks;
}

}  // namespace theta
