#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/graph.hpp"

namespace theta {

/// Dense symmetric real matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  bool is_symmetric(double tol = 0.0) const noexcept;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Exact quadratic number (a + s * sqrt(b)) / d with d in {1, 2}.
/// Canonical: b is not a perfect square when s != 0, s == 0 implies b == 0,
/// and d == 2 only when the value is not an integer combination.
class Surd {
 public:
  Surd() = default;
  /// a + s * sqrt(b) / d, canonicalised.
  Surd(std::int64_t a, int s, std::uint64_t b, std::int64_t d = 1);
  static Surd integer(std::int64_t a) { return Surd(a, 0, 0, 1); }

  std::int64_t rational() const noexcept { return a_; }
  int sign() const noexcept { return s_; }
  std::uint64_t radicand() const noexcept { return b_; }
  std::int64_t denominator() const noexcept { return d_; }
  bool is_integer() const noexcept { return s_ == 0 && d_ == 1; }

  double value() const noexcept;
  /// "12", "6+2*sqrt(3)", "(13-sqrt(153))/2".
  std::string display() const;

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  std::int64_t a_ = 0;
  int s_ = 0;
  std::uint64_t b_ = 0;
  std::int64_t d_ = 1;
};

enum class SpectrumKind { closed_form, numeric };

std::string_view to_string(SpectrumKind k) noexcept;

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
  std::optional<Surd> exact;  // closed-form entries only

  std::string display() const;
};

struct SpectrumResult {
  std::vector<SpectrumEntry> entries;  // descending by value
  SpectrumKind kind = SpectrumKind::numeric;

  std::size_t dimension() const noexcept;
  double weighted_sum() const noexcept;
  /// Values repeated by multiplicity, descending.
  std::vector<double> flattened() const;
};

/// Signless Laplacian Q = D + A.
SymMatrix build_Q(const AdjacencyMatrix& g);
SymMatrix build_Q(const ThetaGraph& t);

/// Cyclic Jacobi until the off-diagonal Frobenius norm falls below
/// tol * ||m||_F. Eigenvalues within 1e-7 * max(1, ||m||_F) are grouped.
/// Throws DomainError for non-symmetric input.
SpectrumResult eig_sym(const SymMatrix& m, double tol = 1e-14);

/// Exact spectrum of Q(Theta(Z_n)) or Q(Theta(D_n)) for n = p, pq or p^m.
/// Throws UnsupportedShape for any other n.
SpectrumResult closed_form_spectrum(Family family, std::uint64_t n);

/// True when every (value, multiplicity) of `sub` can be matched within tol
/// against distinct eigenvalues of `full`.
bool spectrum_contains(const SpectrumResult& sub, const SpectrumResult& full, double tol);

/// Same dimension and elementwise agreement within tol after sorting.
bool spectra_equal(const SpectrumResult& a, const SpectrumResult& b, double tol);

using Partition = std::vector<std::vector<std::size_t>>;

struct EquitabilityCheck {
  bool equitable;
  /// On failure: two vertices of one block with different counts into some block.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t from_block = 0;
  std::size_t to_block = 0;
};

/// Throws ValidationError when blocks do not partition the vertex set.
EquitabilityCheck is_equitable(const AdjacencyMatrix& g, const Partition& blocks);
EquitabilityCheck is_equitable(const ThetaGraph& t, const Partition& blocks);

struct EquitablePartition {
  Partition blocks;
  /// neighbor_counts[i][j]: neighbours any vertex of block i has in block j.
  std::vector<std::vector<std::size_t>> neighbor_counts;
  /// q_ij = b_ij off the diagonal, q_ii = b_ii + sum_j b_ij.
  std::vector<std::vector<std::int64_t>> quotient;
};

/// Throws ValidationError naming a witness pair when the partition is not equitable.
EquitablePartition quotient_matrix(const AdjacencyMatrix& g, const Partition& blocks);
EquitablePartition quotient_matrix(const ThetaGraph& t, const Partition& blocks);

/// Eigenvalues of the (generally non-symmetric) quotient via its symmetrised
/// form sqrt(|V_i| / |V_j|) * q_ij.
SpectrumResult quotient_spectrum(const EquitablePartition& p);

/// The partition used by the closed-form derivation for Z_n or D_n with
/// n = pq or p^m (m >= 2). Throws UnsupportedShape otherwise.
Partition theorem_partition(const GroupSpec& g);

}  // namespace theta
