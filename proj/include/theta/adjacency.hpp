#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace theta {

/// Dense symmetric adjacency of a simple undirected graph, one packed bit row
/// per vertex. No self-loops.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0), degree_(n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  /// Adds or removes edge {i, j}; ignored when i == j.
  void set(std::size_t i, std::size_t j, bool on) noexcept {
    if (i == j || test(i, j) == on) return;
    flip(i, j);
    flip(j, i);
    const std::size_t delta = on ? 1 : static_cast<std::size_t>(-1);
    degree_[i] += delta;
    degree_[j] += delta;
  }

  std::size_t degree(std::size_t i) const noexcept { return degree_[i]; }
  const std::vector<std::size_t>& degrees() const noexcept { return degree_; }

  const std::uint64_t* row(std::size_t i) const noexcept { return bits_.data() + i * words_; }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    out.reserve(degree_[i]);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t word = bits_[i * words_ + w]; word != 0; word &= word - 1) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      }
    }
    return out;
  }

  std::size_t edge_count() const noexcept {
    std::size_t sum = 0;
    for (auto d : degree_) sum += d;
    return sum / 2;
  }

  /// Edges (i, j) with i < j in ascending lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j : neighbors(i)) {
        if (j > i) out.emplace_back(i, j);
      }
    }
    return out;
  }

  static AdjacencyMatrix complete(std::size_t n) {
    AdjacencyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, true);
    return m;
  }

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void flip(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> degree_;
};

}  // namespace theta
