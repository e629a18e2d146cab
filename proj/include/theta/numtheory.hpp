#pragma once

#include <cstdint>
#include <vector>

namespace theta::numtheory {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime.
using Factorization = std::vector<PrimePower>;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n) noexcept;

/// True for 1 and for primes: the adjacency predicate of the coprime graph.
bool is_one_or_prime(std::uint64_t n) noexcept;

/// Trial division. Throws DomainError for n < 2.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace theta::numtheory
