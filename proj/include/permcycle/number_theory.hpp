#pragma once

#include <cstdint>
#include <vector>

namespace permcycle {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division throughout; everything here targets desk-scale integers.
bool is_prime(std::uint64_t n);

/// Prime factorization in ascending prime order. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const std::vector<PrimePower>& factors);

std::uint64_t euler_phi(std::uint64_t n);

/// n = p^k with p prime, k >= 1; returns {0, 0} otherwise.
PrimePower prime_power_root(std::uint64_t n);

}  // namespace permcycle
