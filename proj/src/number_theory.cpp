#include "permcycle/number_theory.hpp"

#include <algorithm>

namespace permcycle {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.push_back({f, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(const std::vector<PrimePower>& factors) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [prime, exponent] : factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) return {};
  return divisors(factorize(n));
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

PrimePower prime_power_root(std::uint64_t n) {
  const auto factors = factorize(n);
  if (factors.size() != 1) return {0, 0};
  return factors.front();
}

}  // namespace permcycle
