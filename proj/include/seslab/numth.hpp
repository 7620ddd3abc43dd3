#ifndef SESLAB_NUMTH_HPP
#define SESLAB_NUMTH_HPP

#include <cstdint>
#include <vector>

namespace seslab {

bool is_prime(std::uint64_t n);

// Prime factors of n in ascending order with multiplicity; factorize(1) = {}.
// Trial division; inputs here are tiny (largest is p^{2a}-1 at desk scale).
std::vector<std::uint64_t> factorize(std::uint64_t n);

// b^e with overflow check.
std::uint64_t ipow(std::uint64_t b, std::uint32_t e);

// n with all factors of p removed.
std::uint64_t pprime_part(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Primes dividing base^exponent - 1 but none of base^i - 1 for 1 <= i < exponent.
// `exceptional` is set when the list is empty.
struct ZsigmondyResult {
  std::uint64_t base = 0;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> primes;  // sorted, distinct
  bool exceptional = false;
};

ZsigmondyResult zsigmondy_primes(std::uint64_t base, std::uint64_t exponent);

// Least k >= 1 with ord | p^k - 1.  Requires gcd(ord, p) = 1.
std::uint64_t minimal_k(std::uint64_t ord, std::uint64_t p);

}  // namespace seslab

#endif
