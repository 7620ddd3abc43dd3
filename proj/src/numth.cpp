#include "seslab/numth.hpp"

#include <limits>
#include <numeric>

#include "seslab/errors.hpp"

namespace seslab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0) throw UsageError("factorize: n must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
      throw UsageError("ipow: overflow");
    r *= b;
  }
  return r;
}

std::uint64_t pprime_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw UsageError("pprime_part: n must be >= 1");
  if (p < 2) throw UsageError("pprime_part: p must be prime");
  while (n % p == 0) n /= p;
  return n;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

ZsigmondyResult zsigmondy_primes(std::uint64_t base, std::uint64_t exponent) {
  if (base < 2 || exponent < 2)
    throw UsageError("zsigmondy_primes: requires base >= 2 and exponent >= 2");
  ZsigmondyResult res;
  res.base = base;
  res.exponent = exponent;
  const std::uint64_t big = ipow(base, static_cast<std::uint32_t>(exponent)) - 1;
  std::uint64_t prev = 0;
  for (std::uint64_t ell : factorize(big)) {
    if (ell == prev) continue;  // distinct primes only
    prev = ell;
    bool divides_earlier = false;
    std::uint64_t pw = 1;
    for (std::uint64_t i = 1; i < exponent && !divides_earlier; ++i) {
      pw *= base;
      divides_earlier = ((pw - 1) % ell == 0);
    }
    if (!divides_earlier) res.primes.push_back(ell);
  }
  res.exceptional = res.primes.empty();
  // For even exponent 2m, a^{2m}-1 = (a^m-1)(a^m+1) and no listed prime can
  // divide a^m-1, so each must divide a^m+1.
  if (exponent % 2 == 0) {
    const std::uint64_t half_plus = ipow(base, static_cast<std::uint32_t>(exponent / 2)) + 1;
    for (std::uint64_t ell : res.primes)
      if (half_plus % ell != 0)
        throw InvariantError("zsigmondy_primes: prime does not divide base^(m/2)+1");
  }
  return res;
}

std::uint64_t minimal_k(std::uint64_t ord, std::uint64_t p) {
  if (ord == 0) throw UsageError("minimal_k: ord must be >= 1");
  if (p < 2) throw UsageError("minimal_k: p must be >= 2");
  if (ord % p == 0) throw UsageError("minimal_k: ord must be coprime to p");
  // k <= ord by Fermat-Euler, so the loop terminates.
  std::uint64_t pk_mod = 1 % ord;
  for (std::uint64_t k = 1; k <= ord; ++k) {
    pk_mod = (pk_mod * (p % ord)) % ord;
    if (pk_mod == 1 % ord) return k;
  }
  throw InvariantError("minimal_k: no k found below the Fermat-Euler bound");
}

}  // namespace seslab
