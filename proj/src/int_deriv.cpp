#include "gfderiv/int_deriv.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gfderiv {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Brent's variant of Pollard rho; n is odd, composite, and has no small factors.
std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = 2;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t saved = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t done = 0; done < r && g == 1; done += kBatch) {
        saved = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - done); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        saved = step(saved);
        g = std::gcd(x > saved ? x - saved : saved - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = find_factor(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t bound) {
  if (n < 1 || n > bound) {
    throw Error(ErrorKind::OutOfRange, std::to_string(n) + " is outside [1, " + std::to_string(bound) + "]");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  split(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization out;
  for (auto p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().multiplicity;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::uint64_t arith_derivative(std::uint64_t n, std::uint64_t bound) {
  const auto factors = factorize(n, bound);
  std::uint64_t total = 0;
  for (const auto& [p, k] : factors) {
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(n / p, std::uint64_t{k}, &term) || __builtin_add_overflow(total, term, &total)) {
      throw Error(ErrorKind::Overflow, "D(" + std::to_string(n) + ") does not fit in 64 bits");
    }
  }
  return total;
}

}  // namespace gfderiv
