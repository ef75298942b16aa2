#pragma once

/**
 * @file int_deriv.hpp
 * @brief The classical arithmetic derivative on positive integers.
 *
 * With n = prod p_i^{k_i}, D(n) = sum_i k_i * (n / p_i); D(1) = 0, D(p) = 1
 * for primes, and D(ab) = a D(b) + b D(a). Arithmetic is exact; results that
 * do not fit in 64 bits raise ErrorKind::Overflow.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "gfderiv/error.hpp"

namespace gfderiv {

inline constexpr std::uint64_t kDefaultIntBound = 0x7fffffffffffffffull;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

Factorization factorize(std::uint64_t n, std::uint64_t bound = kDefaultIntBound);

std::uint64_t arith_derivative(std::uint64_t n, std::uint64_t bound = kDefaultIntBound);

}  // namespace gfderiv
