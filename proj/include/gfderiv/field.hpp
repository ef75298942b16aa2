#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^k) with full discrete-log tables.
 *
 * The field is GF(p)[x] modulo a monic primitive polynomial of degree k.
 * The class of x is the generator theta, so every nonzero element is
 * theta^n for a unique n in [0, p^k - 2]; the zero element has the
 * dedicated exponent -inf.
 *
 * Elements are stored packed as value = c_0 + c_1 p + ... + c_{k-1} p^{k-1},
 * where c_i is the coefficient of theta^i. Ordering elements by value is
 * the same as ordering the rendered digit strings c_{k-1}...c_0.
 *
 * Tables are sized for desk-scale fields (default bound 2^20 elements).
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfderiv/error.hpp"

namespace gfderiv {

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

/// Discrete logarithm to base theta, or -inf for the zero element.
class DiscreteLog {
 public:
  static constexpr DiscreteLog neg_infinity() noexcept { return DiscreteLog(); }
  constexpr explicit DiscreteLog(std::uint32_t exponent) noexcept : exponent_(exponent) {}

  constexpr bool is_neg_infinity() const noexcept { return !exponent_.has_value(); }
  std::uint32_t exponent() const;
  std::string to_string() const;

  friend constexpr bool operator==(const DiscreteLog&, const DiscreteLog&) = default;

 private:
  constexpr DiscreteLog() noexcept = default;
  std::optional<std::uint32_t> exponent_;
};

/// Polynomial over GF(p), coefficient of the highest power first.
using PolyCoeffs = std::vector<std::uint32_t>;

namespace detail {
struct FieldData;
}

class FieldElement;

/// Immutable description of GF(p^k); cheap to copy and safe to share between threads.
class FieldCtx {
 public:
  /// Builds the field. When @p poly is omitted the lexicographically smallest
  /// primitive polynomial is used. @p poly is monic, highest power first
  /// (k + 1 entries).
  static FieldCtx make(std::uint32_t p, std::uint32_t k, std::optional<PolyCoeffs> poly = std::nullopt,
                       std::uint64_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// p^k - 1, the order of the multiplicative group.
  std::uint32_t group_order() const noexcept;
  const PolyCoeffs& poly() const noexcept;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement theta() const;
  /// theta^n for any integer n (reduced mod p^k - 1).
  FieldElement theta_pow(std::int64_t n) const;
  FieldElement from_value(std::uint32_t value) const;
  /// Coefficients of theta^{k-1} first, as rendered.
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Element with coefficient vector indexed by power of theta (c_0 first).
  FieldElement from_coords(std::span<const std::uint32_t> coords) const;
  /// Every element, ascending by value (0, 1, ..., p^k - 1).
  std::vector<FieldElement> elements() const;

  /// Canonical spec string, e.g. "p=2,k=4,poly=x^4+x+1".
  std::string spec_string() const;

  bool same_field(const FieldCtx& other) const noexcept;

  const detail::FieldData& data() const noexcept { return *data_; }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(FieldCtx ctx, std::uint32_t value);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  DiscreteLog dlog() const;
  /// Coefficient of theta^{k-1} first.
  std::vector<std::uint32_t> coeffs() const;
  /// Coefficient of theta^0 first; coordinates in the power basis.
  std::vector<std::uint32_t> coords() const;
  std::string to_string() const;

  FieldElement inv() const;
  /// Negative exponents are allowed for nonzero elements.
  FieldElement pow(std::int64_t m) const;
  /// Multiplies by the residue c mod p.
  FieldElement scale(std::uint32_t c) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  /// Equality and ordering compare values; elements of different fields are never equal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept;

 private:
  void require_same_field(const FieldElement& other) const;

  FieldCtx ctx_;
  std::uint32_t value_;
};

// Free-function spellings of the field operations.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::int64_t m);
DiscreteLog dlog(const FieldElement& a);

bool is_prime(std::uint64_t n) noexcept;

/// Lexicographically smallest (highest-degree coefficient compared first)
/// monic primitive polynomial of degree k over GF(p).
PolyCoeffs find_primitive_poly(std::uint32_t p, std::uint32_t k, std::uint64_t max_order = kDefaultMaxFieldOrder);

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree at most deg/2.
bool is_irreducible(std::uint32_t p, const PolyCoeffs& poly);

/// True when the class of x has multiplicative order p^k - 1 modulo @p poly.
bool is_primitive(std::uint32_t p, const PolyCoeffs& poly);

/// Renders a polynomial as "x^4+x+1" (coefficient shown only when not 1).
std::string poly_to_string(const PolyCoeffs& poly);

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t order = 0;
  PolyCoeffs poly;
  /// exp_table[n] = value of theta^n, n in [0, order - 2].
  std::vector<std::uint32_t> exp_table;
  /// log_table[value] = n, or kNoLog for zero.
  std::vector<std::uint32_t> log_table;
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
};

}  // namespace detail

}  // namespace gfderiv
