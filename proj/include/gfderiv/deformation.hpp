#pragma once

/**
 * @file deformation.hpp
 * @brief The s/q-deformed derivative on GF(p^k).
 *
 * A deformation fixes the shift M_s(f) = f^s (equivalently M_q with
 * q = x^{s-1}). The derivative of an element is the difference quotient
 *
 *     D(f) = (f^s - f) / (theta^s - theta),
 *
 * which for f = theta^n equals [n](theta) * theta^{n-1} with the q-number
 * [n] = (q^n - 1) / (q - 1). D is additive exactly when s is a Frobenius
 * power p^j (j not a multiple of k); operations that rely on linearity
 * reject other deformations with ErrorKind::NotFrobenius.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfderiv/field.hpp"

namespace gfderiv {

class Deformation {
 public:
  /// s is normalized into [2, p^k - 1]; s and s + (p^k - 1) t define the same map.
  static Deformation from_s(const FieldCtx& ctx, std::int64_t s);
  /// q = x^{q_exponent}, i.e. s = q_exponent + 1.
  static Deformation from_q_exponent(const FieldCtx& ctx, std::int64_t q_exponent);
  /// The Frobenius deformation s = p^j.
  static Deformation frobenius_power(const FieldCtx& ctx, std::uint32_t j);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t q_exponent() const noexcept { return s_ - 1; }
  bool is_frobenius() const noexcept { return frobenius_j_.has_value(); }
  /// j with s = p^j, when the deformation is Frobenius.
  std::optional<std::uint32_t> frobenius_j() const noexcept { return frobenius_j_; }
  /// Column label in q-notation: "D_x", "D_x^3", ...
  std::string label() const;
  /// Spec string accepted by parse_deformation, e.g. "q=x^7".
  std::string spec_string() const;

  /// q(theta) = theta^{s-1}.
  FieldElement q_at_theta() const;
  /// 1 / (theta^s - theta).
  const FieldElement& inverse_denominator() const noexcept { return inv_denominator_; }
  /// [n](theta) for n in [0, p^k - 2], computed at construction.
  FieldElement q_number_entry(std::uint32_t n) const;

  void require_frobenius(std::string_view operation) const;

  friend bool operator==(const Deformation& a, const Deformation& b) noexcept {
    return a.s_ == b.s_ && a.ctx_.same_field(b.ctx_);
  }

 private:
  Deformation(FieldCtx ctx, std::uint32_t s);

  FieldCtx ctx_;
  std::uint32_t s_;
  std::optional<std::uint32_t> frobenius_j_;
  FieldElement inv_denominator_;
  std::vector<std::uint32_t> q_numbers_;
};

// --- core operations (valid for every deformation) -------------------------

/// M_s(f) = f^s; zero maps to zero.
FieldElement shift(const FieldElement& f, const Deformation& d);
FieldElement derivative(const FieldElement& f, const Deformation& d);
/// [n](theta) for any integer n (reduced mod p^k - 1).
FieldElement q_number(std::int64_t n, const Deformation& d);
/// [m] evaluated at y: sum_{i<m} q(y)^i with q(y) = y^{s-1}, m a natural number.
FieldElement q_number_at(std::uint64_t m, const FieldElement& y, const Deformation& d);
/// m-fold derivative; m = 0 is the identity.
FieldElement derivative_power(const FieldElement& f, std::uint64_t m, const Deformation& d);

inline constexpr std::uint64_t kDefaultLinearityPairBudget = std::uint64_t{1} << 22;

/// Decides additivity of D by scanning every pair of elements.
bool is_linear(const Deformation& d, std::uint64_t pair_budget = kDefaultLinearityPairBudget);

// --- Frobenius-only classifications ----------------------------------------

/// {0} together with every theta^n where (p^k - 1) | n (p^j - 1); ascending by exponent, zero first.
std::vector<FieldElement> constants(const Deformation& d);

/// Exponents e with D(theta^e) = theta^e, ascending.
std::vector<std::uint32_t> find_exp(const Deformation& d);

/// Least m >= 1 with D^m(f) = f, for every nonzero f in the invertible part of
/// the Fitting decomposition.
std::map<FieldElement, std::uint32_t> classify_trig(const Deformation& d);

/// Canonical solution F of D(F) = f (minimum element value in the solution
/// coset), or nullopt when f is not in the image.
std::optional<FieldElement> antiderivative(const FieldElement& f, const Deformation& d);

/// The chain 1, J(1), J(J(1)), ... continued while antiderivatives exist.
std::vector<FieldElement> nilpotent_basis(const Deformation& d);

/// Dot product of coordinates in the nilpotent chain basis, mod p.
std::uint32_t inner_product(const FieldElement& u, const FieldElement& v, const Deformation& d);

/// [D, x.](f) = D(theta f) - theta D(f).
FieldElement mq_bracket(const FieldElement& f, const Deformation& d);
/// [D, x.]_q(f) = D(theta f) - M(theta) D(f).
FieldElement q_bracket(const FieldElement& f, const Deformation& d);
/// {D, x.}(f) = D(theta f) + theta D(f).
FieldElement hamiltonian(const FieldElement& f, const Deformation& d);
/// [n+1] + [n], the eigenvalue of the Hamiltonian on theta^n.
FieldElement energy(std::int64_t n, const Deformation& d);

/// D(f) / f.
FieldElement log_derivative(const FieldElement& f, const Deformation& d);

/// [n](exp) when h = exp^n for some n >= 0 (exp is the smallest solution of
/// find_exp), nullopt when h is not a power of exp.
std::optional<FieldElement> q_log(const FieldElement& h, const Deformation& d);

}  // namespace gfderiv
