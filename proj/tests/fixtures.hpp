#pragma once

#include <vector>

#include "gfderiv/deformation.hpp"
#include "gfderiv/field.hpp"

namespace fixtures {

/// GF(16) with theta^4 = theta + 1.
inline gfderiv::FieldCtx gf16() { return gfderiv::FieldCtx::make(2, 4, gfderiv::PolyCoeffs{1, 0, 0, 1, 1}); }

inline gfderiv::FieldElement th(const gfderiv::FieldCtx& ctx, std::int64_t n) { return ctx.theta_pow(n); }

inline gfderiv::FieldElement el(const gfderiv::FieldCtx& ctx, std::uint32_t value) { return ctx.from_value(value); }

/// Parses a rendered digit string such as "0110".
inline gfderiv::FieldElement bits(const gfderiv::FieldCtx& ctx, const char* digits) {
  std::vector<std::uint32_t> c;
  for (const char* d = digits; *d; ++d) c.push_back(static_cast<std::uint32_t>(*d - '0'));
  return ctx.from_coeffs(c);
}

/// GF(4), GF(8), GF(9), GF(16), GF(27) with default polynomials (GF(16) as above).
inline std::vector<gfderiv::FieldCtx> small_fields() {
  return {gfderiv::FieldCtx::make(2, 2), gfderiv::FieldCtx::make(2, 3), gfderiv::FieldCtx::make(3, 2), gf16(),
          gfderiv::FieldCtx::make(3, 3)};
}

inline std::vector<gfderiv::Deformation> frobenius_deformations(const gfderiv::FieldCtx& ctx) {
  std::vector<gfderiv::Deformation> out;
  for (std::uint32_t j = 1; j < ctx.degree(); ++j) out.push_back(gfderiv::Deformation::frobenius_power(ctx, j));
  return out;
}

}  // namespace fixtures
