#pragma once

// Text forms for naming fields and deformations:
//   field:       "p=2,k=4,poly=x^4+x+1"   (poly optional; k optional when poly is given)
//   deformation: "q=x^7" or "s=8"
// Polynomial terms are caret powers joined by '+' or '-', with an optional
// leading integer coefficient ("2x^2+x+2"); coefficients are reduced mod p.

#include <cstdint>
#include <string_view>

#include "gfderiv/deformation.hpp"
#include "gfderiv/field.hpp"

namespace gfderiv {

PolyCoeffs parse_poly(std::string_view text, std::uint32_t p);

FieldCtx parse_field(std::string_view spec, std::uint64_t max_order = kDefaultMaxFieldOrder);

Deformation parse_deformation(std::string_view spec, const FieldCtx& ctx);

}  // namespace gfderiv
