#pragma once

#include <vector>

#include "gfderiv/deformation.hpp"
#include "gfderiv/gfp_linalg.hpp"

namespace gfderiv {

/// D as a k x k matrix over GF(p) in the basis {1, theta, ..., theta^{k-1}},
/// together with its kernel, image and Fitting decomposition.
///
/// Subspace bases are kept in reduced echelon form with pivots at the
/// highest-degree coordinate first. Reducing a vector against such a basis
/// yields the smallest element value in its coset.
struct OperatorMatrix {
  linalg::Matrix entries;
  std::vector<FieldElement> kernel_basis;
  std::vector<FieldElement> image_basis;
  /// Jordan chain 1, J(1), J(J(1)), ... (see nilpotent_basis()).
  std::vector<FieldElement> nilpotent_basis;
  /// ker D^k: every element annihilated by some power of D.
  std::vector<FieldElement> generalized_kernel_basis;
  /// im D^k: the invariant complement on which D is invertible.
  std::vector<FieldElement> periodic_part_basis;
  /// False when the chain is strictly smaller than the generalized kernel
  /// (GF(16), q = x^3 is such a case).
  bool chain_spans_generalized_kernel = true;
};

OperatorMatrix operator_matrix(const Deformation& d);

}  // namespace gfderiv
