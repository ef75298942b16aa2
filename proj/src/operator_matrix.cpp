#include "gfderiv/operator_matrix.hpp"

namespace gfderiv {

namespace {

// The echelon work below runs on coefficient vectors with the highest power
// of theta first, so pivots land on the highest-degree coordinate.
linalg::Matrix high_first_matrix(const Deformation& d) {
  const auto& ctx = d.ctx();
  const std::uint32_t k = ctx.degree();
  std::vector<linalg::Vec> columns;
  for (std::uint32_t c = 0; c < k; ++c) {
    const auto basis_vector = ctx.theta_pow(k - 1 - c);
    columns.push_back(derivative(basis_vector, d).coeffs());
  }
  return linalg::Matrix::from_columns(ctx.characteristic(), columns);
}

std::vector<FieldElement> to_elements(const FieldCtx& ctx, const std::vector<linalg::Vec>& vs) {
  std::vector<FieldElement> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(ctx.from_coeffs(v));
  return out;
}

std::vector<linalg::Vec> to_vectors(const std::vector<FieldElement>& es) {
  std::vector<linalg::Vec> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(e.coeffs());
  return out;
}

struct Solver {
  linalg::Matrix matrix;
  std::vector<linalg::Vec> kernel;

  explicit Solver(const Deformation& d) : matrix(high_first_matrix(d)), kernel(linalg::kernel(matrix)) {}

  std::optional<FieldElement> solve(const FieldElement& f) const {
    auto x = linalg::solve(matrix, f.coeffs());
    if (!x) return std::nullopt;
    return f.ctx().from_coeffs(linalg::reduce_against(matrix.modulus(), std::move(*x), kernel));
  }
};

std::vector<FieldElement> build_chain(const Deformation& d, const Solver& solver) {
  std::vector<FieldElement> chain{d.ctx().one()};
  // The chain is linearly independent, so it cannot exceed k members.
  while (chain.size() < d.ctx().degree()) {
    auto next = solver.solve(chain.back());
    if (!next) break;
    chain.push_back(std::move(*next));
  }
  return chain;
}

}  // namespace

OperatorMatrix operator_matrix(const Deformation& d) {
  d.require_frobenius("operator_matrix");
  const auto& ctx = d.ctx();
  const auto p = ctx.characteristic();
  const std::uint32_t k = ctx.degree();

  std::vector<linalg::Vec> columns;
  for (std::uint32_t c = 0; c < k; ++c) columns.push_back(derivative(ctx.theta_pow(c), d).coords());

  const Solver solver(d);
  const auto high_k = solver.matrix.power(k);

  OperatorMatrix out{
      .entries = linalg::Matrix::from_columns(p, columns),
      .kernel_basis = to_elements(ctx, solver.kernel),
      .image_basis = to_elements(ctx, linalg::image(solver.matrix)),
      .nilpotent_basis = build_chain(d, solver),
      .generalized_kernel_basis = to_elements(ctx, linalg::kernel(high_k)),
      .periodic_part_basis = to_elements(ctx, linalg::image(high_k)),
  };
  out.chain_spans_generalized_kernel = out.nilpotent_basis.size() == out.generalized_kernel_basis.size();
  return out;
}

std::optional<FieldElement> antiderivative(const FieldElement& f, const Deformation& d) {
  d.require_frobenius("antiderivative");
  if (!f.ctx().same_field(d.ctx())) throw Error(ErrorKind::MixedFields, "element and deformation belong to different fields");
  return Solver(d).solve(f);
}

std::vector<FieldElement> nilpotent_basis(const Deformation& d) {
  d.require_frobenius("nilpotent_basis");
  return build_chain(d, Solver(d));
}

std::uint32_t inner_product(const FieldElement& u, const FieldElement& v, const Deformation& d) {
  d.require_frobenius("inner_product");
  const auto chain = to_vectors(nilpotent_basis(d));
  const auto p = d.ctx().characteristic();
  const auto cu = linalg::coordinates(p, chain, u.coeffs());
  const auto cv = linalg::coordinates(p, chain, v.coeffs());
  if (!cu) throw Error(ErrorKind::NotInSubspace, u.to_string() + " is outside the nilpotent chain span");
  if (!cv) throw Error(ErrorKind::NotInSubspace, v.to_string() + " is outside the nilpotent chain span");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < cu->size(); ++i) acc = (acc + std::uint64_t{(*cu)[i]} * (*cv)[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace gfderiv
