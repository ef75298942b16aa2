#include "gfderiv/deformation.hpp"

#include "gfderiv/operator_matrix.hpp"

namespace gfderiv {

namespace {

void require_same(const FieldElement& f, const Deformation& d) {
  if (!f.ctx().same_field(d.ctx())) throw Error(ErrorKind::MixedFields, "element and deformation belong to different fields");
}

std::uint32_t reduce_exponent(std::int64_t n, std::uint32_t group) {
  std::int64_t r = n % static_cast<std::int64_t>(group);
  if (r < 0) r += group;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Deformation::Deformation(FieldCtx ctx, std::uint32_t s) : ctx_(std::move(ctx)), s_(s), inv_denominator_(ctx_.zero()) {
  const auto theta = ctx_.theta();
  const auto denominator = theta.pow(s_) - theta;
  if (denominator.is_zero()) {
    throw Error(ErrorKind::DegenerateDeformation,
                "theta^s = theta for s=" + std::to_string(s_) + " in GF(" + std::to_string(ctx_.order()) + "); the derivative is undefined");
  }
  inv_denominator_ = denominator.inv();

  std::uint64_t power = 1;
  for (std::uint32_t j = 1; j < ctx_.degree(); ++j) {
    power *= ctx_.characteristic();
    if (power == s_) {
      frobenius_j_ = j;
      break;
    }
  }

  const auto q = q_at_theta();
  const auto inv_q_minus_one = (q - ctx_.one()).inv();
  const std::uint32_t group = ctx_.group_order();
  q_numbers_.resize(group);
  for (std::uint32_t n = 0; n < group; ++n) q_numbers_[n] = ((q.pow(n) - ctx_.one()) * inv_q_minus_one).value();
}

Deformation Deformation::from_s(const FieldCtx& ctx, std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "s must be a positive integer, got " + std::to_string(s));
  const std::uint32_t group = ctx.group_order();
  std::uint32_t normalized = reduce_exponent(s, group);
  if (normalized == 0) normalized = group;
  return Deformation(ctx, normalized);
}

Deformation Deformation::from_q_exponent(const FieldCtx& ctx, std::int64_t q_exponent) {
  if (q_exponent < 0) throw Error(ErrorKind::InvalidArgument, "q exponent must be non-negative");
  return from_s(ctx, q_exponent + 1);
}

Deformation Deformation::frobenius_power(const FieldCtx& ctx, std::uint32_t j) {
  std::int64_t s = 1;
  for (std::uint32_t i = 0; i < j % ctx.degree(); ++i) s *= ctx.characteristic();
  return from_s(ctx, s);
}

std::string Deformation::label() const {
  const auto e = q_exponent();
  return e == 1 ? std::string("D_x") : "D_x^" + std::to_string(e);
}

std::string Deformation::spec_string() const {
  const auto e = q_exponent();
  return e == 1 ? std::string("q=x") : "q=x^" + std::to_string(e);
}

FieldElement Deformation::q_at_theta() const { return ctx_.theta_pow(q_exponent()); }

FieldElement Deformation::q_number_entry(std::uint32_t n) const { return FieldElement(ctx_, q_numbers_.at(n)); }

void Deformation::require_frobenius(std::string_view operation) const {
  if (!is_frobenius()) {
    throw Error(ErrorKind::NotFrobenius, std::string(operation) + " requires a Frobenius deformation s = p^j; s=" + std::to_string(s_) +
                                             " is not one (use the table command for general s)");
  }
}

// ---------------------------------------------------------------------------

FieldElement shift(const FieldElement& f, const Deformation& d) {
  require_same(f, d);
  if (f.is_zero()) return f;
  return f.pow(d.s());
}

FieldElement derivative(const FieldElement& f, const Deformation& d) {
  require_same(f, d);
  if (f.is_zero()) return f;
  return (f.pow(d.s()) - f) * d.inverse_denominator();
}

FieldElement q_number(std::int64_t n, const Deformation& d) {
  return d.q_number_entry(reduce_exponent(n, d.ctx().group_order()));
}

FieldElement q_number_at(std::uint64_t m, const FieldElement& y, const Deformation& d) {
  require_same(y, d);
  const auto& ctx = d.ctx();
  if (m == 0) return ctx.zero();
  if (y.is_zero()) return ctx.one();  // q(0) = 0, so only the q^0 term survives
  const auto q = y.pow(d.q_exponent());
  if (q.is_one()) return ctx.one().scale(static_cast<std::uint32_t>(m % ctx.characteristic()));
  const auto qm = q.pow(static_cast<std::int64_t>(m % ctx.group_order()));
  return (qm - ctx.one()) / (q - ctx.one());
}

FieldElement derivative_power(const FieldElement& f, std::uint64_t m, const Deformation& d) {
  require_same(f, d);
  auto out = f;
  for (std::uint64_t i = 0; i < m && !out.is_zero(); ++i) out = derivative(out, d);
  return out;
}

bool is_linear(const Deformation& d, std::uint64_t pair_budget) {
  const auto& ctx = d.ctx();
  const std::uint64_t order = ctx.order();
  if (order * order > pair_budget) {
    throw Error(ErrorKind::FieldTooLargeForExhaustive,
                "additivity scan over GF(" + std::to_string(order) + ") exceeds the pair budget " + std::to_string(pair_budget));
  }
  std::vector<std::uint32_t> image(order);
  for (std::uint32_t v = 0; v < order; ++v) image[v] = derivative(ctx.from_value(v), d).value();
  const auto& data = ctx.data();
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = a; b < order; ++b) {
      if (image[data.add(a, b)] != data.add(image[a], image[b])) return false;
    }
  }
  return true;
}

std::vector<FieldElement> constants(const Deformation& d) {
  d.require_frobenius("constants");
  const auto& ctx = d.ctx();
  const std::uint64_t group = ctx.group_order();
  std::uint64_t pj_minus_one = 1;
  for (std::uint32_t i = 0; i < *d.frobenius_j(); ++i) pj_minus_one *= ctx.characteristic();
  pj_minus_one -= 1;

  std::vector<FieldElement> out{ctx.zero()};
  for (std::uint64_t n = 0; n < group; ++n) {
    const bool criterion = (n * pj_minus_one) % group == 0;
    const auto element = ctx.theta_pow(static_cast<std::int64_t>(n));
    const bool annihilated = derivative(element, d).is_zero();
    if (criterion != annihilated) {
      throw std::logic_error("constants criterion disagrees with the derivative at theta^" + std::to_string(n));
    }
    if (criterion) out.push_back(element);
  }
  return out;
}

std::vector<std::uint32_t> find_exp(const Deformation& d) {
  d.require_frobenius("find_exp");
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < d.ctx().group_order(); ++e) {
    const auto x = d.ctx().theta_pow(e);
    if (derivative(x, d) == x) out.push_back(e);
  }
  return out;
}

std::map<FieldElement, std::uint32_t> classify_trig(const Deformation& d) {
  d.require_frobenius("classify_trig");
  const auto op = operator_matrix(d);
  const auto& ctx = d.ctx();
  const auto& basis = op.periodic_part_basis;
  std::map<FieldElement, std::uint32_t> out;

  // Enumerate the periodic subspace as all combinations of its basis.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) count *= ctx.characteristic();
  for (std::uint64_t t = 1; t < count; ++t) {
    auto f = ctx.zero();
    std::uint64_t rest = t;
    for (const auto& b : basis) {
      f += b.scale(static_cast<std::uint32_t>(rest % ctx.characteristic()));
      rest /= ctx.characteristic();
    }
    auto g = derivative(f, d);
    std::uint32_t period = 1;
    while (g != f) {
      g = derivative(g, d);
      ++period;
      if (period > count) throw std::logic_error("derivative is not invertible on the periodic part");
    }
    out.emplace(f, period);
  }
  return out;
}

FieldElement mq_bracket(const FieldElement& f, const Deformation& d) {
  d.require_frobenius("mq_bracket");
  const auto theta = d.ctx().theta();
  return derivative(theta * f, d) - theta * derivative(f, d);
}

FieldElement q_bracket(const FieldElement& f, const Deformation& d) {
  d.require_frobenius("q_bracket");
  const auto theta = d.ctx().theta();
  return derivative(theta * f, d) - shift(theta, d) * derivative(f, d);
}

FieldElement hamiltonian(const FieldElement& f, const Deformation& d) {
  d.require_frobenius("hamiltonian");
  const auto theta = d.ctx().theta();
  return derivative(theta * f, d) + theta * derivative(f, d);
}

FieldElement energy(std::int64_t n, const Deformation& d) {
  d.require_frobenius("energy");
  return q_number(n + 1, d) + q_number(n, d);
}

FieldElement log_derivative(const FieldElement& f, const Deformation& d) {
  d.require_frobenius("log_derivative");
  require_same(f, d);
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "logarithmic derivative of zero");
  return derivative(f, d) / f;
}

std::optional<FieldElement> q_log(const FieldElement& h, const Deformation& d) {
  d.require_frobenius("q_log");
  require_same(h, d);
  const auto exps = find_exp(d);
  if (exps.empty()) throw Error(ErrorKind::NoExpFunction, "no element satisfies D(x) = x for " + d.label());
  const auto exp = d.ctx().theta_pow(exps.front());
  auto power = d.ctx().one();
  std::uint64_t n = 0;
  do {
    if (power == h) return q_number_at(n, exp, d);
    power *= exp;
    ++n;
  } while (!power.is_one());
  return std::nullopt;
}

}  // namespace gfderiv
