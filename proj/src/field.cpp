#include "gfderiv/field.hpp"

#include <algorithm>
#include <sstream>

namespace gfderiv {

namespace {

// Polynomials over GF(p) in this file are low-first (index = power of x).
using LowPoly = std::vector<std::uint32_t>;

LowPoly to_low(const PolyCoeffs& high) { return LowPoly(high.rbegin(), high.rend()); }

void trim(LowPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0: a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b (b nonzero, trimmed).
LowPoly poly_mod(LowPoly a, const LowPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::optional<std::uint64_t> checked_order(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > max_order) return std::nullopt;
  }
  return order;
}

void validate_pk(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  if (max_order > 0xffffffffull) max_order = 0xffffffffull;
  if (!checked_order(p, k, max_order)) {
    throw Error(ErrorKind::FieldTooLarge,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the field bound " + std::to_string(max_order));
  }
}

// Multiplies the packed coordinate vector by x modulo poly (low-first, monic,
// size k+1). Coordinates are updated in place.
void times_x(std::vector<std::uint32_t>& c, const LowPoly& poly, std::uint32_t p) {
  const std::size_t k = c.size();
  const std::uint32_t top = c[k - 1];
  for (std::size_t i = k - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t sub = std::uint64_t{top} * poly[i] % p;
      c[i] = static_cast<std::uint32_t>((c[i] + p - sub) % p);
    }
  }
}

std::uint32_t pack(const std::vector<std::uint32_t>& coords, std::uint32_t p) {
  std::uint32_t value = 0;
  for (std::size_t i = coords.size(); i-- > 0;) value = value * p + coords[i];
  return value;
}

// Walks powers of x; returns the exponent table when x has full order.
std::optional<std::vector<std::uint32_t>> power_orbit(std::uint32_t p, const PolyCoeffs& poly) {
  const auto k = static_cast<std::uint32_t>(poly.size() - 1);
  const LowPoly low = to_low(poly);
  std::uint32_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) order *= p;
  const std::uint32_t group = order - 1;

  std::vector<std::uint32_t> coords(k, 0);
  coords[0] = 1;
  std::vector<std::uint32_t> table;
  table.reserve(group);
  for (std::uint32_t n = 0; n < group; ++n) {
    const std::uint32_t v = pack(coords, p);
    if (v == 0 || (n > 0 && v == 1)) return std::nullopt;
    table.push_back(v);
    times_x(coords, low, p);
  }
  if (pack(coords, p) != 1) return std::nullopt;
  return table;
}

}  // namespace

std::uint32_t DiscreteLog::exponent() const {
  if (!exponent_) throw Error(ErrorKind::InvalidArgument, "the zero element has exponent -inf");
  return *exponent_;
}

std::string DiscreteLog::to_string() const { return exponent_ ? std::to_string(*exponent_) : std::string("-inf"); }

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const PolyCoeffs& poly) {
  LowPoly f = to_low(poly);
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      LowPoly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool is_primitive(std::uint32_t p, const PolyCoeffs& poly) {
  if (poly.size() < 2 || poly.front() != 1) return false;
  return power_orbit(p, poly).has_value();
}

PolyCoeffs find_primitive_poly(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  validate_pk(p, k, max_order);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // t enumerates (c_{k-1}, ..., c_0) with c_{k-1} as the most significant digit.
  for (std::uint64_t t = 0; t < count; ++t) {
    PolyCoeffs poly(k + 1, 0);
    poly[0] = 1;
    std::uint64_t rest = t;
    for (std::uint32_t i = k; i >= 1; --i) {
      poly[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (poly[k] == 0) continue;
    if (is_primitive(p, poly)) return poly;
  }
  // Primitive polynomials exist for every p, k.
  throw Error(ErrorKind::NotPrimitive, "no primitive polynomial found");
}

std::string poly_to_string(const PolyCoeffs& poly) {
  std::string out;
  const std::size_t deg = poly.empty() ? 0 : poly.size() - 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const std::uint32_t c = poly[i];
    const std::size_t power = deg - i;
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || power == 0) out += std::to_string(c);
    if (power >= 1) out += 'x';
    if (power >= 2) out += '^' + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// FieldData

std::uint32_t detail::FieldData::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p == 2) return a ^ b;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t da = a % p;
    const std::uint32_t db = b % p;
    a /= p;
    b /= p;
    result += ((da + db) % p) * place;
    place *= p;
  }
  return result;
}

std::uint32_t detail::FieldData::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p == 2) return a ^ b;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t da = a % p;
    const std::uint32_t db = b % p;
    a /= p;
    b /= p;
    result += ((da + p - db) % p) * place;
    place *= p;
  }
  return result;
}

std::uint32_t detail::FieldData::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t group = order - 1;
  const std::uint64_t n = (std::uint64_t{log_table[a]} + log_table[b]) % group;
  return exp_table[n];
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t k, std::optional<PolyCoeffs> poly, std::uint64_t max_order) {
  validate_pk(p, k, max_order);
  PolyCoeffs chosen;
  if (poly) {
    if (poly->size() != std::size_t{k} + 1 || poly->front() != 1) {
      throw Error(ErrorKind::InvalidArgument, "field polynomial must be monic of degree " + std::to_string(k));
    }
    for (auto c : *poly) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "polynomial coefficient out of range mod p");
    }
    chosen = *poly;
  } else {
    chosen = find_primitive_poly(p, k, max_order);
  }

  auto table = power_orbit(p, chosen);
  if (!table) {
    if (!is_irreducible(p, chosen)) {
      throw Error(ErrorKind::NotIrreducible, poly_to_string(chosen) + " is reducible over GF(" + std::to_string(p) + ")");
    }
    throw Error(ErrorKind::NotPrimitive, "x does not generate the multiplicative group modulo " + poly_to_string(chosen));
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->order = static_cast<std::uint32_t>(table->size() + 1);
  data->poly = std::move(chosen);
  data->exp_table = std::move(*table);
  data->log_table.assign(data->order, detail::FieldData::kNoLog);
  for (std::uint32_t n = 0; n < data->exp_table.size(); ++n) data->log_table[data->exp_table[n]] = n;
  return FieldCtx(std::move(data));
}

std::uint32_t FieldCtx::characteristic() const noexcept { return data_->p; }
std::uint32_t FieldCtx::degree() const noexcept { return data_->k; }
std::uint32_t FieldCtx::order() const noexcept { return data_->order; }
std::uint32_t FieldCtx::group_order() const noexcept { return data_->order - 1; }
const PolyCoeffs& FieldCtx::poly() const noexcept { return data_->poly; }

FieldElement FieldCtx::zero() const { return FieldElement(*this, 0); }
FieldElement FieldCtx::one() const { return FieldElement(*this, 1); }
FieldElement FieldCtx::theta() const { return theta_pow(1); }

FieldElement FieldCtx::theta_pow(std::int64_t n) const {
  const std::int64_t group = group_order();
  std::int64_t r = n % group;
  if (r < 0) r += group;
  return FieldElement(*this, data_->exp_table[static_cast<std::size_t>(r)]);
}

FieldElement FieldCtx::from_value(std::uint32_t value) const {
  if (value >= order()) throw Error(ErrorKind::InvalidArgument, "element value out of range");
  return FieldElement(*this, value);
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != degree()) throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(degree()) + " coefficients");
  std::uint32_t value = 0;
  for (auto c : coeffs) {
    if (c >= characteristic()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range mod p");
    value = value * characteristic() + c;
  }
  return FieldElement(*this, value);
}

FieldElement FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != degree()) throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(degree()) + " coordinates");
  std::vector<std::uint32_t> high(coords.rbegin(), coords.rend());
  return from_coeffs(high);
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (std::uint32_t v = 0; v < order(); ++v) out.emplace_back(*this, v);
  return out;
}

std::string FieldCtx::spec_string() const {
  return "p=" + std::to_string(characteristic()) + ",k=" + std::to_string(degree()) + ",poly=" + poly_to_string(poly());
}

bool FieldCtx::same_field(const FieldCtx& other) const noexcept {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->k == other.data_->k && data_->poly == other.data_->poly);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldCtx ctx, std::uint32_t value) : ctx_(std::move(ctx)), value_(value) {}

DiscreteLog FieldElement::dlog() const {
  if (value_ == 0) return DiscreteLog::neg_infinity();
  return DiscreteLog(ctx_.data().log_table[value_]);
}

std::vector<std::uint32_t> FieldElement::coords() const {
  const auto p = ctx_.characteristic();
  std::vector<std::uint32_t> out(ctx_.degree());
  std::uint32_t v = value_;
  for (auto& c : out) {
    c = v % p;
    v /= p;
  }
  return out;
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  auto c = coords();
  std::reverse(c.begin(), c.end());
  return c;
}

std::string FieldElement::to_string() const {
  const auto digits = coeffs();
  std::ostringstream out;
  if (ctx_.characteristic() <= 10) {
    for (auto d : digits) out << d;
  } else {
    out << '[';
    for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
    out << ']';
  }
  return out.str();
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!ctx_.same_field(other.ctx_)) throw Error(ErrorKind::MixedFields, "operands belong to different fields");
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto& d = ctx_.data();
  const std::uint32_t n = d.log_table[value_];
  const std::uint32_t group = d.order - 1;
  return FieldElement(ctx_, d.exp_table[(group - n) % group]);
}

FieldElement FieldElement::pow(std::int64_t m) const {
  if (value_ == 0) {
    if (m == 0) throw Error(ErrorKind::ZeroToZeroPower, "0^0 is undefined");
    if (m < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return *this;
  }
  const auto& d = ctx_.data();
  const std::int64_t group = d.order - 1;
  const std::int64_t n = d.log_table[value_];
  std::int64_t r = m % group;
  if (r < 0) r += group;
  // n, r < 2^20 so the product fits.
  return FieldElement(ctx_, d.exp_table[static_cast<std::size_t>(n * r % group)]);
}

FieldElement FieldElement::scale(std::uint32_t c) const {
  const auto p = ctx_.characteristic();
  c %= p;
  auto digits = coords();
  for (auto& x : digits) x = static_cast<std::uint32_t>(std::uint64_t{x} * c % p);
  return ctx_.from_coords(digits);
}

FieldElement FieldElement::operator-() const { return FieldElement(ctx_, ctx_.data().sub(0, value_)); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = ctx_.data().add(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = ctx_.data().sub(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = ctx_.data().mul(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = ctx_.data().mul(value_, rhs.inv().value_);
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
  return a.value_ == b.value_ && a.ctx_.same_field(b.ctx_);
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept { return a.value_ <=> b.value_; }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inv(); }
FieldElement pow(const FieldElement& a, std::int64_t m) { return a.pow(m); }
DiscreteLog dlog(const FieldElement& a) { return a.dlog(); }

}  // namespace gfderiv
