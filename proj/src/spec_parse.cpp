#include "gfderiv/spec_parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <string>

namespace gfderiv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "expected a non-negative integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  }
  return value;
}

// Parses "x", "x^e"; returns the exponent.
std::uint64_t parse_x_power(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != 'x') throw Error(ErrorKind::ParseError, "expected x or x^e, got '" + std::string(text) + "'");
  text.remove_prefix(1);
  text = trim(text);
  if (text.empty()) return 1;
  if (text.front() != '^') throw Error(ErrorKind::ParseError, "expected '^' after x");
  text.remove_prefix(1);
  return parse_uint(text, "exponent");
}

}  // namespace

PolyCoeffs parse_poly(std::string_view text, std::uint32_t p) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  std::map<std::uint64_t, std::uint64_t> terms;  // power -> coefficient mod p

  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  while (pos <= text.size()) {
    const std::size_t next = text.find_first_of("+-", pos);
    const std::string_view term = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in polynomial '" + std::string(text) + "'");

    const std::size_t x_at = term.find('x');
    std::uint64_t coeff = 1;
    std::uint64_t power = 0;
    if (x_at == std::string_view::npos) {
      coeff = parse_uint(term, "coefficient");
    } else {
      std::string_view head = trim(term.substr(0, x_at));
      if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
      if (!head.empty()) coeff = parse_uint(head, "coefficient");
      power = parse_x_power(term.substr(x_at));
    }
    coeff %= p;
    if (negative) coeff = (p - coeff) % p;
    terms[power] = (terms[power] + coeff) % p;

    if (next == std::string_view::npos) break;
    negative = text[next] == '-';
    pos = next + 1;
  }

  std::uint64_t degree = 0;
  for (const auto& [power, coeff] : terms) {
    if (coeff != 0) degree = std::max(degree, power);
  }
  if (degree > 64) throw Error(ErrorKind::ParseError, "polynomial degree too large");
  PolyCoeffs out(degree + 1, 0);
  for (const auto& [power, coeff] : terms) {
    if (power <= degree) out[degree - power] = static_cast<std::uint32_t>(coeff);
  }
  return out;
}

FieldCtx parse_field(std::string_view spec, std::uint64_t max_order) {
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> k;
  std::optional<std::string> poly_text;

  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string_view item = trim(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value in field spec, got '" + std::string(item) + "'");
    const auto key = trim(item.substr(0, eq));
    const auto value = trim(item.substr(eq + 1));
    if (key == "p") {
      p = parse_uint(value, "p");
    } else if (key == "k") {
      k = parse_uint(value, "k");
    } else if (key == "poly") {
      poly_text = std::string(value);
    } else {
      throw Error(ErrorKind::ParseError, "unknown field spec key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  if (!p) throw Error(ErrorKind::ParseError, "field spec is missing p");
  if (*p > 0xffffffffull) throw Error(ErrorKind::FieldTooLarge, "characteristic too large");
  const auto prime = static_cast<std::uint32_t>(*p);
  if (!is_prime(prime)) throw Error(ErrorKind::NotPrime, std::to_string(prime) + " is not prime");

  std::optional<PolyCoeffs> poly;
  if (poly_text) {
    poly = parse_poly(*poly_text, prime);
    const std::uint64_t poly_degree = poly->size() - 1;
    if (!k) k = poly_degree;
    if (poly_degree != *k) {
      throw Error(ErrorKind::InvalidArgument,
                  "polynomial degree " + std::to_string(poly_degree) + " does not match k=" + std::to_string(*k));
    }
  }
  if (!k) throw Error(ErrorKind::ParseError, "field spec needs k or poly");
  if (*k > 64) throw Error(ErrorKind::FieldTooLarge, "extension degree too large");
  return FieldCtx::make(prime, static_cast<std::uint32_t>(*k), poly, max_order);
}

Deformation parse_deformation(std::string_view spec, const FieldCtx& ctx) {
  spec = trim(spec);
  const std::size_t eq = spec.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected q=x^e or s=N, got '" + std::string(spec) + "'");
  const auto key = trim(spec.substr(0, eq));
  const auto value = trim(spec.substr(eq + 1));
  if (key == "s") {
    const auto s = parse_uint(value, "s");
    if (s > static_cast<std::uint64_t>(INT64_MAX)) throw Error(ErrorKind::InvalidArgument, "s too large");
    return Deformation::from_s(ctx, static_cast<std::int64_t>(s));
  }
  if (key == "q") {
    const auto e = value == "1" ? 0 : parse_x_power(value);
    if (e > static_cast<std::uint64_t>(INT64_MAX) - 1) throw Error(ErrorKind::InvalidArgument, "q exponent too large");
    return Deformation::from_q_exponent(ctx, static_cast<std::int64_t>(e));
  }
  throw Error(ErrorKind::ParseError, "deformation spec must start with q= or s=, got '" + std::string(spec) + "'");
}

}  // namespace gfderiv
