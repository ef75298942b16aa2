#include "doctest.h"

#include "fixtures.hpp"
#include "gfderiv/spec_parse.hpp"
#include "oracle.hpp"

using namespace gfderiv;
using fixtures::bits;
using fixtures::th;

TEST_CASE("make_field: GF(16) with x^4+x+1 log table") {
  const auto f = fixtures::gf16();
  CHECK(f.order() == 16);
  CHECK(th(f, 4).to_string() == "0011");
  // n -> rendered element; theta^12 = theta^4 + theta^3 + theta^2 = 1111.
  const std::vector<std::pair<int, const char*>> rows = {
      {0, "0001"}, {1, "0010"}, {4, "0011"}, {2, "0100"}, {8, "0101"},  {5, "0110"},  {10, "0111"}, {3, "1000"},
      {14, "1001"}, {9, "1010"}, {7, "1011"}, {6, "1100"}, {13, "1101"}, {11, "1110"}, {12, "1111"}};
  for (const auto& [n, digits] : rows) {
    CAPTURE(n);
    CHECK(th(f, n).to_string() == digits);
    CHECK(bits(f, digits).dlog() == DiscreteLog(static_cast<std::uint32_t>(n)));
  }
  CHECK(f.zero().to_string() == "0000");
  CHECK(f.zero().dlog().is_neg_infinity());
}

TEST_CASE("make_field: prime field and default polynomials") {
  const auto gf2 = FieldCtx::make(2, 1);
  CHECK(gf2.poly() == PolyCoeffs{1, 1});
  CHECK(gf2.order() == 2);
  CHECK(gf2.theta() == gf2.one());

  const auto gf9 = FieldCtx::make(3, 2);
  CHECK(gf9.poly() == oracle::smallest_primitive_poly(3, 2));
  CHECK(gf9.poly() == PolyCoeffs{1, 1, 2});
}

TEST_CASE("find_primitive_poly agrees with exhaustive search") {
  CHECK(find_primitive_poly(2, 1) == PolyCoeffs{1, 1});
  CHECK(find_primitive_poly(2, 3) == PolyCoeffs{1, 0, 1, 1});
  CHECK(find_primitive_poly(2, 4) == PolyCoeffs{1, 0, 0, 1, 1});
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}, {2, 6}}) {
    CAPTURE(p);
    CAPTURE(k);
    CHECK(find_primitive_poly(p, k) == oracle::smallest_primitive_poly(p, k));
  }
  CHECK(is_primitive(2, {1, 0, 0, 1, 1}));
}

TEST_CASE("make_field errors") {
  CHECK_THROWS_WITH_AS(FieldCtx::make(4, 2), doctest::Contains("NotPrime"), Error);
  // x^4+x^2+1 = (x^2+x+1)^2
  CHECK_THROWS_WITH_AS(FieldCtx::make(2, 4, PolyCoeffs{1, 0, 1, 0, 1}), doctest::Contains("NotIrreducible"), Error);
  // x^4+x^3+x^2+x+1 is irreducible but x has order 5
  CHECK_THROWS_WITH_AS(FieldCtx::make(2, 4, PolyCoeffs{1, 1, 1, 1, 1}), doctest::Contains("NotPrimitive"), Error);
  CHECK_THROWS_WITH_AS(FieldCtx::make(2, 21), doctest::Contains("FieldTooLarge"), Error);
  CHECK_THROWS_WITH_AS(FieldCtx::make(2, 4, std::nullopt, 15), doctest::Contains("FieldTooLarge"), Error);
  CHECK_THROWS_AS(FieldCtx::make(2, 4, PolyCoeffs{1, 0, 1, 1}), Error);
  CHECK(is_irreducible(2, {1, 1, 1, 1, 1}));
  CHECK_FALSE(is_irreducible(2, {1, 0, 1, 0, 1}));
}

TEST_CASE("add, mul, inv, pow, dlog examples") {
  const auto f = fixtures::gf16();
  CHECK(bits(f, "0010") + bits(f, "0001") == bits(f, "0011"));
  CHECK(bits(f, "0010") + bits(f, "0001") == th(f, 4));
  CHECK(th(f, 7) + f.zero() == th(f, 7));
  CHECK(th(f, 5) * th(f, 5) == bits(f, "0111"));
  CHECK((th(f, 5) * th(f, 5)).dlog() == DiscreteLog(10));
  CHECK(th(f, 9) * f.one() == th(f, 9));
  CHECK(f.one().inv() == f.one());
  CHECK(f.theta().inv() == bits(f, "1001"));
  CHECK(f.theta().inv().dlog() == DiscreteLog(14));
  CHECK(dlog(bits(f, "0111")) == DiscreteLog(10));
  CHECK(dlog(bits(f, "1011")) == DiscreteLog(7));
  CHECK(dlog(f.zero()).to_string() == "-inf");

  CHECK(f.zero().pow(3).is_zero());
  CHECK(th(f, 3).pow(0) == f.one());
  CHECK(th(f, 3).pow(-1) == th(f, 12));
  CHECK_THROWS_WITH_AS(f.zero().pow(0), doctest::Contains("ZeroToZeroPower"), Error);
  CHECK_THROWS_WITH_AS(f.zero().inv(), doctest::Contains("DivisionByZero"), Error);
  CHECK_THROWS_WITH_AS(f.one() / f.zero(), doctest::Contains("DivisionByZero"), Error);
  CHECK_THROWS_AS(f.zero().dlog().exponent(), Error);

  const auto gf9 = FieldCtx::make(3, 2);
  const std::uint32_t a[] = {1, 2};
  const std::uint32_t b[] = {2, 2};
  const std::uint32_t sum[] = {0, 1};
  CHECK(gf9.from_coeffs(a) + gf9.from_coeffs(b) == gf9.from_coeffs(sum));
  CHECK(gf9.from_coeffs(a).to_string() == "12");
}

TEST_CASE("mixing fields is rejected") {
  const auto a = fixtures::gf16();
  const auto b = FieldCtx::make(2, 3);
  CHECK_THROWS_WITH_AS(a.one() + b.one(), doctest::Contains("MixedFields"), Error);
  CHECK_THROWS_WITH_AS(a.one() * b.one(), doctest::Contains("MixedFields"), Error);
  // Separately constructed copies of the same field interoperate.
  CHECK(a.one() + fixtures::gf16().one() == a.zero());
}

TEST_CASE("rendering switches to brackets for p > 10") {
  const auto f = FieldCtx::make(11, 2);
  const std::uint32_t c[] = {3, 10};
  CHECK(f.from_coeffs(c).to_string() == "[3,10]");
}

TEST_CASE("log tables: round trip and generator order") {
  for (const auto& f : {fixtures::gf16(), FieldCtx::make(3, 3), FieldCtx::make(5, 2), FieldCtx::make(2, 8), FieldCtx::make(7, 1)}) {
    const auto group = f.group_order();
    std::vector<bool> seen(f.order(), false);
    for (std::uint32_t n = 0; n < group; ++n) {
      const auto x = f.theta_pow(n);
      REQUIRE(x.dlog() == DiscreteLog(n));
      REQUIRE_FALSE(seen[x.value()]);
      seen[x.value()] = true;
    }
    CHECK_FALSE(seen[0]);
    CHECK(f.theta().pow(group) == f.one());
    for (std::uint32_t m = 1; m < group; ++m) REQUIRE(f.theta().pow(m) != f.one());
  }
}

TEST_CASE("log-table multiplication agrees with polynomial multiplication") {
  for (const auto& f : {fixtures::gf16(), FieldCtx::make(3, 3), FieldCtx::make(5, 2), FieldCtx::make(2, 3)}) {
    const oracle::PolyField ref(f.characteristic(), f.poly());
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        REQUIRE((f.from_value(a) * f.from_value(b)).value() == ref.mul(a, b));
        REQUIRE((f.from_value(a) + f.from_value(b)).value() == ref.add(a, b));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for |F| <= 81") {
  for (const auto& f : {FieldCtx::make(2, 2), FieldCtx::make(3, 2), fixtures::gf16(), FieldCtx::make(5, 2), FieldCtx::make(3, 3),
                        FieldCtx::make(3, 4)}) {
    CAPTURE(f.spec_string());
    const auto all = f.elements();
    for (const auto& a : all) {
      REQUIRE(a + (-a) == f.zero());
      if (!a.is_zero()) REQUIRE(a * a.inv() == f.one());
      for (const auto& b : all) {
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        for (const auto& c : all) {
          REQUIRE((a + b) + c == a + (b + c));
          REQUIRE((a * b) * c == a * (b * c));
          REQUIRE(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("Frobenius is additive (exhaustive, |F| <= 256)") {
  for (const auto& f : {fixtures::gf16(), FieldCtx::make(3, 3), FieldCtx::make(2, 8), FieldCtx::make(5, 2), FieldCtx::make(3, 5)}) {
    if (f.order() > 256) continue;
    const auto p = f.characteristic();
    const auto all = f.elements();
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto lhs = (a + b).is_zero() ? f.zero() : (a + b).pow(p);
        const auto pa = a.is_zero() ? a : a.pow(p);
        const auto pb = b.is_zero() ? b : b.pow(p);
        REQUIRE(lhs == pa + pb);
      }
    }
  }
}

TEST_CASE("field spec strings") {
  const auto f = parse_field("p=2,k=4,poly=x^4+x+1");
  CHECK(f.same_field(fixtures::gf16()));
  CHECK(f.spec_string() == "p=2,k=4,poly=x^4+x+1");
  CHECK(parse_field("p=2,k=4,poly=x^4-x-1").same_field(f));
  CHECK(parse_field("p=2, poly=x^4+x+1").degree() == 4);
  CHECK(parse_field("p=2,k=4").poly() == PolyCoeffs{1, 0, 0, 1, 1});

  const auto g = parse_field("p=3,k=2,poly=x^2+x+2");
  CHECK(g.poly() == PolyCoeffs{1, 1, 2});
  CHECK(parse_field("p=3,k=2,poly=1x^2+4x+2").same_field(g));
  CHECK(parse_poly("2x^3+x+5", 3) == PolyCoeffs{2, 0, 1, 2});
  CHECK(parse_field("p=5,k=2,poly=x^2+x+2").spec_string() == "p=5,k=2,poly=x^2+x+2");

  CHECK_THROWS_WITH_AS(parse_field("p=4,k=2"), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(parse_field("p=2,k=3,poly=x^4+x+1"), doctest::Contains("InvalidArgument"), Error);
  CHECK_THROWS_WITH_AS(parse_field("p=2,q=3"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_field("p=2"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_field("p=2,k=4,poly=x^4++1"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_field("p=2,k=4,poly=y^4"), doctest::Contains("ParseError"), Error);
}
