#include <doctest.h>

#include <cmath>
#include <vector>

#include "bc1/errors.hpp"
#include "bc1/sigma_span.hpp"

using namespace bc1;

namespace {

AlgebraParams reference() { return AlgebraParams(Rational(1), Rational(1), Rational(6)); }

double raw_value(const std::vector<RawTerm>& raw, double sigma, double t) {
  double v = 0.0;
  for (const auto& r : raw) {
    v += to_double(r.coeff) * std::pow(std::cosh(t), -(sigma + 2 * r.shift)) * std::pow(std::tanh(t), r.tanh_power);
  }
  return v;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-0/3")) == "0");
  CHECK_THROWS_AS(parse_rational("1//2"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("13/2") == 6.5);
  CHECK_THROWS_AS(parse_real("1//2"), ParseError);
  CHECK_THROWS_AS(parse_real("2x"), ParseError);
  CHECK(is_rational_literal("11/2"));
  CHECK_FALSE(is_rational_literal("5.5"));
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(boost::multiprecision::denominator(parse_rational("-6/4")) == 2);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AlgebraParams(Rational(0), Rational(1), Rational(6)), ParameterError);
  CHECK_THROWS_AS(AlgebraParams(Rational(1), Rational(-1), Rational(6)), ParameterError);
  CHECK_THROWS_AS(AlgebraParams(Rational(1), Rational(1), Rational(2)), ParameterError);
  const AlgebraParams p = reference();
  CHECK(p.rho() == 2);
  CHECK(p.sigma0() == 3);
  CHECK(p.delta0() == 1);
  CHECK(p.delta1() == 2);
}

TEST_CASE("span_normalize reduces tanh powers") {
  const AlgebraParams p = reference();
  SUBCASE("tanh^2") {
    std::vector<RawTerm> raw{{0, 2, Rational(1)}};
    const SigmaSpan s = span_normalize(raw, p);
    CHECK(s.terms().size() == 2);
    CHECK(s.coefficient(0, 0) == 1);
    CHECK(s.coefficient(1, 0) == -1);
  }
  SUBCASE("empty") { CHECK(span_normalize({}, p).is_zero()); }
  SUBCASE("tanh^3") {
    std::vector<RawTerm> raw{{0, 3, Rational(1)}};
    const SigmaSpan s = span_normalize(raw, p);
    CHECK(s.coefficient(0, 1) == 1);
    CHECK(s.coefficient(1, 1) == -1);
    CHECK(s.terms().size() == 2);
  }
  SUBCASE("cancellation leaves no zero coefficients") {
    std::vector<RawTerm> raw{{0, 2, Rational(1)}, {1, 0, Rational(1)}, {0, 0, Rational(-1)}};
    CHECK(span_normalize(raw, p).is_zero());
  }
}

TEST_CASE("span_normalize is pointwise faithful and idempotent") {
  const AlgebraParams p(Rational(1, 2), Rational(2), Rational(8));
  std::vector<RawTerm> raw{{0, 5, Rational(3, 7)}, {2, 4, Rational(-1, 3)}, {1, 1, Rational(5)}, {0, 0, Rational(2)}};
  const SigmaSpan s = span_normalize(raw, p);
  for (const auto& [key, c] : s.terms()) CHECK(key.tanh_power <= 1);
  for (double t : {-1.3, -0.2, 0.0, 0.4, 2.5}) {
    CAPTURE(t);
    const double expected = raw_value(raw, 8.0, t);
    CHECK(std::abs(span_evaluate(s, t) - expected) <= 1e-12 * (1.0 + std::abs(expected)));
  }
  std::vector<RawTerm> again;
  for (const auto& [key, c] : s.terms()) again.push_back({key.shift, key.tanh_power, c});
  CHECK(span_normalize(again, p) == s);
}

TEST_CASE("span_evaluate") {
  const AlgebraParams p = reference();
  CHECK(span_evaluate(SigmaSpan::monomial(p, 0, 0), 0.0) == 1.0);
  CHECK(span_evaluate(SigmaSpan::monomial(p, 0, 1), 0.0) == 0.0);
  CHECK(span_evaluate(SigmaSpan::monomial(p, 0, 0), 1.0) == doctest::Approx(std::pow(std::cosh(1.0), -6)).epsilon(1e-14));
  // no overflow deep in the tail
  CHECK(span_evaluate(SigmaSpan::monomial(p, 3, 0), 400.0) == 0.0);
  CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::log(2.0)));
}

TEST_CASE("span arithmetic") {
  const AlgebraParams p = reference();
  SigmaSpan a = SigmaSpan::monomial(p, 1, 0, Rational(2)) + SigmaSpan::monomial(p, 0, 1, Rational(1, 3));
  SigmaSpan b = a * Rational(3);
  CHECK(b.coefficient(1, 0) == 6);
  CHECK(b.coefficient(0, 1) == 1);
  CHECK((a - a).is_zero());
  CHECK(a.max_shift() == 1);
  const AlgebraParams other(Rational(1), Rational(1), Rational(7));
  CHECK_THROWS_AS(a += SigmaSpan::monomial(other, 0, 0), ParameterError);
  CHECK_FALSE(SigmaSpan::monomial(p, 0, 0) == SigmaSpan::monomial(other, 0, 0));
}

TEST_CASE("span JSON round trip") {
  const AlgebraParams p = reference();
  SigmaSpan a = SigmaSpan::monomial(p, 2, 1, Rational(-5, 12)) + SigmaSpan::monomial(p, 0, 0, Rational(7));
  const nlohmann::json j = to_json(a);
  CHECK(j.size() == 2);
  CHECK(j[0]["m"] == 0);
  CHECK(j[0]["eps"] == 0);
  CHECK(j[1]["num"] == "-5");
  CHECK(j[1]["den"] == "12");
  CHECK(span_from_json(j, p) == a);
  CHECK_THROWS(span_from_json(nlohmann::json::parse(R"([{"m":0,"eps":2,"num":"1","den":"1"}])"), p));
}
