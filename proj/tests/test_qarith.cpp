#include <doctest.h>

#include <map>

#include "superbethe/qarith.hpp"

using namespace superbethe;

namespace {

const BigRational kQ(3, 2);

AtomKey origin(int shift) { return AtomKey::make(AtomKey::kOrigin, 1, shift); }

TermSum br(int shift, int exp = 1) { return TermSum(FactoredTerm::bracket(origin(shift), exp)); }

Valuation<BigRational> exact_val() {
  return Valuation<BigRational>(kQ, {BigRational(7, 5), BigRational(-11, 3)});
}

// Laurent polynomials in x with rational coefficients, kept independent of
// the library's factored representation.
using Laurent = std::map<int, BigRational>;

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Laurent sub(Laurent a, const Laurent& b) {
  for (const auto& [e, c] : b) a[e] -= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

BigRational qpow(int k) {
  BigRational r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= kQ;
  return k < 0 ? BigRational(1 / r) : r;
}

// kappa * [u + c] = q^c x - q^-c x^-1
Laurent kappa_bracket(int c) { return {{1, qpow(c)}, {-1, -qpow(-c)}}; }

}  // namespace

TEST_CASE("eval follows the bracket definition") {
  const Valuation<BigRational> val(kQ, {});
  CHECK(eval(br(0), BigRational(2), val) == BigRational(9, 5));
  CHECK(eval(br(0), BigRational(1), val) == 0);
  CHECK(eval(TermSum{}, BigRational(5, 7), val) == 0);
  CHECK_THROWS_AS(eval(br(0, -1), BigRational(1), val), Error);
  try {
    eval(br(0, -1), BigRational(-1), val);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole_at_evaluation_point);
  }
}

TEST_CASE("parameter atoms use y = q^{u_p}") {
  const auto val = exact_val();
  const AtomKey a = AtomKey::make(1, 1, 2);  // [u + 2 - u_1]
  const BigRational x(5, 3);
  const BigRational m = kQ * kQ / BigRational(7, 5);
  const BigRational expect = (m * x - 1 / (m * x)) / (kQ - 1 / kQ);
  CHECK(eval(TermSum(FactoredTerm::bracket(a)), x, val) == expect);
  CHECK(val.multiplier(AtomKey::make(2, -1, 0)) == BigRational(-11, 3));
}

TEST_CASE("shift_u") {
  const auto val = exact_val();
  const TermSum f = br(0);
  const TermSum g = shift_u(f, 2);
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].atoms()[0].atom.shift() == 2);
  CHECK(val.multiplier(g.terms()[0].atoms()[0].atom) == kQ * kQ);
  const TermSum h = br(1, 2) * br(-3, -1) + TermSum(FactoredTerm::bracket(AtomKey::make(1, -1, 4)));
  CHECK(shift_u(shift_u(h, 1), -1) == h);
  CHECK(shift_u(TermSum::constant(Fraction(5, 3)), 5) == TermSum::constant(Fraction(5, 3)));
  const BigRational x(4, 7);
  CHECK(eval(shift_u(h, 3), x, val) == eval(h, BigRational(val.q_power(3) * x), val));
}

TEST_CASE("canonical form merges like terms") {
  const TermSum a = br(1) * br(2) + br(2) * br(1);
  REQUIRE(a.size() == 1);
  CHECK(a.terms()[0].coeff() == Fraction(2));
  CHECK((a - a).is_zero());
  CHECK((br(3) * br(3, -1)) == TermSum::one());
}

TEST_CASE("equals certifies rational-function identities") {
  const auto val = exact_val();
  // [u+1][u-1] = [u]^2 - [1]^2 and [1] = 1
  const TermSum f = br(1) * br(-1);
  const TermSum g = br(0, 2) - TermSum::one();
  CHECK_FALSE((f - g).is_zero());
  const ZeroCertificate cert = certify_zero(f - g, val);
  CHECK(cert.zero);
  CHECK_FALSE(cert.syntactic);
  CHECK(cert.points_evaluated == cert.points_required);
  CHECK(equals(f, g, val));
  CHECK_FALSE(equals(br(0), br(2), val));

  const Valuation<Complex> cval(Complex(1.5, 0.0), {});
  try {
    equals(f, g, cval);
    FAIL("expected inexact_field");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inexact_field);
  }
  CHECK(approx_equals(f, g, cval, 1e-12));
  CHECK_FALSE(approx_equals(br(0), br(2), cval, 1e-12));
}

TEST_CASE("[u+1]^2 - [u-1]^2 = [2][2u] against a Laurent oracle") {
  const auto val = exact_val();
  const TermSum lhs = br(1, 2) - br(-1, 2);
  // kappa^2 * lhs as a Laurent polynomial
  const Laurent kl = sub(mul(kappa_bracket(1), kappa_bracket(1)),
                         mul(kappa_bracket(-1), kappa_bracket(-1)));
  // kappa^2 [2][2u] = (q^2 - q^-2)(x^2 - x^-2)
  const BigRational two = qpow(2) - qpow(-2);
  const Laurent kr = {{2, two}, {-2, -two}};
  CHECK(kl == kr);
  const BigRational kappa = kQ - 1 / kQ;
  for (int k = 2; k < 7; ++k) {
    const BigRational x(k, 3);
    const BigRational expect = two * (x * x - 1 / (x * x)) / (kappa * kappa);
    CHECK(eval(lhs, x, val) == expect);
  }
}

TEST_CASE("residue_at in the x variable") {
  const auto val = exact_val();
  CHECK(residue_at(br(0, -1), BigRational(1), val) == (kQ - 1 / kQ) / 2);
  const TermSum cancel = TermSum(FactoredTerm(Fraction(1), {{origin(2), 1}, {origin(0), -1}})) +
                         TermSum(FactoredTerm(Fraction(-1), {{origin(2), 1}, {origin(0), -1}}));
  CHECK(residue_at(cancel, BigRational(1), val) == 0);
  CHECK(residue_at(br(0, -1), BigRational(3), val) == 0);
  try {
    residue_at(br(0, -2), BigRational(1), val);
    FAIL("expected higher_order_pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::higher_order_pole);
  }
  // linearity
  const TermSum f = br(3) * br(0, -1);
  const TermSum g = br(-2) * br(0, -1) * br(5);
  CHECK(residue_at(f + g, BigRational(1), val) ==
        residue_at(f, BigRational(1), val) + residue_at(g, BigRational(1), val));
  // x0 = -1 is also a zero of [u]
  CHECK(residue_at(br(0, -1), BigRational(-1), val) == (kQ - 1 / kQ) / 2);
}

TEST_CASE("limit_at_infinity") {
  const auto val = exact_val();
  const FactoredTerm t(Fraction(1), {{origin(1), 1}, {origin(-1), -1}});
  CHECK(limit_at_infinity(t, val) == kQ * kQ);
  try {
    limit_at_infinity(FactoredTerm::bracket(origin(0)), val);
    FAIL("expected divergent_limit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::divergent_limit);
  }
  const FactoredTerm v = FactoredTerm::bracket(origin(0)) * FactoredTerm::bracket(origin(0), -2);
  CHECK(limit_at_infinity(v, val) == 0);
}

TEST_CASE("reflect and negate_parameters match substitution") {
  const auto val = exact_val();
  const auto flipped = Valuation<BigRational>(kQ, {BigRational(5, 7), BigRational(-3, 11)});
  const TermSum f = TermSum(FactoredTerm(Fraction(2, 3), {{AtomKey::make(1, 1, 2), 1},
                                                           {AtomKey::make(2, -1, -1), -1},
                                                           {origin(4), 2}})) +
                    br(1) * br(-3, -1);
  for (int k = 2; k < 6; ++k) {
    const BigRational x(k, 7);
    CHECK(eval(reflect(f, 3), x, val) == eval(f, BigRational(val.q_power(3) / x), val));
    CHECK(eval(negate_parameters(f), x, val) == eval(f, x, flipped));
  }
}

TEST_CASE("eval is a homomorphism") {
  const auto val = exact_val();
  const TermSum f = br(1, 2) * br(-3, -1) + TermSum(FactoredTerm::bracket(AtomKey::make(1, 1, 0)));
  const TermSum g = br(2, -1) - TermSum(FactoredTerm::bracket(AtomKey::make(2, -1, 3), 2));
  for (int k = 2; k < 6; ++k) {
    const BigRational x(k, 7);
    CHECK(eval(f * g, x, val) == eval(f, x, val) * eval(g, x, val));
    CHECK(eval(f + g, x, val) == eval(f, x, val) + eval(g, x, val));
  }
}

TEST_CASE("valuation rejects degenerate q") {
  CHECK_THROWS_AS(Valuation<BigRational>(BigRational(1), {}), Error);
  CHECK_THROWS_AS(Valuation<BigRational>(BigRational(-1), {}), Error);
  CHECK_THROWS_AS(Valuation<BigRational>(BigRational(0), {}), Error);
}

TEST_CASE("fraction overflow is reported") {
  const Fraction big(INT64_MAX);
  try {
    (void)(big * Fraction(2));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::arithmetic_overflow);
  }
  CHECK(Fraction(6, -4) == Fraction(-3, 2));
}
