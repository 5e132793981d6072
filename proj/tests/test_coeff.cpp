#include <doctest.h>

#include <random>

#include "qg/coeff.hpp"
#include "qg/expr.hpp"

using namespace qg;

namespace {

LaurentScalar random_scalar(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> c(-4, 4), e(-3, 3), d(1, 3);
  LaurentScalar s;
  for (int k = 0; k < 3; ++k)
    s += LaurentScalar(GaussianRational(mpq_class(c(rng), d(rng)), mpq_class(c(rng), d(rng))),
                       static_cast<int>(e(rng)));
  return s;
}

// Exact value at a rational point q0, computed term by term.
GaussianRational value_at(const LaurentScalar &s, const mpq_class &q0) {
  GaussianRational acc;
  for (const auto &[e, c] : s.terms()) {
    mpq_class p = 1;
    for (int k = 0; k < std::abs(e); ++k)
      p *= q0;
    if (e < 0)
      p = 1 / p;
    acc += c * GaussianRational(p);
  }
  return acc;
}

} // namespace

TEST_CASE("scalar arithmetic examples") {
  const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
  CHECK(scalar_arith(q, qi, ArithKind::mul) == LaurentScalar(1));
  LaurentScalar z = scalar_arith(q, q, ArithKind::sub);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(scalar_arith(q - qi, q + qi, ArithKind::mul) ==
        LaurentScalar::q(2) - LaurentScalar::q(-2));
}

TEST_CASE("gaussian rationals are canonical") {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a == GaussianRational(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(a.re().get_den() == 2);
  CHECK((a * a.inverse()).is_one());
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("conjugation") {
  const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
  CHECK(conjugate(LaurentScalar::i() * q) == -(LaurentScalar::i() * q));
  CHECK(conjugate(q - qi) == q - qi);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    LaurentScalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
  }
}

TEST_CASE("evaluation at q") {
  const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
  CHECK(std::abs(eval_at_q(q - qi, 1.0)) == 0.0);
  CHECK(eval_at_q(LaurentScalar::q(2), 2.0).real() == doctest::Approx(4.0));
  CHECK(eval_at_q((q - qi) * (q - qi), 0.5).real() == doctest::Approx(2.25));
  CHECK_THROWS(eval_at_q(q, 0.0));
  CHECK_THROWS(eval_at_q(q, -1.0));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    LaurentScalar a = random_scalar(rng), b = random_scalar(rng);
    auto lhs = eval_at_q(a * b, 0.7), rhs = eval_at_q(a, 0.7) * eval_at_q(b, 0.7);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
    CHECK(std::abs(eval_at_q(a * (q - qi), 1.0)) < 1e-12);
  }
}

TEST_CASE("ring axioms on random triples, exact") {
  std::mt19937_64 rng(11);
  const mpq_class q0(3, 2);
  for (int k = 0; k < 200; ++k) {
    LaurentScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentScalar());
    // Independent exact oracle: evaluation at q = 3/2 is a ring map.
    CHECK(value_at(a * b + c, q0) == value_at(a, q0) * value_at(b, q0) + value_at(c, q0));
  }
}

TEST_CASE("rendering round-trips through the parser") {
  LaurentScalar s = LaurentScalar(GaussianRational(0, mpq_class(3, 2)), -2) + LaurentScalar::q();
  CHECK(s.to_string() == "3/2*i*q^-2 + q");
  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    LaurentScalar a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string()) == a);
  }
  CHECK(LaurentScalar().to_string() == "0");
}
