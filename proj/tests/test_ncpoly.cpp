#include <doctest.h>

#include <random>

#include "qg/expr.hpp"
#include "qg/ncpoly.hpp"
#include "qg/qgroups.hpp"

using namespace qg;

namespace {
// Ids in the SU_q(2) preset: b < c < a < d.
constexpr GenId B = 0, C = 1, A = 2, D = 3;
NCPolynomial g(GenId x) { return NCPolynomial::generator(x); }
} // namespace

TEST_CASE("free products") {
  NCPolynomial ab = poly_arith(g(A), g(B), PolyArith::mul);
  CHECK(ab.size() == 1);
  CHECK(ab.coefficient({A, B}) == LaurentScalar(1));
  NCPolynomial p = g(A) * g(B) + LaurentScalar::q() * g(C) + NCPolynomial(2);
  CHECK(p * NCPolynomial(1) == p);
  CHECK(NCPolynomial(1) * p == p);
  NCPolynomial prod = (g(A) + g(B)) * (g(A) - g(B));
  NCPolynomial expect = NCPolynomial::word({A, A}) - NCPolynomial::word({A, B}) +
                        NCPolynomial::word({B, A}) - NCPolynomial::word({B, B});
  CHECK(prod == expect);
  CHECK(poly_arith(p, p, PolyArith::sub).is_zero());
  CHECK(poly_scale(p, LaurentScalar(0)).is_zero());
}

TEST_CASE("free algebra associativity on random elements") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    NCPolynomial x = random_polynomial(4, rng, 3), y = random_polynomial(4, rng, 3),
                 z = random_polynomial(4, rng, 3);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("monomial order") {
  MonomialOrder ord = MonomialOrder::identity(4);
  // b < c < a < d: bc precedes ad, which makes ad -> 1 + q bc decreasing.
  CHECK(monomial_compare({B, C}, {A, D}, ord) == std::strong_ordering::less);
  CHECK(monomial_compare({A, D}, {B, C}, ord) == std::strong_ordering::greater);
  CHECK(monomial_compare({}, {A}, ord) == std::strong_ordering::less);
  CHECK(monomial_compare({A, B}, {A, B}, ord) == std::strong_ordering::equal);
  CHECK(monomial_compare({D}, {B, B}, ord) == std::strong_ordering::less);
  // Compatibility with multiplication on random words.
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> len(0, 4), let(0, 3);
  auto word = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i)
      w.push_back(static_cast<GenId>(let(rng)));
    return w;
  };
  for (int k = 0; k < 500; ++k) {
    Word u = word(), v = word(), w = word();
    auto c = ord.compare(u, v);
    CHECK(ord.compare(concat(w, u), concat(w, v)) == c);
    CHECK(ord.compare(concat(u, w), concat(v, w)) == c);
  }
}

TEST_CASE("star on SU_q(2)") {
  const Presentation &p = preset("suq2");
  const GeneratorMap &star = *p.star();
  CHECK(normalize(apply_star(p.gen("b"), star), p) ==
        LaurentScalar::q() * -p.gen("c"));
  CHECK(apply_star(NCPolynomial(LaurentScalar::i()), star) ==
        NCPolynomial(-LaurentScalar::i()));
  CHECK(normalize(apply_star(p.gen("a"), star), p) == p.gen("d"));
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    NCPolynomial x = normalize(random_polynomial(p.size(), rng, 4), p);
    CHECK(normalize(apply_star(apply_star(x, star), star), p) == x);
    // Anti-multiplicative.
    NCPolynomial y = normalize(random_polynomial(p.size(), rng, 2), p);
    CHECK(normalize(apply_star(x * y, star), p) ==
          normalize(apply_star(y, star) * apply_star(x, star), p));
  }
}

TEST_CASE("missing star image is rejected") {
  GeneratorMap partial(2);
  partial[0] = g(0);
  CHECK_THROWS_AS(apply_star(g(1), partial), std::invalid_argument);
}

TEST_CASE("tensor products") {
  TensorPoly x = TensorPoly::pure({{A}, {B}});
  TensorPoly y = TensorPoly::pure({{C}, {D}}, LaurentScalar::q());
  TensorPoly xy = x * y;
  CHECK(xy == TensorPoly::pure({{A, C}, {B, D}}, LaurentScalar::q()));
  CHECK((x - x).is_zero());
  CHECK(TensorPoly::unit(2) * x == x);
}
