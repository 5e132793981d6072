#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "qg/expr.hpp"
#include "qg/qgroups.hpp"

using namespace qg;

namespace {
NCPolynomial ex(const char *text, const Presentation &p) { return parse_expr(text, p); }
bool same(const NCPolynomial &x, const NCPolynomial &y, const Presentation &p) {
  return verify_identity(x, y, p).holds;
}
} // namespace

TEST_CASE("quantum matrix algebras") {
  const Presentation &m1 = preset("mq:1");
  CHECK(m1.size() == 1);
  CHECK(m1.rules().empty());
  const Presentation &m4 = preset("mq:2:eq4");
  CHECK(normalize(ex("g12 g11", m4), m4) == ex("q g11 g12", m4));
  const Presentation &m9 = preset("mq:2");
  // Under row-major order g11 g12 is the normal word; the relation holds as
  // an identity.
  CHECK(same(ex("g11 g12", m9), ex("q g12 g11", m9), m9));
  CHECK(normalize(ex("g12 g11", m9), m9) == ex("q^-1 g11 g12", m9));
  CHECK(m9.rules().size() == 6);
  CHECK(preset("mq:3").rules().size() == 36);
}

TEST_CASE("quantum determinants and minors") {
  const Presentation &m9 = preset("mq:2");
  CHECK(quantum_determinant(m9) == ex("a d - q b c", m9));
  const Presentation &m4 = preset("mq:2:eq4");
  CHECK(quantum_determinant(m4) == ex("g11 g22 - q^-1 g12 g21", m4));
  CHECK(quantum_determinant(m9, {2}, {2}) == ex("g22", m9));
  CHECK(quantum_minor(m9, 1, 1) == ex("g22", m9));
  // q = 1: the ordinary determinant of a random complex 3x3 matrix.
  const Presentation &m3 = preset("mq:3");
  std::mt19937_64 rng(41);
  std::normal_distribution<double> N;
  Eigen::Matrix3cd M;
  std::vector<std::complex<double>> v(m3.size());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      M(i, j) = {N(rng), N(rng)};
      v[m3.matrix()[i][j]] = M(i, j);
    }
  CHECK(std::abs(eval_commutative(quantum_determinant(m3), v, 1.0) - M.determinant()) < 1e-12);
}

TEST_CASE("det_q is central") {
  for (const char *l : {"mq:2", "mq:3", "mq:2:eq4", "mq:3:eq4"})
    CHECK(all_hold(verify_det_central(preset(l))));
}

TEST_CASE("antipode and star") {
  const Presentation &su = preset("suq2");
  const GeneratorMap &star = *su.star();
  CHECK(same(apply_star(ex("b", su), star), ex("-q c", su), su));
  CHECK(same(apply_star(ex("a", su), star), ex("d", su), su));
  CHECK(same(antipode(ex("a", su), su), ex("d", su), su));
  const Presentation &m3 = preset("mq:3");
  CHECK(same(antipode(ex("g11", m3), m3), quantum_determinant(m3, {2, 3}, {2, 3}), m3));
}

TEST_CASE("sphere projection") {
  CHECK(project_to_sphere(ex("b + q c", preset("suq2"))).is_zero());
  const Presentation &s2 = preset("s2q");
  CHECK(project_to_sphere(ex("a", preset("suq2"))) == ex("L", s2));
  CHECK(project_to_sphere(ex("a d", preset("suq2"))) == ex("1 - q^2 K^2", s2));
}

TEST_CASE("Hopf structure maps") {
  const Presentation &su = preset("suq2");
  auto delta = std::get<TensorPoly>(hopf_apply(ex("a", su), su, HopfKind::coproduct));
  TensorPoly expect = TensorPoly::pure({{su.id("a")}, {su.id("a")}});
  expect += TensorPoly::pure({{su.id("b")}, {su.id("c")}});
  CHECK(delta == expect);
  CHECK(counit(ex("a d - q b c", su), su) == LaurentScalar(1));
  CHECK(counit(ex("b", su), su).is_zero());
  CHECK(antipode(NCPolynomial(1), su) == NCPolynomial(1));
  // m(S (x) id) Delta(a) = S(a) a + S(b) c
  NCPolynomial lhs = antipode(ex("a", su), su) * ex("a", su) + antipode(ex("b", su), su) * ex("c", su);
  CHECK(same(lhs, NCPolynomial(1), su));
}

TEST_CASE("Hopf axioms") {
  for (const char *l : {"suq2", "mq:2", "mq:3", "mq:2:eq4"}) {
    auto rs = verify_hopf_axioms(preset(l), 2, 7, 2);
    CHECK(rs.size() >= 5);
    for (const auto &r : rs) {
      INFO(l << ": " << r.name << " " << r.witness);
      CHECK(r.status == Status::holds);
    }
  }
  Presentation flipped = preset("mq:2");
  flipped.set_hopf(matrix_hopf(flipped, -1, true));
  CHECK(any_fails(verify_hopf_axioms(flipped, 1, 7, 1)));
}

TEST_CASE("row unitarity") {
  const Presentation &su = preset("suq2");
  CHECK(same(ex("a a' + b b'", su), NCPolynomial(1), su));
  CHECK(same(ex("a c' + b d'", su), NCPolynomial(), su));
  for (const char *l : {"suq2", "suq:2", "suq:3", "s2q"})
    CHECK(all_hold(verify_unitarity(preset(l))));
}

TEST_CASE("conventions") {
  CHECK(admissible_antipode_signs(RelationSource::eq9) == std::vector<int>{1});
  CHECK(admissible_antipode_signs(RelationSource::eq4) == std::vector<int>{-1});
  for (const auto &r : adjudicate_conventions()) {
    INFO(r.name << " " << r.witness);
    CHECK(r.status == Status::holds);
  }
  // q -> 1/q sends every eq9 rule of M_q(2) to an eq4 rule.
  const Presentation &m9 = preset("mq:2"), &m4 = preset("mq:2:eq4");
  for (const auto &r : m9.rules()) {
    NCPolynomial rel = invert_q(NCPolynomial::word(r.lhs) - r.rhs);
    CHECK(normalize(rel, m4).is_zero());
  }
  CHECK(preset("mq:2").convention()->antipode_exponent_sign == 1);
  CHECK(preset("mq:2:eq4").convention()->antipode_exponent_sign == -1);
  CHECK_THROWS_AS(preset("mq:7"), std::invalid_argument);
}
