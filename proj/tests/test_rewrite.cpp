#include <doctest.h>

#include <random>

#include "qg/expr.hpp"
#include "qg/qgroups.hpp"
#include "qg/rewrite.hpp"

using namespace qg;

namespace {
NCPolynomial nf(const char *text, const Presentation &p) {
  return normalize(parse_expr(text, p), p);
}
NCPolynomial ex(const char *text, const Presentation &p) { return parse_expr(text, p); }
} // namespace

TEST_CASE("normal forms in SU_q(2)") {
  const Presentation &p = preset("suq2");
  CHECK(nf("a b", p) == ex("q b a", p));
  CHECK(nf("a d", p) == ex("1 + q b c", p));
  CHECK(nf("d a", p) == ex("1 + q^-1 b c", p));
  // q = 1 commutative oracle on a point of SU(2): d a = 1 + b c there.
  std::vector<std::complex<double>> v(p.size());
  std::complex<double> a(0.6, 0.0), b(0.0, 0.8);
  v[p.id("a")] = a;
  v[p.id("b")] = b;
  v[p.id("c")] = -std::conj(b);
  v[p.id("d")] = std::conj(a);
  CHECK(std::abs(eval_commutative(nf("d a", p), v, 1.0) - a * std::conj(a)) < 1e-12);
  CHECK(nf("b c - c b", p).is_zero());
}

TEST_CASE("orientation") {
  const Presentation &p = preset("suq2");
  auto r = check_rule_orientation(p);
  CHECK(r.ok);
  CHECK(r.rules_checked == 7);
  Presentation bad("flipped");
  GenId a = bad.add_generator("a"), b = bad.add_generator("b");
  bad.add_rule({a, b}, NCPolynomial::word({a, b}, LaurentScalar::q(-1)));
  auto rb = check_rule_orientation(bad);
  CHECK_FALSE(rb.ok);
  REQUIRE(rb.offending.size() == 1);
  CHECK(rb.offending[0] == 0);
  REQUIRE_FALSE(rb.messages.empty());
  CHECK(rb.messages[0].find("a b") != std::string::npos);
  Presentation empty("empty");
  empty.add_generator("x");
  CHECK(check_rule_orientation(empty).ok);
}

TEST_CASE("local confluence") {
  CHECK(check_local_confluence(preset("suq2")).ok);
  CHECK(check_local_confluence(preset("mq:3")).ok);
  CHECK(check_local_confluence(preset("mq:3:eq4")).ok);
  Presentation inv("inverse pair");
  GenId a = inv.add_generator("a"), b = inv.add_generator("b");
  inv.add_rule({a, b}, NCPolynomial(1));
  inv.add_rule({b, a}, NCPolynomial(1));
  auto r = check_local_confluence(inv);
  CHECK(r.ok);
  CHECK(r.pairs_checked >= 2);
  // ab -> 1 and bc -> 1 disagree on abc: c versus a.
  Presentation clash("clash");
  GenId x = clash.add_generator("a"), y = clash.add_generator("b"), z = clash.add_generator("c");
  clash.add_rule({x, y}, NCPolynomial(1));
  clash.add_rule({y, z}, NCPolynomial(1));
  auto rc = check_local_confluence(clash);
  CHECK_FALSE(rc.ok);
  REQUIRE_FALSE(rc.failures.empty());
  CHECK(rc.failures[0].overlap == Word{x, y, z});
  CHECK_THROWS_AS(certify(clash), std::logic_error);
}

TEST_CASE("identity verification") {
  const Presentation &su = preset("suq2");
  CHECK(verify_identity(ex("b c", su), ex("c b", su), su).holds);
  auto f = verify_identity(ex("a b", su), ex("b a", su), su);
  CHECK_FALSE(f.holds);
  CHECK(f.residual == ex("q b a - b a", su));
  CHECK(verify_identity(ex("a d - q b c", su), NCPolynomial(1), su).holds);
  CHECK(verify_identity(ex("a d - d a", su), ex("(q - q^-1) b c", su), su).holds);
  CHECK(verify_identity(ex("c'", su), ex("-q^-1 b", su), su).holds);
  const Presentation &s2 = preset("s2q");
  CHECK(verify_identity(ex("L K", s2), ex("q K L", s2), s2).holds);
  CHECK(verify_identity(ex("L L' + q^2 K^2", s2), NCPolynomial(1), s2).holds);
  CHECK(verify_identity(ex("L' L + K^2", s2), NCPolynomial(1), s2).holds);
  CHECK(verify_identity(ex("K'", s2), ex("K", s2), s2).holds);
}

TEST_CASE("central generators sort to the left") {
  Presentation p("central");
  GenId z = p.add_generator("z", true);
  GenId a = p.add_generator("a");
  GenId b = p.add_generator("b");
  p.add_rule({b, a}, NCPolynomial::word({a, b}, LaurentScalar::q()));
  certify(p);
  CHECK(normalize(NCPolynomial::word({a, z}), p) == NCPolynomial::word({z, a}));
  CHECK(normalize(NCPolynomial::word({b, z, a}), p) ==
        NCPolynomial::word({z, a, b}, LaurentScalar::q()));
}

TEST_CASE("rewrite budget") {
  const Presentation &su = preset("suq2");
  Presentation tight = su;
  tight.set_budget(1);
  CHECK_THROWS_AS(normalize(ex("d d a a", su), tight), BudgetExceeded);
  CHECK_NOTHROW(normalize(ex("d d a a", su), su));
}

TEST_CASE("normal forms do not depend on the rewriting strategy") {
  std::mt19937_64 rng(29), strat(31);
  for (const auto &label : preset_labels()) {
    const Presentation &p = preset(label);
    for (int k = 0; k < 100; ++k) {
      NCPolynomial x = random_polynomial(p.size(), rng, 5);
      NCPolynomial a = normalize(x, p);
      CHECK(a == normalize(x, p, {0, &strat}));
      for (const auto &[w, c] : a.terms())
        CHECK(is_normal_word(w, p));
    }
  }
}
