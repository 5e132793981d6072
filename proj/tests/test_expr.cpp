#include <doctest.h>

#include <random>

#include "qg/expr.hpp"
#include "qg/qgroups.hpp"

using namespace qg;

TEST_CASE("parsing") {
  const Presentation &p = preset("suq2");
  NCPolynomial det = parse_expr("a d - q b c", p);
  NCPolynomial expect = p.gen("a") * p.gen("d") - LaurentScalar::q() * (p.gen("b") * p.gen("c"));
  CHECK(det == expect);
  CHECK(normalize(parse_expr("b' + q c", p), p).is_zero());
  CHECK(parse_expr("(q - q^-1) (b c)", p) ==
        (LaurentScalar::q() - LaurentScalar::q(-1)) * (p.gen("b") * p.gen("c")));
  CHECK(parse_expr("a*d", p) == parse_expr("a d", p));
  CHECK(parse_expr("a^3", p) == p.gen("a") * p.gen("a") * p.gen("a"));
  CHECK(parse_expr("3/4 i q^-2", p) ==
        NCPolynomial(LaurentScalar(GaussianRational(0, mpq_class(3, 4)), -2)));
  CHECK(parse_expr("-b", p) == -p.gen("b"));
  // Aliases g11..g22 on the matrix presets.
  const Presentation &m = preset("mq:2");
  CHECK(parse_expr("a", m) == parse_expr("g11", m));
}

TEST_CASE("parse errors carry a position") {
  const Presentation &p = preset("suq2");
  CHECK_THROWS_AS(parse_expr("a +", p), ParseError);
  CHECK_THROWS_AS(parse_expr("a ) b", p), ParseError);
  CHECK_THROWS_AS(parse_expr("zz", p), std::exception);
  try {
    parse_expr("a + + ", p);
    FAIL("no error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS(parse_expr("a^-1", p));
}

TEST_CASE("rendering") {
  const Presentation &p = preset("suq2");
  CHECK(format_expr(NCPolynomial(), p) == "0");
  CHECK(format_expr(LaurentScalar::q() * (p.gen("b") * p.gen("a")), p) == "q b a");
  CHECK(format_expr(normalize(parse_expr("a d", p), p), p) == "1 + q b c");
  CHECK(format_expr(parse_expr("-a", p), p) == "-a");
}

TEST_CASE("format then parse is the identity on normal forms") {
  std::mt19937_64 rng(37);
  for (const auto &label : preset_labels()) {
    const Presentation &p = preset(label);
    for (int k = 0; k < 100; ++k) {
      NCPolynomial x = normalize(random_polynomial(p.size(), rng, 4, 4), p);
      std::string s = format_expr(x, p);
      CHECK(parse_expr(s, p) == x);
    }
  }
}
