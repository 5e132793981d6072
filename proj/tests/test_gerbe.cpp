#include <doctest.h>

#include "qg/expr.hpp"
#include "qg/gerbe.hpp"
#include "qg/qgroups.hpp"

using namespace qg;

namespace {

const CheckResult &find(const std::vector<CheckResult> &rs, const std::string &name) {
  for (const auto &r : rs)
    if (r.name == name)
      return r;
  FAIL("missing result " << name);
  static CheckResult none;
  return none;
}

AlgMatrix literal(const Presentation &p, std::vector<std::vector<const char *>> rows) {
  std::vector<std::vector<NCPolynomial>> e;
  for (const auto &r : rows) {
    e.emplace_back();
    for (const char *t : r)
      e.back().push_back(parse_expr(t, p));
  }
  return AlgMatrix(p, e);
}

} // namespace

TEST_CASE("equator matrix") {
  AlgMatrix x = build_x_equator();
  CHECK(x.to_string() == "[[q K, L], [L', -K]]");
  CHECK(all_hold(verify_involution(x)));
  const Presentation &s = preset("s2q");
  // Entries of x^2 computed by hand.
  CHECK(normalize(parse_expr("q^2 K^2 + L L'", s), s) == NCPolynomial(1));
  CHECK(normalize(parse_expr("q K L - L K", s), s).is_zero());
}

TEST_CASE("projection") {
  AlgMatrix x = build_x_equator();
  CHECK(all_hold(verify_projection(build_projection(x))));
  const Presentation &s = x.presentation();
  AlgMatrix one = AlgMatrix::identity(s, 2);
  AlgMatrix minus = AlgMatrix::scalar(s, 2, NCPolynomial(-1));
  CHECK(all_hold({verify_matrix_identity("P(1) = 1", build_projection(one), one)}));
  CHECK(all_hold({verify_matrix_identity("P(-1) = 0", build_projection(minus), AlgMatrix(s, 2))}));
}

TEST_CASE("undeformed extension") {
  AlgMatrix x = build_x_extended(false);
  auto rs = verify_x_extended(x, false);
  CHECK(all_hold(rs));
  CHECK(find(rs, "restriction = [[b, d], [a, -b]]").value == "[[b, d], [a, -b]]");
  CHECK(find(rs, "x^2 = 1").value.find("x^2 = x does not hold") != std::string::npos);
}

TEST_CASE("deformed extension") {
  AlgMatrix x = build_x_extended(true);
  auto rs = verify_x_extended(x, true);
  CHECK(find(rs, "f^2 = 1 + (b - b*)^2 / 4").status == Status::holds);
  CHECK(find(rs, "f_q^2 = 1 + (b - b*)^2 / (4 q^2)").status == Status::holds);
  CHECK(find(rs, "restriction = flip x_equator flip").status == Status::holds);
  CHECK(find(rs, "restriction squared = 1").status == Status::holds);
  // f, f_q commute with nothing declared: the off-equator identities stay open.
  CHECK(find(rs, "x* = x").status == Status::indeterminate);
  CHECK(find(rs, "x^2 = 1").status == Status::indeterminate);
  CHECK_FALSE(any_fails(rs));
  AlgMatrix r = restrict_to_equator(x);
  CHECK(r.to_string() == "[[-K, L'], [L, q K]]");
  CHECK(all_hold(verify_involution(r)));
}

TEST_CASE("equator loop") {
  AlgMatrix x = build_x_equator();
  SymbolicLoop loop = build_equator_loop(x);
  REQUIRE(loop.pieces.size() == 2);
  CHECK(all_hold(verify_loop_unitary(loop)));
  const Presentation &l = loop_presentation();
  AlgMatrix id = AlgMatrix::identity(l, 2);
  AlgMatrix minus = AlgMatrix::scalar(l, 2, NCPolynomial(-1));
  CHECK(verify_matrix_identity("t=0", evaluate_piece(loop.pieces[0], 1, 0), id).status ==
        Status::holds);
  CHECK(verify_matrix_identity("t=1/2 first", evaluate_piece(loop.pieces[0], -1, 0), minus)
            .status == Status::holds);
  CHECK(verify_matrix_identity("t=1/2 second", evaluate_piece(loop.pieces[1], -1, 0), minus)
            .status == Status::holds);
  CHECK(all_hold(verify_loop_unitary(constant_loop(2))));
  CHECK(all_hold(verify_loop_unitary(constant_loop(3))));
}

TEST_CASE("loop negative control and preconditions") {
  const Presentation &s = preset("s2q");
  AlgMatrix bad = literal(s, {{"q K", "L"}, {"L'", "K"}});
  CHECK_THROWS_AS(build_equator_loop(bad), std::invalid_argument);
  auto rs = verify_loop_unitary(build_equator_loop(bad, false));
  CHECK(find(rs, "piece 1: U U* = 1").status == Status::fails);
  CHECK(find(rs, "piece 2: U U* = 1").status == Status::holds);
}

TEST_CASE("loop unitarity is conjugation invariant") {
  const Presentation &s = preset("s2q");
  // u = [[3/5, 4/5 i], [4/5 i, 3/5]] and a second rational unitary.
  for (auto rows : std::vector<std::vector<std::vector<const char *>>>{
           {{"3/5", "4/5 i"}, {"4/5 i", "3/5"}},
           {{"2/7 + 3/7 i", "6/7"}, {"-6/7", "2/7 - 3/7 i"}}}) {
    AlgMatrix u = literal(s, rows);
    REQUIRE(all_hold({verify_matrix_identity("u u* = 1", u * u.star(), AlgMatrix::identity(s, 2))}));
    AlgMatrix y = u * build_x_equator() * u.star();
    CHECK(all_hold(verify_involution(y)));
    CHECK(all_hold(verify_loop_unitary(build_equator_loop(y))));
  }
}

TEST_CASE("resolvent extension") {
  for (const char *c : {"1", "-1", "i", "3/5 + 4/5 i", "lam"}) {
    INFO(c);
    auto ext = adjoin_resolvent("suq:2", Cut::parse(c));
    CHECK(all_hold(verify_resolvent(ext)));
  }
  CHECK(all_hold(verify_resolvent(adjoin_resolvent("suq:3", Cut::parse("i")))));
  CHECK_THROWS_AS(Cut::parse("1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Cut::parse("1 + i"), std::invalid_argument);
  CHECK_THROWS_AS(Cut::parse("q"), std::invalid_argument);
  CHECK(resolvent_numeric_residual(2, Cut::parse("-1"), 20, 3) < 1e-10);
  CHECK(resolvent_numeric_residual(3, Cut::parse("3/5 - 4/5 i"), 20, 3) < 1e-10);
}

TEST_CASE("formal transition") {
  auto rs = formal_transition(2, Cut::parse("1"), Cut::parse("i"), Cut::parse("-1"), 5, 11);
  CHECK(all_hold(rs));
  CHECK(find(rs, "q = 1: formal phi = classical transition loop").status == Status::holds);
  CHECK(all_hold(formal_transition(3, Cut::parse("-1"), Cut::parse("-i"), Cut::parse("i"), 3, 11)));
  CHECK(all_hold(formal_transition(2, Cut::parse("lam"), Cut::parse("mu"), Cut::parse("nu"), 0, 1)));
  CHECK_THROWS(formal_transition(2, Cut::parse("i"), Cut::parse("i"), Cut::parse("1"), 1, 1));
}

TEST_CASE("free-group cancellation") {
  CHECK(formal_phi("a", "a").empty());
  CHECK(formal_phi("a", "b") * formal_phi("b", "c") == formal_phi("a", "c"));
  CHECK((formal_phi("a", "b") * formal_phi("b", "a")).empty());
  FormalWord w = {{"a", 1}, {"b", 1}, {"b", -1}, {"c", -1}};
  CHECK(free_reduce(w) == FormalWord{{"a", 1}, {"c", -1}});
}

TEST_CASE("q = 1 numeric oracle for the extended matrix") {
  ExtensionStats st = extension_numeric(100, 5);
  CHECK(st.points == 100);
  CHECK(st.max_hermitian < 1e-10);
  CHECK(st.max_involution < 1e-10);
  CHECK(st.median_idempotent > 0.1);
}
