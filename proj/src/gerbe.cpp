#include "qg/gerbe.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qg/classical.hpp"
#include "qg/expr.hpp"
#include "qg/qgroups.hpp"

namespace qg {

namespace {

NCPolynomial G(const Presentation &p, const char *name) { return p.gen(name); }

LaurentScalar half() { return LaurentScalar::rational(1, 2); }

CheckResult holds_or_fails(const std::string &name, bool ok,
                           const std::string &witness = {}) {
  return {name, ok ? Status::holds : Status::fails, ok ? "" : witness, {}};
}

bool mentions_any(const NCPolynomial &p, const std::vector<GenId> &ids) {
  for (const auto &[w, c] : p.terms())
    for (GenId g : w)
      if (std::find(ids.begin(), ids.end(), g) != ids.end())
        return true;
  return false;
}

// Entrywise identity whose failure is "indeterminate" when every nonzero
// residual involves one of `undeclared`.
CheckResult matrix_check_with_undeclared(const std::string &name,
                                         const AlgMatrix &lhs,
                                         const AlgMatrix &rhs,
                                         const std::vector<GenId> &undeclared) {
  CheckResult r{name, Status::holds, {}, {}};
  bool hard_fail = false;
  for (std::size_t i = 0; i < lhs.n(); ++i)
    for (std::size_t j = 0; j < lhs.n(); ++j) {
      auto v = verify_identity(lhs.at(i, j), rhs.at(i, j), lhs.presentation());
      if (v.holds)
        continue;
      if (!mentions_any(v.residual, undeclared))
        hard_fail = true;
      if (!r.witness.empty())
        r.witness += "; ";
      r.witness += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   "): " + format_expr(v.residual, lhs.presentation());
    }
  if (!r.witness.empty())
    r.status = hard_fail ? Status::fails : Status::indeterminate;
  return r;
}

// Relabels an element of `from` into `to` by generator names.
NCPolynomial transfer(const NCPolynomial &p, const Presentation &from,
                      const Presentation &to) {
  std::vector<GenId> map(from.size());
  for (const auto &g : from.alphabet())
    map[g.id] = to.id(g.name);
  return p.relabel(map);
}

const Presentation &undeformed_extension() {
  static const Presentation p = [] {
    Presentation e("ext:q=1");
    GenId f = e.add_generator("f", true);
    GenId fi = e.add_generator("finv", true);
    GenId b = e.add_generator("b", true);
    GenId c = e.add_generator("c", true);
    GenId a = e.add_generator("a", true);
    GenId d = e.add_generator("d", true);
    auto W = [](Word w, LaurentScalar k = 1) { return NCPolynomial::word(w, k); };
    e.add_rule({f, fi}, NCPolynomial(1));
    e.add_rule({a, d}, NCPolynomial(1) + W({b, c}));
    // f^2 = 1 + (b + c)^2 / 4 solved for c^2.
    e.add_rule({c, c}, W({f, f}, 4) - NCPolynomial(4) - W({b, b}) - W({b, c}, 2));
    GeneratorMap star(e.size());
    star[f] = W({f});
    star[fi] = W({fi});
    star[b] = -W({c});
    star[c] = -W({b});
    star[a] = W({d});
    star[d] = W({a});
    e.set_star(star);
    e.set_matrix({{a, b}, {c, d}});
    certify(e);
    return e;
  }();
  return p;
}

const Presentation &deformed_extension() {
  static const Presentation p = [] {
    Presentation e = prepend_generators(
        preset("suq2"), {{"f", false}, {"finv", false}, {"fq", false}, {"fqinv", false}});
    e.set_label("ext:suq2");
    GenId f = e.id("f"), fi = e.id("finv"), fq = e.id("fq"), fqi = e.id("fqinv");
    GenId b = e.id("b"), c = e.id("c");
    auto W = [](Word w, LaurentScalar k = 1) { return NCPolynomial::word(w, k); };
    e.add_rule({f, fi}, NCPolynomial(1));
    e.add_rule({fi, f}, NCPolynomial(1));
    e.add_rule({fq, fqi}, NCPolynomial(1));
    e.add_rule({fqi, fq}, NCPolynomial(1));
    // f^2 = 1 + (b + q c)^2 / 4 with c b = b c, solved for c^2.
    e.add_rule({c, c}, W({f, f}, LaurentScalar::q(-2) * 4) -
                           NCPolynomial(LaurentScalar::q(-2) * 4) -
                           W({b, b}, LaurentScalar::q(-2)) -
                           W({b, c}, LaurentScalar::q(-1) * 2));
    // f_q^2 = 1 + (b + q c)^2 / (4 q^2) = 1 + q^-2 (f^2 - 1).
    e.add_rule({fq, fq}, NCPolynomial(1) + W({f, f}, LaurentScalar::q(-2)) -
                             NCPolynomial(LaurentScalar::q(-2)));
    GeneratorMap star = *e.star();
    for (GenId g : {f, fi, fq, fqi})
      star[g] = W({g});
    e.set_star(star);
    // No commutation of f, f_q with a, b, c, d is imposed, so only the
    // orientation is certified.
    certify(e, false);
    return e;
  }();
  return p;
}

std::vector<GenId> extension_letters(const Presentation &p) {
  std::vector<GenId> ids;
  for (const char *n : {"f", "finv", "fq", "fqinv"})
    if (auto g = p.find(n))
      ids.push_back(*g);
  return ids;
}

} // namespace

AlgMatrix build_x_equator() {
  const Presentation &s = preset("s2q");
  const NCPolynomial K = G(s, "K"), L = G(s, "L"), Ls = G(s, "L'");
  return AlgMatrix(s, {{LaurentScalar::q() * K, L}, {Ls, -K}});
}

std::vector<CheckResult> verify_involution(const AlgMatrix &x) {
  const AlgMatrix one = AlgMatrix::identity(x.presentation(), x.n());
  return {verify_matrix_identity("x* = x", x.star(), x),
          verify_matrix_identity("x^2 = 1", x * x, one)};
}

AlgMatrix build_projection(const AlgMatrix &x) {
  AlgMatrix one = AlgMatrix::identity(x.presentation(), x.n());
  return (NCPolynomial(half()) * (one + x)).normalized();
}

std::vector<CheckResult> verify_projection(const AlgMatrix &P) {
  return {verify_matrix_identity("P^2 = P", P * P, P),
          verify_matrix_identity("P* = P", P.star(), P)};
}

AlgMatrix flip_conjugate(const AlgMatrix &x) {
  AlgMatrix y(x.presentation(), x.n());
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      y.at(i, j) = x.at(n - 1 - i, n - 1 - j);
  return y;
}

const Presentation &extension_presentation(bool deformed) {
  return deformed ? deformed_extension() : undeformed_extension();
}

AlgMatrix build_x_extended(bool deformed) {
  const Presentation &e = extension_presentation(deformed);
  const GeneratorMap &star = *e.star();
  const NCPolynomial a = G(e, "a"), b = G(e, "b");
  const NCPolynomial bsum = b + apply_star(b, star); // b + b*
  const NCPolynomial astar = apply_star(a, star);
  const NCPolynomial finv = G(e, "finv");
  if (!deformed) {
    NCPolynomial h = NCPolynomial(half()) * bsum;
    return AlgMatrix(e, {{finv * h, finv * astar}, {finv * a, -(finv * h)}})
        .normalized();
  }
  const NCPolynomial fqinv = G(e, "fqinv");
  NCPolynomial x11 = NCPolynomial(half() * LaurentScalar::q(-1)) * bsum * fqinv;
  NCPolynomial x12 = astar * finv;
  NCPolynomial x21 = finv * a;
  NCPolynomial x22 = -(NCPolynomial(half()) * bsum * finv);
  return AlgMatrix(e, {{x11, x12}, {x21, x22}}).normalized();
}

std::vector<CheckResult> verify_x_extended(const AlgMatrix &x, bool deformed) {
  const Presentation &e = x.presentation();
  const GeneratorMap &star = *e.star();
  std::vector<CheckResult> out;
  const NCPolynomial b = G(e, "b"), f = G(e, "f");
  const NCPolynomial bdiff = b - apply_star(b, star);
  {
    NCPolynomial rhs = NCPolynomial(1) + NCPolynomial(LaurentScalar::rational(1, 4)) *
                                             bdiff * bdiff;
    auto r = verify_identity(f * f, rhs, e);
    out.push_back(holds_or_fails("f^2 = 1 + (b - b*)^2 / 4", r.holds,
                                 format_expr(r.residual, e)));
  }
  if (deformed) {
    const NCPolynomial fq = G(e, "fq");
    NCPolynomial rhs =
        NCPolynomial(1) +
        NCPolynomial(LaurentScalar::rational(1, 4) * LaurentScalar::q(-2)) * bdiff * bdiff;
    auto r = verify_identity(fq * fq, rhs, e);
    out.push_back(holds_or_fails("f_q^2 = 1 + (b - b*)^2 / (4 q^2)", r.holds,
                                 format_expr(r.residual, e)));
  }
  const AlgMatrix one = AlgMatrix::identity(e, x.n());
  const AlgMatrix x2 = x * x;
  auto undeclared = deformed ? extension_letters(e) : std::vector<GenId>{};
  out.push_back(matrix_check_with_undeclared("x* = x", x.star(), x, undeclared));
  CheckResult sq = matrix_check_with_undeclared("x^2 = 1", x2, one, undeclared);
  if (!deformed) {
    // The printed alternative x^2 = x, for the record.
    AlgMatrix diff = (x2 - x).normalized();
    bool zero = true;
    for (std::size_t i = 0; i < diff.n(); ++i)
      for (std::size_t j = 0; j < diff.n(); ++j)
        zero = zero && diff.at(i, j).is_zero();
    sq.value = zero ? "x^2 = x also holds"
                    : "x^2 - x = " + diff.to_string() + " (x^2 = x does not hold)";
  }
  out.push_back(sq);
  if (deformed) {
    AlgMatrix r = restrict_to_equator(x);
    out.push_back(verify_matrix_identity("restriction = flip x_equator flip", r,
                                         flip_conjugate(build_x_equator())));
    out.back().value = r.to_string();
    out.push_back(verify_matrix_identity("restriction squared = 1", r * r,
                                         AlgMatrix::identity(r.presentation(), 2)));
  } else {
    AlgMatrix r = restrict_undeformed(x);
    const NCPolynomial a = G(e, "a"), d = G(e, "d");
    out.push_back(verify_matrix_identity("restriction = [[b, d], [a, -b]]", r,
                                         AlgMatrix(e, {{b, d}, {a, -b}})));
    out.back().value = r.to_string();
  }
  return out;
}

AlgMatrix restrict_to_equator(const AlgMatrix &x) {
  const Presentation &e = x.presentation();
  const Presentation &s = preset("s2q");
  GeneratorMap img(e.size());
  for (const auto &g : e.alphabet()) {
    const std::string &n = g.name;
    if (n == "f" || n == "finv" || n == "fq" || n == "fqinv")
      img[g.id] = NCPolynomial(1);
    else if (n == "b")
      img[g.id] = LaurentScalar::q() * -G(s, "K");
    else if (n == "c")
      img[g.id] = G(s, "K");
    else if (n == "a")
      img[g.id] = G(s, "L");
    else if (n == "d")
      img[g.id] = G(s, "L'");
    else
      throw std::invalid_argument("restrict_to_equator: cannot eliminate " + n);
  }
  AlgMatrix r(s, x.n());
  for (std::size_t i = 0; i < x.n(); ++i)
    for (std::size_t j = 0; j < x.n(); ++j)
      r.at(i, j) = normalize(substitute(x.at(i, j), img), s);
  return r;
}

AlgMatrix restrict_undeformed(const AlgMatrix &x) {
  const Presentation &e = x.presentation();
  GeneratorMap img(e.size());
  for (const auto &g : e.alphabet())
    img[g.id] = NCPolynomial::generator(g.id);
  img[e.id("c")] = -G(e, "b");
  img[e.id("f")] = NCPolynomial(1);
  img[e.id("finv")] = NCPolynomial(1);
  return x.map_entries([&](const NCPolynomial &p) {
    return normalize(substitute(p, img), e);
  });
}

const Presentation &loop_presentation() {
  static const Presentation p = [] {
    Presentation l = prepend_generators(preset("s2q"), {{"C", true}, {"S", true}});
    l.set_label("s2q+loop");
    GenId C = l.id("C"), S = l.id("S");
    l.add_rule({S, S}, NCPolynomial(1) - NCPolynomial::word({C, C}));
    GeneratorMap star = *l.star();
    star[C] = NCPolynomial::generator(C);
    star[S] = NCPolynomial::generator(S);
    l.set_star(star);
    certify(l);
    return l;
  }();
  return p;
}

SymbolicLoop build_equator_loop(const AlgMatrix &x, bool require_involution) {
  const Presentation &s = preset("s2q");
  if (&x.presentation() != &s)
    throw std::invalid_argument("equator loop needs a matrix over s2q");
  if (require_involution && !all_hold(verify_involution(x)))
    throw std::invalid_argument("x must satisfy x* = x and x^2 = 1");
  const Presentation &l = loop_presentation();
  const NCPolynomial C = G(l, "C"), S = G(l, "S");
  const NCPolynomial iS = LaurentScalar::i() * S;
  AlgMatrix xl = x.map_entries([&](const NCPolynomial &p) { return transfer(p, s, l); });
  AlgMatrix xl_on(l, x.n());
  for (std::size_t i = 0; i < x.n(); ++i)
    for (std::size_t j = 0; j < x.n(); ++j)
      xl_on.at(i, j) = xl.at(i, j);
  AlgMatrix first = (AlgMatrix::scalar(l, x.n(), C) + iS * xl_on).normalized();
  AlgMatrix second(l, x.n());
  for (std::size_t i = 0; i < x.n(); ++i)
    second.at(i, i) = (i % 2 == 0) ? C + iS : C - iS;
  SymbolicLoop loop;
  loop.pieces.push_back({0.0, 0.5, first});
  loop.pieces.push_back({0.5, 1.0, second});
  return loop;
}

SymbolicLoop constant_loop(std::size_t n) {
  SymbolicLoop loop;
  loop.pieces.push_back({0.0, 1.0, AlgMatrix::identity(loop_presentation(), n)});
  return loop;
}

AlgMatrix evaluate_piece(const LoopPiece &piece, const GaussianRational &C,
                         const GaussianRational &S) {
  const Presentation &l = piece.value.presentation();
  GeneratorMap img(l.size());
  for (const auto &g : l.alphabet())
    img[g.id] = NCPolynomial::generator(g.id);
  img[l.id("C")] = NCPolynomial(LaurentScalar(C));
  img[l.id("S")] = NCPolynomial(LaurentScalar(S));
  return piece.value.map_entries(
      [&](const NCPolynomial &p) { return normalize(substitute(p, img), l); });
}

namespace {

// (cos 2 pi t, sin 2 pi t) for t a multiple of 1/4.
std::pair<GaussianRational, GaussianRational> circle_point(double t) {
  double k = t * 4;
  if (std::abs(k - std::round(k)) > 1e-12)
    throw std::invalid_argument("loop breakpoints must be multiples of 1/4");
  switch (static_cast<int>(std::lround(k)) % 4) {
  case 0:
    return {1, 0};
  case 1:
    return {0, 1};
  case 2:
    return {-1, 0};
  default:
    return {0, -1};
  }
}

} // namespace

std::vector<CheckResult> verify_loop_unitary(const SymbolicLoop &loop) {
  std::vector<CheckResult> out;
  if (loop.pieces.empty())
    throw std::invalid_argument("empty loop");
  for (std::size_t k = 0; k < loop.pieces.size(); ++k) {
    const AlgMatrix &U = loop.pieces[k].value;
    AlgMatrix one = AlgMatrix::identity(U.presentation(), U.n());
    std::string tag = "piece " + std::to_string(k + 1) + ": ";
    out.push_back(verify_matrix_identity(tag + "U U* = 1", U * U.star(), one));
    out.push_back(verify_matrix_identity(tag + "U* U = 1", U.star() * U, one));
  }
  for (std::size_t k = 0; k + 1 < loop.pieces.size(); ++k) {
    const auto &p = loop.pieces[k], &nxt = loop.pieces[k + 1];
    auto [C, S] = circle_point(p.t1);
    auto [C2, S2] = circle_point(nxt.t0);
    CheckResult r = verify_matrix_identity(
        "continuity at t = " + std::to_string(p.t1).substr(0, 4),
        evaluate_piece(p, C, S), evaluate_piece(nxt, C2, S2));
    r.value = evaluate_piece(p, C, S).to_string();
    out.push_back(r);
  }
  const auto &first = loop.pieces.front(), &last = loop.pieces.back();
  auto [C0, S0] = circle_point(first.t0);
  auto [C1, S1] = circle_point(last.t1);
  AlgMatrix one = AlgMatrix::identity(first.value.presentation(), first.value.n());
  out.push_back(verify_matrix_identity("based at t = 0", evaluate_piece(first, C0, S0), one));
  out.push_back(verify_matrix_identity("based at t = 1", evaluate_piece(last, C1, S1), one));
  return out;
}

Cut Cut::parse(const std::string &text) {
  Cut c;
  if (text.empty())
    throw std::invalid_argument("empty cut");
  const bool identifier =
      std::isalpha(static_cast<unsigned char>(text[0])) &&
      std::all_of(text.begin(), text.end(), [](unsigned char ch) {
        return std::isalnum(ch) || ch == '_';
      });
  // "i" and "q" are scalars; the latter is rejected below.
  if (identifier && text != "i" && text != "q") {
    c.symbol = text;
    return c;
  }
  LaurentScalar v = parse_scalar(text);
  if (!v.is_constant())
    throw std::invalid_argument("cut must not depend on q");
  GaussianRational z = v.constant_term();
  if (z.norm() != 1)
    throw std::invalid_argument("cut " + text + " is not on the unit circle");
  c.exact = z;
  return c;
}

std::string Cut::to_string() const { return exact ? exact->to_string() : symbol; }

ResolventExtension adjoin_resolvent(const std::string &base_label, const Cut &cut) {
  const Presentation &base = preset(base_label);
  if (base.matrix().empty())
    throw std::invalid_argument(base_label + " has no generator matrix");
  if (cut.exact && cut.exact->norm() != 1)
    throw std::invalid_argument("cut is not on the unit circle");
  const std::size_t n = base.matrix().size();
  std::vector<std::pair<std::string, bool>> extra;
  if (!cut.exact) {
    extra.push_back({cut.symbol, true});
    extra.push_back({cut.symbol + "inv", true});
  }
  auto p = std::make_shared<Presentation>(prepend_generators(base, extra));
  p->set_label(base_label + "+resolvent(" + cut.to_string() + ")");
  NCPolynomial lam;
  if (cut.exact) {
    lam = NCPolynomial(LaurentScalar(*cut.exact));
  } else {
    GenId l = p->id(cut.symbol), li = p->id(cut.symbol + "inv");
    p->add_rule({l, li}, NCPolynomial(1));
    lam = NCPolynomial::generator(l);
  }
  std::vector<std::vector<GenId>> h(n, std::vector<GenId>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i][j] = p->add_generator("h" + std::to_string(i + 1) + std::to_string(j + 1));
  const auto g = p->matrix();
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPolynomial delta(i == j ? 1 : 0);
      NCPolynomial r1 = delta + lam * NCPolynomial::generator(h[i][j]);
      NCPolynomial r2 = r1;
      for (std::size_t k = 0; k < last; ++k) {
        r1 -= NCPolynomial::word({g[i][k], h[k][j]});
        r2 -= NCPolynomial::word({h[i][k], g[k][j]});
      }
      p->add_rule({g[i][last], h[last][j]}, r1);
      p->add_rule({h[i][last], g[last][j]}, r2);
    }
  if (!check_rule_orientation(*p).ok)
    throw std::logic_error("resolvent relations are not decreasing");
  ResolventExtension ext;
  ext.pres = p;
  ext.base = std::shared_ptr<const Presentation>(&base, [](const Presentation *) {});
  ext.cut = cut;
  ext.n = n;
  ext.lambda = lam;
  ext.g = std::make_shared<AlgMatrix>(generator_matrix(*p));
  std::vector<std::vector<NCPolynomial>> hrows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      hrows[i].push_back(NCPolynomial::generator(h[i][j]));
  ext.h = std::make_shared<AlgMatrix>(*p, hrows);
  return ext;
}

std::vector<CheckResult> verify_resolvent(const ResolventExtension &ext) {
  const Presentation &p = *ext.pres;
  const AlgMatrix &g = *ext.g, &h = *ext.h;
  AlgMatrix gl = g - AlgMatrix::scalar(p, ext.n, ext.lambda);
  AlgMatrix one = AlgMatrix::identity(p, ext.n);
  std::vector<CheckResult> out;
  out.push_back(verify_matrix_identity("(g - lambda) h = 1", gl * h, one));
  out.push_back(verify_matrix_identity("h (g - lambda) = 1", h * gl, one));
  // Triple product expanded in the free algebra, normalized once.
  AlgMatrix triple(p, ext.n);
  for (std::size_t i = 0; i < ext.n; ++i)
    for (std::size_t j = 0; j < ext.n; ++j) {
      NCPolynomial s;
      for (std::size_t k = 0; k < ext.n; ++k)
        for (std::size_t l = 0; l < ext.n; ++l)
          s += h.at(i, k) * gl.at(k, l) * h.at(l, j);
      triple.at(i, j) = s;
    }
  out.push_back(verify_matrix_identity("h (g - lambda) h = h", triple, h));
  for (auto &r : out)
    r.value = std::to_string(p.rules().size()) + " rules, lambda = " + ext.cut.to_string();
  return out;
}

FormalWord free_reduce(const FormalWord &w) {
  FormalWord out;
  for (const auto &x : w) {
    if (!out.empty() && out.back().name == x.name && out.back().power == -x.power)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FormalWord formal_phi(const std::string &a, const std::string &b) {
  return free_reduce({{a, 1}, {b, -1}});
}

FormalWord operator*(const FormalWord &x, const FormalWord &y) {
  FormalWord w = x;
  w.insert(w.end(), y.begin(), y.end());
  return free_reduce(w);
}

namespace {

std::string render_formal(const FormalWord &w) {
  if (w.empty())
    return "1";
  std::string s;
  for (const auto &x : w)
    s += (s.empty() ? "" : " ") + ("psi_" + x.name) + (x.power < 0 ? "^-1" : "");
  return s;
}

std::complex<double> to_c(const GaussianRational &z) { return z.to_complex(); }

} // namespace

std::vector<CheckResult> formal_transition(std::size_t n, const Cut &a,
                                           const Cut &b, const Cut &c,
                                           std::size_t samples,
                                           std::uint64_t seed) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("formal transition supports n = 2, 3");
  std::vector<CheckResult> out;
  const std::string la = a.to_string(), lb = b.to_string(), lc = c.to_string();
  if (la == lb)
    throw std::invalid_argument("cuts must differ");

  // t = 1: psi_1 = g for every cut, phi(1) = g g^-1 with g^-1 = S(g).
  {
    const Presentation &p = preset("suq:" + std::to_string(n));
    AlgMatrix g = generator_matrix(p);
    NCPolynomial det = normalize(quantum_determinant(p), p);
    CheckResult r = verify_matrix_identity("phi(1) = g S(g) = det_q", g * g.star(),
                                           AlgMatrix::scalar(p, n, det));
    r.value = "det_q = " + format_expr(det, p);
    out.push_back(r);
  }
  // t = 0 through the prefix: E_a(s) E_b(s)^-1 with E(0) = 1, E(1) = -lambda.
  {
    ResolventExtension ea = adjoin_resolvent("suq:" + std::to_string(n), a);
    const Presentation &p = *ea.pres;
    AlgMatrix psi0 = AlgMatrix::scalar(p, n, -ea.lambda); // -(1-0) lambda + 0 g
    AlgMatrix prefix_end = AlgMatrix::scalar(p, n, -NCPolynomial(ea.lambda));
    out.push_back(verify_matrix_identity("prefix(1) = -lambda = psi_0", prefix_end, psi0));
    Presentation e("prefix");
    GenId Ea = e.add_generator("Ea", true), Eai = e.add_generator("Eainv", true);
    GenId Eb = e.add_generator("Eb", true), Ebi = e.add_generator("Ebinv", true);
    e.add_rule({Ea, Eai}, NCPolynomial(1));
    e.add_rule({Eb, Ebi}, NCPolynomial(1));
    GeneratorMap at0(e.size());
    for (GenId x : {Ea, Eai, Eb, Ebi})
      at0[x] = NCPolynomial(1);
    NCPolynomial phi0 = substitute(NCPolynomial::word({Ea, Ebi}), at0);
    auto r = verify_identity(phi0, NCPolynomial(1), e);
    out.push_back(holds_or_fails("phi(0) = E_a(0) E_b(0)^-1 = 1", r.holds,
                                 format_expr(r.residual, e)));
    // Unitarity of the prefix symbols: E* = E^-1.
    GeneratorMap star(e.size());
    star[Ea] = NCPolynomial::generator(Eai);
    star[Eai] = NCPolynomial::generator(Ea);
    star[Eb] = NCPolynomial::generator(Ebi);
    star[Ebi] = NCPolynomial::generator(Eb);
    NCPolynomial pref = NCPolynomial::word({Ea, Ebi});
    auto u = verify_identity(pref * apply_star(pref, star), NCPolynomial(1), e);
    out.push_back(holds_or_fails("prefix transition is unitary", u.holds,
                                 format_expr(u.residual, e)));
  }
  // Formal cocycle by cancellation of the middle factor.
  {
    FormalWord lhs = formal_phi(la, lb) * formal_phi(lb, lc);
    FormalWord rhs = formal_phi(la, lc);
    CheckResult r = holds_or_fails("phi_ab phi_bc = phi_ac", lhs == rhs,
                                   render_formal(lhs) + " vs " + render_formal(rhs));
    r.value = render_formal(lhs);
    out.push_back(r);
    FormalWord based = formal_phi(la, lb) * formal_phi(lb, la);
    out.push_back(holds_or_fails("phi_ab phi_ba = 1", based.empty(), render_formal(based)));
  }
  // q = 1: psi_t(g, a) psi_t(g, b)^-1 against the classical transition loop.
  if (a.exact && b.exact && samples > 0) {
    using namespace classical;
    std::mt19937_64 rng(seed);
    SpectralCut ca = SpectralCut::at_point(to_c(*a.exact));
    SpectralCut cb = SpectralCut::at_point(to_c(*b.exact));
    double worst = 0;
    const std::size_t N = 99;
    for (std::size_t s = 0; s < samples; ++s) {
      UnitaryMatrix g = random_special_unitary(n, rng);
      while (spectral_gap(g, ca) < 1e-2 || spectral_gap(g, cb) < 1e-2)
        g = random_special_unitary(n, rng);
      PathSample path = transition_path(g, cb, ca, N, SectionVariant::affine);
      for (std::size_t k = 0; k <= N; ++k) {
        double t = path.t[k];
        auto psi = [&](const SpectralCut &cut) -> CMatrix {
          const auto m = static_cast<Eigen::Index>(n);
          if (t <= 0.5)
            return prefix_path(cut, 2 * t) * CMatrix::Identity(m, m);
          double tau = 2 * t - 1;
          return -(1 - tau) * cut.lambda() * CMatrix::Identity(m, m) + tau * g.matrix();
        };
        CMatrix formal = psi(ca) * psi(cb).inverse();
        worst = std::max(worst, frobenius(formal - path.values[k]));
      }
    }
    CheckResult r = holds_or_fails("q = 1: formal phi = classical transition loop",
                                   worst < 1e-10, "max deviation " + std::to_string(worst));
    r.value = "max deviation " + std::to_string(worst) + " over " +
              std::to_string(samples) + " g x " + std::to_string(N + 1) + " t";
    out.push_back(r);
  }
  return out;
}

ExtensionStats extension_numeric(std::size_t points, std::uint64_t seed) {
  using namespace classical;
  std::mt19937_64 rng(seed);
  ExtensionStats st;
  std::vector<double> idem;
  const AlgMatrix xs = build_x_extended(false);
  const Presentation &e = xs.presentation();
  while (st.points < points) {
    UnitaryMatrix g = random_special_unitary(2, rng);
    const CMatrix &m = g.matrix();
    cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    if (std::abs(b.imag()) >= 0.9)
      continue;
    // Functions on SU(2): star is complex conjugation.
    cplx bsum = b + std::conj(b);
    cplx f = std::sqrt(1.0 + 0.25 * (b - std::conj(b)) * (b - std::conj(b)));
    CMatrix x(2, 2);
    x << 0.5 * bsum / f, std::conj(a) / f, a / f, -0.5 * bsum / f;
    CMatrix one = CMatrix::Identity(2, 2);
    st.max_hermitian = std::max(st.max_hermitian, frobenius(x.adjoint() - x));
    st.max_involution = std::max(st.max_involution, frobenius(x * x - one));
    idem.push_back(frobenius(x * x - x));
    // The symbolic matrix evaluated at the same point must agree.
    std::vector<cplx> vals(e.size());
    vals[e.id("f")] = f;
    vals[e.id("finv")] = 1.0 / f;
    vals[e.id("a")] = a;
    vals[e.id("b")] = b;
    vals[e.id("c")] = c;
    vals[e.id("d")] = d;
    CMatrix xe(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 2; ++j)
        xe(i, j) = eval_commutative(xs.at(static_cast<std::size_t>(i),
                                          static_cast<std::size_t>(j)),
                                    vals, 1.0);
    st.max_hermitian = std::max(st.max_hermitian, frobenius(xe - x));
    ++st.points;
  }
  std::sort(idem.begin(), idem.end());
  if (!idem.empty())
    st.median_idempotent = idem.size() % 2
                               ? idem[idem.size() / 2]
                               : 0.5 * (idem[idem.size() / 2 - 1] + idem[idem.size() / 2]);
  return st;
}

double resolvent_numeric_residual(std::size_t n, const Cut &cut,
                                  std::size_t samples, std::uint64_t seed) {
  using namespace classical;
  if (!cut.exact)
    throw std::invalid_argument("numeric check needs an exact cut");
  ResolventExtension ext = adjoin_resolvent("suq:" + std::to_string(n), cut);
  const Presentation &p = *ext.pres;
  const cplx lam = to_c(*cut.exact);
  SpectralCut sc = SpectralCut::at_point(lam);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    UnitaryMatrix g = random_special_unitary(n, rng);
    while (spectral_gap(g, sc) < 1e-2)
      g = random_special_unitary(n, rng);
    const auto m = static_cast<Eigen::Index>(n);
    CMatrix h = (g.matrix() - lam * CMatrix::Identity(m, m)).inverse();
    std::vector<cplx> vals(p.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
        vals[p.matrix()[i][j]] = g.matrix()(ii, jj);
        vals[p.id("h" + std::to_string(i + 1) + std::to_string(j + 1))] = h(ii, jj);
      }
    for (const auto &r : p.rules()) {
      NCPolynomial rel = NCPolynomial::word(r.lhs) - r.rhs;
      worst = std::max(worst, std::abs(eval_commutative(rel, vals, 1.0)));
    }
  }
  return worst;
}

} // namespace qg
