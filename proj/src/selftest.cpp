#include "qg/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "qg/classical.hpp"
#include "qg/commands.hpp"
#include "qg/expr.hpp"
#include "qg/gerbe.hpp"
#include "qg/qgroups.hpp"

namespace qg {

using namespace classical;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

CheckResult check(const std::string &name, bool ok, const std::string &witness = {},
                  const std::string &value = {}) {
  return {name, ok ? Status::holds : Status::fails, ok ? "" : witness, value};
}

void append(std::vector<CheckResult> &out, const std::vector<CheckResult> &more,
            const std::string &prefix) {
  for (auto c : more) {
    c.name = prefix + c.name;
    out.push_back(std::move(c));
  }
}

// A check that is expected to fail (negative control).
CheckResult expect_failure(const std::string &name, const std::vector<CheckResult> &rs) {
  return check(name, any_fails(rs), "no failure reported");
}

const std::vector<std::string> kMatrixPresets = {"mq:2", "mq:3", "suq:2", "suq:3"};
const std::vector<std::string> kAllPresets = {"suq2", "s2q", "mq:2", "mq:3", "suq:2", "suq:3"};

// ---------------------------------------------------------------------------
// 1. Presentation soundness

// The quantum-matrix relations written row/column-wise, independent of the
// rule orientation used by the presets:
//   g_ik g_im = q g_im g_ik,  g_ik g_jk = q g_jk g_ik,  g_im g_jk = g_jk g_im,
//   g_ik g_jm - g_jm g_ik = (q - q^-1) g_im g_jk     (i < j, k < m).
std::vector<std::pair<NCPolynomial, NCPolynomial>> matrix_relations(const Presentation &p) {
  const auto &G = p.matrix();
  const std::size_t n = G.size();
  auto g = [&](std::size_t i, std::size_t j) { return NCPolynomial::generator(G[i][j]); };
  const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
  std::vector<std::pair<NCPolynomial, NCPolynomial>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = k + 1; m < n; ++m) {
        rel.push_back({g(i, k) * g(i, m), q * (g(i, m) * g(i, k))});
        rel.push_back({g(k, i) * g(m, i), q * (g(m, i) * g(k, i))});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) {
          rel.push_back({g(i, m) * g(j, k), g(j, k) * g(i, m)});
          rel.push_back({g(i, k) * g(j, m) - g(j, m) * g(i, k), (q - qi) * (g(i, m) * g(j, k))});
        }
  return rel;
}

CriterionOutcome criterion1(std::uint64_t seed) {
  CriterionOutcome c{1, "presentation soundness", false, {}, 0, {}};
  // Relations as printed for SU_q(2) and the sphere.
  const std::vector<std::pair<std::string, std::vector<std::string>>> printed = {
      {"suq2",
       {"a b - q b a", "a c - q c a", "b d - q d b", "c d - q d c", "b c - c b",
        "a d - d a - (q - q^-1) b c", "a d - q b c - 1", "b' + q c", "a' - d"}},
      {"s2q", {"L L' + q^2 K^2 - 1", "L' L + K^2 - 1", "L K - q K L", "K' - K"}}};
  for (const auto &[label, rels] : printed) {
    const Presentation &p = preset(label);
    for (const auto &text : rels) {
      NCPolynomial r = normalize(parse_expr(text, p), p);
      c.checks.push_back(check(label + ": " + text + " = 0", r.is_zero(), format_expr(r, p)));
    }
  }
  std::size_t family = 0;
  for (const auto &label : {"mq:2", "mq:3", "suq:2", "suq:3"}) {
    const Presentation &p = preset(label);
    bool ok = true;
    std::string w;
    for (const auto &[l, r] : matrix_relations(p)) {
      auto v = verify_identity(l, r, p);
      ++family;
      if (!v.holds && ok) {
        ok = false;
        w = format_expr(l - r, p) + " -> " + format_expr(v.residual, p);
      }
    }
    c.checks.push_back(check(std::string(label) + ": quantum matrix relations", ok, w));
  }
  // Every defining rule, lhs - rhs.
  for (const auto &label : kAllPresets) {
    const Presentation &p = preset(label);
    bool ok = true;
    for (const auto &r : p.rules())
      ok = ok && normalize(NCPolynomial::word(r.lhs) - r.rhs, p).is_zero();
    c.checks.push_back(check(label + ": rules reduce to zero", ok));
  }
  // Certification.
  std::size_t pairs = 0;
  for (const auto &label : {"suq2", "s2q", "mq:2", "mq:3", "suq:2", "suq:3", "mq:2:eq4",
                            "mq:3:eq4"}) {
    const Presentation &p = preset(label);
    auto o = check_rule_orientation(p);
    auto cf = check_local_confluence(p);
    pairs += cf.pairs_checked;
    c.checks.push_back(check(std::string(label) + ": orientation", o.ok,
                             o.messages.empty() ? "" : o.messages.front()));
    std::string w;
    if (!cf.failures.empty())
      w = format_word(cf.failures.front().overlap, p) + ": " +
          format_expr(cf.failures.front().residual, p);
    c.checks.push_back(check(std::string(label) + ": local confluence", cf.ok, w,
                             std::to_string(cf.pairs_checked) + " pairs"));
  }
  // Strategy independence on random elements.
  std::mt19937_64 rng(seed), strat(seed ^ 0x5bd1e995ULL);
  std::size_t total = 0;
  for (const auto &label : kAllPresets) {
    const Presentation &p = preset(label);
    std::size_t bad = 0;
    std::string w;
    for (int k = 0; k < 1000; ++k) {
      NCPolynomial x = random_polynomial(p.size(), rng, 6);
      NCPolynomial a = normalize(x, p);
      NCPolynomial b = normalize(x, p, {0, &strat});
      ++total;
      if (!(a == b)) {
        if (!bad)
          w = format_expr(x, p);
        ++bad;
      }
    }
    c.checks.push_back(check(label + ": 1000 random normal forms strategy-independent",
                             bad == 0, std::to_string(bad) + " mismatches, e.g. " + w));
  }
  c.pass = all_hold(c.checks);
  c.detail = std::to_string(family) + " matrix relations, " + std::to_string(pairs) +
             " critical pairs, " + std::to_string(total) + " random elements";
  return c;
}

// ---------------------------------------------------------------------------
// 2. Hopf axioms

CriterionOutcome criterion2(std::uint64_t seed) {
  CriterionOutcome c{2, "Hopf axioms", false, {}, 0, {}};
  for (const auto &label : {"suq2", "mq:2", "mq:3"})
    append(c.checks, verify_hopf_axioms(preset(label), 3, seed, 4),
           std::string(label) + ": ");
  append(c.checks, verify_unitarity(preset("suq2")), "suq2: ");
  append(c.checks, verify_unitarity(preset("suq:3")), "suq:3: ");
  append(c.checks, verify_unitarity(preset("s2q")), "s2q: ");
  append(c.checks, verify_det_central(preset("mq:2")), "mq:2: ");
  append(c.checks, verify_det_central(preset("mq:3")), "mq:3: ");
  // Negative control: the opposite antipode sign must break the antipode law.
  Presentation flipped = preset("mq:2");
  flipped.set_hopf(matrix_hopf(flipped, -flipped.convention()->antipode_exponent_sign, true));
  auto bad = verify_hopf_axioms(flipped, 2, seed, 2);
  bool antipode_broken = false;
  for (const auto &r : bad)
    antipode_broken = antipode_broken ||
                      (r.name.rfind("antipode", 0) == 0 && r.status == Status::fails);
  c.checks.push_back(check("mq:2 with flipped antipode sign: antipode law fails",
                           antipode_broken, "no failure reported"));
  c.pass = all_hold(c.checks);
  c.detail = std::to_string(c.checks.size()) + " exact checks";
  return c;
}

// ---------------------------------------------------------------------------
// 3. Quantum gerbe identities

// [[a, b], [-conj b, conj a]] from a rational point of S^3 (inverse
// stereographic projection of (u, v, w)).
AlgMatrix rational_su2(const Presentation &p, std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  mpq_class u(num(rng), den(rng)), v(num(rng), den(rng)), w(num(rng), den(rng));
  u.canonicalize();
  v.canonicalize();
  w.canonicalize();
  mpq_class s = u * u + v * v + w * w;
  GaussianRational a(2 * u / (s + 1), 2 * v / (s + 1));
  GaussianRational b(2 * w / (s + 1), (s - 1) / (s + 1));
  auto k = [](const GaussianRational &z) { return NCPolynomial(LaurentScalar(z)); };
  return AlgMatrix(p, {{k(a), k(b)}, {k(-b.conj()), k(a.conj())}});
}

CriterionOutcome criterion3(std::uint64_t seed) {
  CriterionOutcome c{3, "quantum gerbe identities", false, {}, 0, {}};
  AlgMatrix x = build_x_equator();
  append(c.checks, verify_involution(x), "x: ");
  append(c.checks, verify_projection(build_projection(x)), "P: ");
  append(c.checks, verify_loop_unitary(build_equator_loop(x)), "loop: ");
  for (const auto &r : verify_x_extended(build_x_extended(true), true))
    if (r.name.rfind("restriction", 0) == 0)
      c.checks.push_back(r);
  // Conjugates u x u* by unitary scalar matrices.
  std::mt19937_64 rng(seed);
  const Presentation &s = x.presentation();
  for (int k = 0; k < 5; ++k) {
    AlgMatrix u = rational_su2(s, rng);
    append(c.checks,
           {verify_matrix_identity("u u* = 1", u * u.star(), AlgMatrix::identity(s, 2))},
           "conjugate " + std::to_string(k + 1) + ": ");
    AlgMatrix y = u * x * u.star();
    append(c.checks, verify_involution(y), "conjugate " + std::to_string(k + 1) + ": ");
    append(c.checks, verify_loop_unitary(build_equator_loop(y)),
           "conjugate " + std::to_string(k + 1) + " loop: ");
  }
  // Negative control: without x^2 = 1 the loop is not unitary.
  const Presentation &sp = preset("s2q");
  AlgMatrix bad(sp, {{LaurentScalar::q() * sp.gen("K"), sp.gen("L")},
                     {sp.gen("L'"), sp.gen("K")}});
  c.checks.push_back(expect_failure("loop on [[q K, L], [L', K]] is not unitary",
                                    verify_loop_unitary(build_equator_loop(bad, false))));
  c.pass = all_hold(c.checks);
  c.detail = std::to_string(c.checks.size()) + " exact checks";
  return c;
}

// ---------------------------------------------------------------------------
// 4. Convention adjudication

CriterionOutcome criterion4(std::uint64_t) {
  CriterionOutcome c{4, "convention adjudication", false, {}, 0, {}};
  c.checks = adjudicate_conventions();
  auto s9 = admissible_antipode_signs(RelationSource::eq9);
  auto s4 = admissible_antipode_signs(RelationSource::eq4);
  c.checks.push_back(check("eq9 admits exactly s = +1", s9 == std::vector<int>{1},
                           std::to_string(s9.size()) + " signs"));
  c.checks.push_back(check("eq4 admits exactly s = -1", s4 == std::vector<int>{-1},
                           std::to_string(s4.size()) + " signs"));
  for (const auto &label : kMatrixPresets)
    c.checks.push_back(check(label + " reports its convention",
                             preset(label).convention().has_value()));
  c.pass = all_hold(c.checks);
  c.detail = "eq9: s = +1, eq4: s = -1";
  return c;
}

// ---------------------------------------------------------------------------
// 5. Undeformed extension, numeric

CriterionOutcome criterion5(std::uint64_t seed) {
  CriterionOutcome c{5, "undeformed extension at q = 1", false, {}, 0, {}};
  ExtensionStats st = extension_numeric(100, seed);
  c.checks.push_back(check("|x* - x| < 1e-10", st.max_hermitian < 1e-10, fmt(st.max_hermitian)));
  c.checks.push_back(check("|x^2 - 1| < 1e-10", st.max_involution < 1e-10,
                           fmt(st.max_involution)));
  c.checks.push_back(check("median |x^2 - x| > 0.1", st.median_idempotent > 0.1,
                           fmt(st.median_idempotent)));
  for (const auto &r : verify_x_extended(build_x_extended(false), false))
    c.checks.push_back(r);
  c.pass = all_hold(c.checks);
  c.detail = std::to_string(st.points) + " points: |x*-x| " + fmt(st.max_hermitian) +
             ", |x^2-1| " + fmt(st.max_involution) + ", median |x^2-x| " +
             fmt(st.median_idempotent);
  return c;
}

// ---------------------------------------------------------------------------
// 6. Logarithms

CriterionOutcome criterion6(std::uint64_t seed) {
  CriterionOutcome c{6, "classical logarithms", false, {}, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  double worst_exp = 0, worst_contour = 0, min_gap = 1;
  for (int k = 0; k < 1000; ++k) {
    UnitaryMatrix g = random_special_unitary(2 + k % 2, rng);
    SpectralCut cut = SpectralCut::at_angle(ang(rng));
    while (spectral_gap(g, cut) <= 1e-3)
      cut = SpectralCut::at_angle(ang(rng));
    min_gap = std::min(min_gap, spectral_gap(g, cut));
    CMatrix L = matrix_log_spectral(g, cut);
    worst_exp = std::max(worst_exp, frobenius(expm(L) - g.matrix()));
    worst_contour = std::max(worst_contour, frobenius(matrix_log_contour(g, cut, 4096) - L));
  }
  c.checks.push_back(check("|exp(log g) - g| < 1e-10 (1000 samples)", worst_exp < 1e-10,
                           fmt(worst_exp)));
  c.checks.push_back(check("|contour - spectral| < 1e-6 at 4096 points", worst_contour < 1e-6,
                           fmt(worst_contour)));
  c.pass = all_hold(c.checks);
  c.detail = "exp-log " + fmt(worst_exp) + ", contour " + fmt(worst_contour) +
             ", smallest gap " + fmt(min_gap);
  return c;
}

// ---------------------------------------------------------------------------
// 7. Transitions and cocycles

std::vector<SpectralCut> random_cuts(std::size_t k, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (;;) {
    std::vector<SpectralCut> cuts;
    double sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      cuts.push_back(SpectralCut::at_angle(ang(rng)));
      sum += cuts.back().theta;
    }
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        distinct = distinct && std::abs(std::polar(1.0, cuts[i].theta) -
                                        std::polar(1.0, cuts[j].theta)) > 1e-3;
    // prod lambda_i != 1
    if (distinct && std::abs(std::polar(1.0, sum) - 1.0) > 1e-3)
      return cuts;
  }
}

CriterionOutcome criterion7(std::uint64_t seed) {
  CriterionOutcome c{7, "transitions and cocycles", false, {}, 0, {}};
  std::mt19937_64 rng(seed);
  const SectionVariant all[] = {SectionVariant::circle_contraction, SectionVariant::affine,
                                SectionVariant::exponential};
  double worst_based = 0;
  double worst_cocycle[3] = {0, 0, 0};
  for (std::size_t n : {2u, 3u}) {
    for (int k = 0; k < 100; ++k) {
      UnitaryMatrix g = random_special_unitary(n, rng);
      std::vector<SpectralCut> cuts = random_cuts(3, rng);
      bool ok = true;
      for (const auto &cut : cuts)
        ok = ok && spectral_gap(g, cut) > 1e-2;
      if (!ok) {
        --k;
        continue;
      }
      const auto m = static_cast<Eigen::Index>(n);
      for (int v = 0; v < 3; ++v) {
        worst_cocycle[v] =
            std::max(worst_cocycle[v], cocycle_residual(g, {cuts[0], cuts[1], cuts[2]}, 16, all[v]));
        PathSample p = transition_path(g, cuts[0], cuts[1], 16, all[v]);
        worst_based = std::max({worst_based,
                                frobenius(p.values.front() - CMatrix::Identity(m, m)),
                                frobenius(p.values.back() - CMatrix::Identity(m, m))});
      }
    }
  }
  c.checks.push_back(check("transition loops based (< 1e-10)", worst_based < 1e-10,
                           fmt(worst_based)));
  for (int v = 0; v < 3; ++v)
    c.checks.push_back(check(std::string(to_string(all[v])) + ": cocycle residual < 1e-10",
                             worst_cocycle[v] < 1e-10, fmt(worst_cocycle[v])));
  // Open cover: n cuts with prod lambda != 1 always leave one cut free.
  std::size_t violations = 0;
  for (int k = 0; k < 10000; ++k) {
    std::size_t n = 2 + k % 2;
    UnitaryMatrix g = random_special_unitary(n, rng);
    if (!avoids_some_cut(g, random_cuts(n, rng)))
      ++violations;
  }
  // Adversarial: n - 1 eigenvalues placed exactly on cuts.
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 2 + k % 2;
    auto cuts = random_cuts(n, rng);
    std::vector<double> angles;
    double sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      angles.push_back(cuts[i].theta);
      sum += cuts[i].theta;
    }
    angles.push_back(-sum);
    if (!avoids_some_cut(unitary_with_angles(angles, rng), cuts))
      ++violations;
  }
  c.checks.push_back(check("open cover: every g avoids some cut", violations == 0,
                           std::to_string(violations) + " violations"));
  c.pass = all_hold(c.checks);
  c.detail = "based " + fmt(worst_based) + ", cocycle " + fmt(worst_cocycle[0]) + " / " +
             fmt(worst_cocycle[1]) + " / " + fmt(worst_cocycle[2]) + ", cover violations " +
             std::to_string(violations);
  return c;
}

// ---------------------------------------------------------------------------
// 8. Degree

CriterionOutcome criterion8(std::uint64_t) {
  CriterionOutcome c{8, "suspension degree", false, {}, 0, {}};
  auto t0 = std::chrono::steady_clock::now();
  double d = suspension_degree(64, LoopKind::basic);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double r = suspension_degree(64, LoopKind::reversed);
  double z = suspension_degree(32, LoopKind::constant);
  c.checks.push_back(check("degree(64) = 1.00 +- 0.05", std::abs(d - 1) <= 0.05, fmt(d)));
  c.checks.push_back(check("degree(64) under 60 s", secs < 60, fmt(secs) + " s"));
  c.checks.push_back(check("reversed loop: -1.00 +- 0.05", std::abs(r + 1) <= 0.05, fmt(r)));
  c.checks.push_back(check("constant loop: 0", std::abs(z) < 1e-12, fmt(z)));
  c.pass = all_hold(c.checks);
  c.detail = "degree " + fmt(d) + " in " + fmt(secs) + " s, reversed " + fmt(r);
  return c;
}

// ---------------------------------------------------------------------------
// 9. Dirac family

CriterionOutcome criterion9(std::uint64_t seed) {
  CriterionOutcome c{9, "Dirac family", false, {}, 0, {}};
  for (std::size_t n : {2u, 3u}) {
    UnitaryMatrix one(CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    auto s = dirac_spectrum_analytic(one, -7, 7);
    std::vector<double> expect;
    for (int m : {-1, 0, 1})
      for (std::size_t k = 0; k < n; ++k)
        expect.push_back(kTwoPi * m);
    c.checks.push_back(check("g = 1, n = " + std::to_string(n) + ": {2 pi m} with multiplicity n",
                             s.eigenvalues == expect, std::to_string(s.eigenvalues.size()) +
                                                          " eigenvalues"));
  }
  {
    auto s = dirac_spectrum_analytic(diag_unitary({cplx(0, 1), cplx(0, -1)}), 0, kTwoPi);
    bool ok = s.eigenvalues.size() == 2 && std::abs(s.eigenvalues[0] - kPi / 2) < 1e-14 &&
              std::abs(s.eigenvalues[1] - 3 * kPi / 2) < 1e-14;
    c.checks.push_back(check("diag(i, -i) on ]0, 2 pi[: pi/2, 3 pi/2", ok));
  }
  std::mt19937_64 rng(seed);
  double worst_fd = 0;
  for (int k = 0; k < 10; ++k) {
    UnitaryMatrix g = random_special_unitary(2, rng);
    auto an = dirac_spectrum_analytic(g, -40, 40).eigenvalues;
    auto fd = dirac_spectrum_fd(g, -45, 45, 1024).eigenvalues;
    std::sort(an.begin(), an.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 0; i < 10 && i < an.size(); ++i) {
      // Central differences double the spectrum; compare with the nearest.
      double best = 1e9;
      for (double e : fd)
        best = std::min(best, std::abs(e - an[i]));
      worst_fd = std::max(worst_fd, best);
    }
  }
  c.checks.push_back(check("finite differences N = 1024: 10 lowest within 1e-2",
                           worst_fd < 1e-2, fmt(worst_fd)));
  {
    auto m = spectral_window_match(diag_unitary({cplx(0, 1), cplx(0, -1)}),
                                   SpectralCut::at_angle(0.1), SpectralCut::at_angle(3.0));
    c.checks.push_back(check("diag(i, -i), cuts 0.1 and 3.0: one eigenvalue each side",
                             m.match && m.dirac.size() == 1 && m.group.size() == 1));
    auto e = spectral_window_match(diag_unitary({cplx(0, 1), cplx(0, -1)}),
                                   SpectralCut::at_angle(0.1), SpectralCut::at_angle(0.2));
    c.checks.push_back(check("empty arc: both counts 0",
                             e.match && e.dirac.empty() && e.group.empty()));
  }
  std::size_t mismatches = 0, total = 0;
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (std::size_t n : {2u, 3u})
    for (int k = 0; k < 100; ++k) {
      UnitaryMatrix g = random_special_unitary(n, rng);
      SpectralCut a = SpectralCut::at_angle(ang(rng)), b = SpectralCut::at_angle(ang(rng));
      if (spectral_gap(g, a) < 1e-6 || spectral_gap(g, b) < 1e-6 || a.theta == b.theta) {
        --k;
        continue;
      }
      ++total;
      if (!spectral_window_match(g, a, b).match)
        ++mismatches;
    }
  c.checks.push_back(check("window match on random (g, cuts), n = 2, 3", mismatches == 0,
                           std::to_string(mismatches) + " of " + std::to_string(total)));
  c.pass = all_hold(c.checks);
  c.detail = "fd error " + fmt(worst_fd) + ", window mismatches " + std::to_string(mismatches) +
             "/" + std::to_string(total);
  return c;
}

// ---------------------------------------------------------------------------
// 10. Tooling

CriterionOutcome criterion10(std::uint64_t seed) {
  CriterionOutcome c{10, "tooling", false, {}, 0, {}};
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  std::string w;
  for (int k = 0; k < 1000; ++k) {
    const Presentation &p = preset(kAllPresets[static_cast<std::size_t>(k) % kAllPresets.size()]);
    NCPolynomial x = normalize(random_polynomial(p.size(), rng, 4, 4), p);
    std::string s = format_expr(x, p);
    NCPolynomial y = parse_expr(s, p);
    if (!(x == y) || format_expr(y, p) != s) {
      if (!bad)
        w = p.label() + ": " + s;
      ++bad;
    }
  }
  c.checks.push_back(check("parse(format(p)) = p on 1000 normal forms", bad == 0,
                           std::to_string(bad) + " failures, e.g. " + w));
  const std::string sd = std::to_string(seed);
  const std::vector<std::vector<std::string>> cmds = {
      {"hopf", "axioms", "--alg", "mq:2", "--max-degree", "2", "--seed", sd},
      {"classical", "log", "--g", "random", "--n", "3", "--seed", sd},
      {"classical", "cocycle", "--samples", "3", "--seed", sd},
      {"gerbe", "xext", "--samples", "20", "--seed", sd},
      {"gerbe", "transition", "--samples", "2", "--seed", sd}};
  for (const auto &args : cmds) {
    std::string a = render_json(execute(args), false);
    std::string b = render_json(execute(args), false);
    c.checks.push_back(check(args[0] + " " + args[1] + ": same seed, same report", a == b,
                             "reports differ"));
  }
  {
    auto args = cmds[1];
    std::string a = render_json(execute(args), false);
    args.back() = std::to_string(seed + 1);
    std::string b = render_json(execute(args), false);
    c.checks.push_back(check("classical log: other seed, other report", a != b,
                             "seed ignored"));
  }
  c.pass = all_hold(c.checks);
  c.detail = "1000 round trips, " + std::to_string(cmds.size()) + " reproducible commands";
  return c;
}

} // namespace

CriterionOutcome run_criterion(int id, std::uint64_t seed) {
  using Fn = CriterionOutcome (*)(std::uint64_t);
  static const Fn table[kCriteria] = {criterion1, criterion2, criterion3, criterion4,
                                      criterion5, criterion6, criterion7, criterion8,
                                      criterion9, criterion10};
  if (id < 1 || id > kCriteria)
    throw std::invalid_argument("no criterion " + std::to_string(id));
  auto t0 = std::chrono::steady_clock::now();
  CriterionOutcome c;
  try {
    c = table[id - 1](seed);
  } catch (const std::exception &e) {
    c.id = id;
    c.title = "criterion " + std::to_string(id);
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed, const std::vector<int> &only) {
  std::vector<CriterionOutcome> out;
  for (int id = 1; id <= kCriteria; ++id)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end())
      out.push_back(run_criterion(id, seed));
  return out;
}

} // namespace qg
