#include <doctest.h>

#include <algorithm>
#include <random>

#include "qg/classical.hpp"

using namespace qg::classical;

namespace {

const cplx I(0, 1);

CMatrix diag2(cplx a, cplx b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// A special unitary whose spectrum stays at least `gap` away from the cut.
UnitaryMatrix gapped(std::size_t n, const SpectralCut &cut, double gap,
                     std::mt19937_64 &rng) {
  for (;;) {
    UnitaryMatrix g = random_special_unitary(n, rng);
    if (spectral_gap(g, cut) > gap)
      return g;
  }
}

} // namespace

TEST_CASE("spectral logarithm") {
  UnitaryMatrix one(CMatrix::Identity(3, 3));
  CHECK(frobenius(matrix_log_spectral(one, SpectralCut::at_point(-1.0))) < 1e-14);
  CHECK(frobenius(matrix_log_spectral(one, SpectralCut::at_angle(2.0))) < 1e-14);

  UnitaryMatrix g = diag_unitary({I, -I});
  CMatrix X = matrix_log_spectral(g, SpectralCut::at_point(-1.0));
  CHECK(frobenius(X - diag2(I * kPi / 2.0, -I * kPi / 2.0)) < 1e-12);
  // Moving the cut between the two eigenvalues changes the branch of one.
  CMatrix Y = matrix_log_spectral(g, SpectralCut::at_angle(0.1));
  CHECK(frobenius(Y - diag2(I * (kPi / 2 - kTwoPi), I * (3 * kPi / 2 - kTwoPi))) < 1e-12);

  CHECK_THROWS_AS(matrix_log_spectral(g, SpectralCut::at_point(I)), std::domain_error);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (int k = 0; k < 50; ++k) {
    SpectralCut cut = SpectralCut::at_angle(ang(rng));
    UnitaryMatrix h = gapped(k % 2 ? 3 : 2, cut, 1e-3, rng);
    CMatrix L = matrix_log_spectral(h, cut);
    CHECK(frobenius(expm(L) - h.matrix()) < 1e-10);
    // Eigen-angles of -iX lie in the open arc (theta - 2 pi, theta).
    Eigen::ComplexEigenSolver<CMatrix> es(L);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      double a = (-I * es.eigenvalues()(i)).real();
      CHECK(a < cut.theta);
      CHECK(a > cut.theta - kTwoPi);
    }
  }
}

TEST_CASE("contour logarithm") {
  UnitaryMatrix g = diag_unitary({I, -I});
  SpectralCut cut = SpectralCut::at_point(-1.0);
  CHECK(frobenius(matrix_log_contour(g, cut, 4096) - matrix_log_spectral(g, cut)) < 1e-6);
  UnitaryMatrix one(CMatrix::Identity(2, 2));
  CHECK(frobenius(matrix_log_contour(one, cut, 256)) < 1e-8);
  CHECK_THROWS(matrix_log_contour(g, cut, 32));

  // Self-convergence until the round-off floor.
  std::mt19937_64 rng(5);
  SpectralCut c2 = SpectralCut::at_angle(1.0);
  UnitaryMatrix h = gapped(3, c2, 0.3, rng);
  CMatrix ref = matrix_log_spectral(h, c2);
  double prev = 1e300;
  for (int pts : {256, 512, 1024, 2048, 4096}) {
    double err = frobenius(matrix_log_contour(h, c2, pts) - ref);
    INFO(pts << " " << err);
    CHECK((err < prev || err < 1e-12));
    prev = err;
  }
  CHECK(prev < 1e-10);
}

TEST_CASE("local sections") {
  std::mt19937_64 rng(7);
  for (auto v : {SectionVariant::circle_contraction, SectionVariant::affine,
                 SectionVariant::exponential}) {
    INFO(to_string(v));
    for (int k = 0; k < 10; ++k) {
      SpectralCut cut = SpectralCut::at_angle(0.7 * k);
      UnitaryMatrix g = gapped(2 + k % 2, cut, 1e-2, rng);
      CMatrix id = CMatrix::Identity(g.n(), g.n());
      CHECK(frobenius(local_section(g, cut, 0.0, v) - id) < 1e-10);
      CHECK(frobenius(local_section(g, cut, 1.0, v) - g.matrix()) < 1e-10);
      for (double t : {0.1, 0.3, 0.5, 0.8})
        CHECK(std::abs(local_section(g, cut, t, v).determinant()) > 1e-8);
    }
  }
  UnitaryMatrix g = diag_unitary({I, -I});
  CMatrix mid = affine_segment(g, SpectralCut::at_point(-1.0), 0.5);
  CHECK(frobenius(mid - diag2((1.0 + I) / 2.0, (1.0 - I) / 2.0)) < 1e-14);
  Eigen::JacobiSVD<CMatrix> svd(mid);
  CHECK(svd.singularValues()(0) / svd.singularValues()(1) < 10);
  CHECK(std::abs(prefix_path(SpectralCut::at_point(I), 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(prefix_path(SpectralCut::at_point(I), 1.0) + I) < 1e-15);
}

TEST_CASE("transition paths") {
  std::mt19937_64 rng(11);
  SpectralCut a = SpectralCut::at_angle(0.5), b = SpectralCut::at_angle(3.5);
  UnitaryMatrix g = gapped(3, a, 1e-2, rng);
  while (spectral_gap(g, b) < 1e-2)
    g = gapped(3, a, 1e-2, rng);
  CMatrix id = CMatrix::Identity(3, 3);
  for (auto v : {SectionVariant::circle_contraction, SectionVariant::affine,
                 SectionVariant::exponential}) {
    PathSample same = transition_path(g, a, a, 32, v);
    for (const auto &m : same.values)
      CHECK(frobenius(m - id) < 1e-10);
    PathSample p = transition_path(g, a, b, 32, v);
    CHECK(p.values.size() == 33);
    CHECK(frobenius(p.values.front() - id) < 1e-10);
    CHECK(frobenius(p.values.back() - id) < 1e-10);
    for (const auto &m : p.values)
      CHECK(std::abs(m.determinant()) > 1e-8);
  }
  // Exponential variant against exp(-t X_A) exp(t X_B).
  CMatrix XA = matrix_log_spectral(g, a), XB = matrix_log_spectral(g, b);
  PathSample p = transition_path(g, a, b, 16, SectionVariant::exponential);
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    double t = p.t[k];
    CMatrix direct = expm(-t * XA) * expm(t * XB);
    CHECK(frobenius(p.values[k] - direct) < 1e-12);
  }
}

TEST_CASE("cocycle") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (auto v : {SectionVariant::circle_contraction, SectionVariant::affine,
                 SectionVariant::exponential}) {
    for (int k = 0; k < 20; ++k) {
      std::array<SpectralCut, 3> cuts{SpectralCut::at_angle(ang(rng)),
                                      SpectralCut::at_angle(ang(rng)),
                                      SpectralCut::at_angle(ang(rng))};
      UnitaryMatrix g = random_special_unitary(3, rng);
      bool ok = true;
      for (const auto &c : cuts)
        ok = ok && spectral_gap(g, c) > 1e-2;
      if (!ok) {
        --k;
        continue;
      }
      CHECK(cocycle_residual(g, cuts, 16, v) < 1e-10);
      std::array<SpectralCut, 3> eq{cuts[0], cuts[1], cuts[1]};
      CHECK(cocycle_residual(g, eq, 16, v) < 1e-10);
    }
  }
}

TEST_CASE("basic SU(2) loop") {
  CHECK(smoothing(0) == doctest::Approx(0));
  CHECK(smoothing(0.5) == doctest::Approx(0.5));
  CHECK(smoothing(1) == doctest::Approx(1));
  std::mt19937_64 rng(17);
  std::normal_distribution<double> N;
  for (int k = 0; k < 20; ++k) {
    std::array<double, 3> x{N(rng), N(rng), N(rng)};
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (auto &c : x)
      c /= r;
    CHECK(frobenius(su2_basic_loop(x, 0) - CMatrix::Identity(2, 2)) < 1e-12);
    CHECK(frobenius(su2_basic_loop(x, 1) - CMatrix::Identity(2, 2)) < 1e-12);
    CHECK(frobenius(su2_basic_loop(x, 0.5) + CMatrix::Identity(2, 2)) < 1e-12);
    CHECK(frobenius(su2_basic_loop(x, 0.5 - 1e-9) - su2_basic_loop(x, 0.5 + 1e-9)) < 1e-6);
    for (double t : {0.1, 0.25, 0.4, 0.6, 0.9}) {
      CMatrix U = su2_basic_loop(x, t);
      CHECK(frobenius(U.adjoint() * U - CMatrix::Identity(2, 2)) < 1e-12);
      CHECK(std::abs(U.determinant() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("suspension degree") {
  CHECK(suspension_degree(32) == doctest::Approx(1).epsilon(0.05));
  CHECK(suspension_degree(32, LoopKind::reversed) == doctest::Approx(-1).epsilon(0.05));
  CHECK(std::abs(suspension_degree(32, LoopKind::constant)) < 1e-12);
  CHECK_THROWS(suspension_degree(8));
}

TEST_CASE("Dirac spectra") {
  for (std::size_t n : {2, 3}) {
    UnitaryMatrix one(CMatrix::Identity(n, n));
    auto s = dirac_spectrum_analytic(one, -7, 7);
    REQUIRE(s.eigenvalues.size() == 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.eigenvalues[i] == doctest::Approx(-kTwoPi));
      CHECK(s.eigenvalues[n + i] == doctest::Approx(0));
      CHECK(s.eigenvalues[2 * n + i] == doctest::Approx(kTwoPi));
    }
  }
  auto s = dirac_spectrum_analytic(diag_unitary({I, -I}), 0, kTwoPi);
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(kPi / 2));
  CHECK(s.eigenvalues[1] == doctest::Approx(3 * kPi / 2));

  // Conjugation invariance and the finite-difference oracle.
  std::mt19937_64 rng(19);
  UnitaryMatrix g = random_special_unitary(2, rng);
  UnitaryMatrix v = random_special_unitary(2, rng);
  UnitaryMatrix h(v.matrix() * g.matrix() * v.matrix().adjoint());
  auto sg = dirac_spectrum_analytic(g, -20, 20), sh = dirac_spectrum_analytic(h, -20, 20);
  REQUIRE(sg.eigenvalues.size() == sh.eigenvalues.size());
  for (std::size_t i = 0; i < sg.eigenvalues.size(); ++i)
    CHECK(sg.eigenvalues[i] == doctest::Approx(sh.eigenvalues[i]).epsilon(1e-10));
  auto fd = dirac_spectrum_fd(g, -8, 8, 1024);
  std::vector<double> an = dirac_spectrum_analytic(g, -8, 8).eigenvalues;
  std::sort(an.begin(), an.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  an.resize(std::min<std::size_t>(10, an.size()));
  for (double e : an) {
    double best = 1e300;
    for (double f : fd.eigenvalues)
      best = std::min(best, std::abs(f - e));
    CHECK(best < 1e-2);
  }
  CHECK_THROWS(dirac_spectrum_fd(g, -1, 1, 64));
}

TEST_CASE("spectral window match") {
  UnitaryMatrix g = diag_unitary({I, -I});
  auto m = spectral_window_match(g, SpectralCut::at_angle(0.1), SpectralCut::at_angle(3.0));
  CHECK(m.match);
  REQUIRE(m.dirac.size() == 1);
  CHECK(m.dirac[0] == doctest::Approx(kPi / 2));
  REQUIRE(m.group.size() == 1);
  CHECK(std::abs(m.group[0] - I) < 1e-12);
  REQUIRE(m.bijection.size() == 1);
  auto empty = spectral_window_match(g, SpectralCut::at_angle(0.1), SpectralCut::at_angle(0.2));
  CHECK(empty.match);
  CHECK(empty.dirac.empty());
  CHECK(empty.group.empty());
  CHECK_THROWS(spectral_window_match(g, SpectralCut::at_angle(kPi / 2), SpectralCut::at_angle(3.0)));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    UnitaryMatrix h = random_special_unitary(3, rng);
    SpectralCut a = SpectralCut::at_angle(ang(rng)), b = SpectralCut::at_angle(ang(rng));
    if (spectral_gap(h, a) < 1e-6 || spectral_gap(h, b) < 1e-6)
      continue;
    CHECK(spectral_window_match(h, a, b).match);
  }
}

TEST_CASE("open cover") {
  std::mt19937_64 rng(29);
  std::vector<SpectralCut> cuts{SpectralCut::at_angle(0.3), SpectralCut::at_angle(2.4),
                                SpectralCut::at_angle(4.1)};
  for (int k = 0; k < 2000; ++k)
    CHECK(avoids_some_cut(random_special_unitary(2 + k % 2, rng), cuts));
}

TEST_CASE("unitary validation") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 0.5;
  CHECK_THROWS_AS(UnitaryMatrix{m}, std::invalid_argument);
  CHECK(UnitaryMatrix(CMatrix::Identity(2, 2)).special());
  CHECK_FALSE(diag_unitary({I, I}).special());
}
