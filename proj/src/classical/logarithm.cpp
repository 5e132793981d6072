#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qg/classical.hpp"

namespace qg::classical {

namespace {

void require_gap(const UnitaryMatrix &g, const SpectralCut &cut, double min_gap) {
  if (spectral_gap(g, cut) <= min_gap)
    throw std::domain_error("cut point is within " + std::to_string(min_gap) +
                            " of an eigenvalue");
}

// Legendre P_n and its derivative at x.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1, p1 = x;
  if (n == 0)
    return {1, 0};
  for (std::size_t k = 2; k <= n; ++k) {
    double pk = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

// sum_k w_k f(x_k) for the n-point rule mapped to [a, b].
template <class F> CMatrix integrate(std::size_t n, double a, double b, F f) {
  const auto &[x, w] = gauss_legendre(n);
  const double half = (b - a) / 2, mid = (a + b) / 2;
  CMatrix acc;
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix v = f(mid + half * x[k]) * (w[k] * half);
    if (k == 0)
      acc = v;
    else
      acc += v;
  }
  return acc;
}

} // namespace

const std::pair<std::vector<double>, std::vector<double>> &
gauss_legendre(std::size_t n) {
  static std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  if (n == 0)
    throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, dp] = legendre(n, z);
      double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16)
        break;
    }
    auto [p, dp] = legendre(n, z);
    (void)p;
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2 / ((1 - z * z) * dp * dp);
  }
  return cache.emplace(n, std::make_pair(x, w)).first->second;
}

CMatrix matrix_log_spectral(const UnitaryMatrix &g, const SpectralCut &cut,
                            double min_gap) {
  require_gap(g, cut, min_gap);
  Eigen::ComplexSchur<CMatrix> schur(g.matrix());
  const CMatrix &U = schur.matrixU();
  const CMatrix &T = schur.matrixT();
  CMatrix D = CMatrix::Zero(T.rows(), T.cols());
  for (Eigen::Index k = 0; k < T.rows(); ++k) {
    cplx z = T(k, k);
    D(k, k) = cplx(std::log(std::abs(z)), branch_angle(z, cut));
  }
  return U * D * U.adjoint();
}

CMatrix matrix_log_contour(const UnitaryMatrix &g, const SpectralCut &cut,
                           int quad_points, double min_gap) {
  if (quad_points < 64)
    throw std::invalid_argument("contour logarithm needs at least 64 points");
  require_gap(g, cut, min_gap);
  const CMatrix &G = g.matrix();
  const auto n = G.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const cplx lam = cut.lambda();
  const double th = cut.theta;
  const auto per_circle = static_cast<std::size_t>(quad_points / 4);
  const auto per_ray_half = static_cast<std::size_t>(quad_points / 4);
  auto resolvent = [&](cplx z) -> CMatrix { return (z * I - G).partialPivLu().inverse(); };

  // Circle of radius r, angle from th - 2 pi to th; dz = i z dphi.
  auto circle = [&](double r) {
    return integrate(per_circle, th - kTwoPi, th, [&](double phi) -> CMatrix {
      cplx z = std::polar(r, phi);
      cplx logz(std::log(r), phi);
      return resolvent(z) * (logz * cplx(0, 1) * z);
    });
  };
  CMatrix outer = circle(2.0);
  CMatrix inner = -circle(0.5); // traversed clockwise
  // Both sides of the cut ray: logs differ by 2 pi i, the ln r parts cancel.
  auto ray = [&](double r) -> CMatrix {
    return resolvent(r * lam) * (cplx(0, -kTwoPi) * lam);
  };
  CMatrix rays = integrate(per_ray_half, 0.5, 1.0, ray) +
                 integrate(per_ray_half, 1.0, 2.0, ray);
  return (outer + inner + rays) / cplx(0, kTwoPi);
}

} // namespace qg::classical
