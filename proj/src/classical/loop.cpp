#include <cmath>
#include <stdexcept>

#include "qg/classical.hpp"

namespace qg::classical {

namespace {

double bump(double s) {
  if (s <= 0 || s >= 0.5)
    return 0;
  return std::exp(-1 / (s * (0.5 - s)));
}

// int_0^u bump, u in [0, 1/2].
double bump_integral(double u) {
  if (u <= 0)
    return 0;
  const auto &[x, w] = gauss_legendre(96);
  double acc = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    acc += w[k] * bump(u / 2 * (x[k] + 1));
  return acc * u / 2;
}

// Point of S^3 in R^4 for U = p0 + i (p1 s1 + p2 s2 + p3 s3).
Eigen::Vector4d to_r4(const CMatrix &U) {
  return {U(0, 0).real(), U(0, 1).imag(), U(0, 1).real(), U(0, 0).imag()};
}

} // namespace

double smoothing(double t) {
  static const double total = bump_integral(0.5);
  if (t <= 0)
    return 0;
  if (t >= 1)
    return 1;
  if (t <= 0.5)
    return 0.5 * bump_integral(t) / total;
  return 0.5 + 0.5 * bump_integral(t - 0.5) / total;
}

CMatrix su2_basic_loop(const std::array<double, 3> &x, double t) {
  double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (std::abs(norm - 1) > 1e-9)
    throw std::invalid_argument("loop parameter must be a unit vector");
  const double a = kTwoPi * smoothing(t);
  const cplx I(0, 1);
  CMatrix U(2, 2);
  if (t <= 0.5) {
    // x as the traceless hermitian matrix x . sigma
    CMatrix X(2, 2);
    X << x[2], cplx(x[0], -x[1]), cplx(x[0], x[1]), -x[2];
    U = std::cos(a) * CMatrix::Identity(2, 2) + I * std::sin(a) * X;
  } else {
    U << std::exp(I * a), 0, 0, std::exp(-I * a);
  }
  return U;
}

double suspension_degree(int grid, LoopKind kind) {
  if (grid < 32)
    throw std::invalid_argument("degree grid must be at least 32");
  const double dth = kPi / grid, dph = kTwoPi / grid, dt = 1.0 / grid;
  const double h = 1e-5;
  auto point = [&](double th, double ph, double t) -> Eigen::Vector4d {
    if (kind == LoopKind::constant)
      return {1, 0, 0, 0};
    if (kind == LoopKind::reversed)
      t = 1 - t;
    std::array<double, 3> x{std::sin(th) * std::cos(ph),
                            std::sin(th) * std::sin(ph), std::cos(th)};
    return to_r4(su2_basic_loop(x, t));
  };
  double acc = 0;
  for (int i = 0; i < grid; ++i) {
    double th = (i + 0.5) * dth;
    for (int j = 0; j < grid; ++j) {
      double ph = (j + 0.5) * dph;
      for (int k = 0; k < grid; ++k) {
        double t = (k + 0.5) * dt;
        Eigen::Matrix4d J;
        J.col(0) = point(th, ph, t);
        J.col(1) = (point(th + h, ph, t) - point(th - h, ph, t)) / (2 * h);
        J.col(2) = (point(th, ph + h, t) - point(th, ph - h, t)) / (2 * h);
        J.col(3) = (point(th, ph, t + h) - point(th, ph, t - h)) / (2 * h);
        acc += J.determinant();
      }
    }
  }
  const double vol_s3 = 2 * kPi * kPi;
  return acc * dth * dph * dt / vol_s3;
}

} // namespace qg::classical
