#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qg/classical.hpp"

namespace qg::classical {

namespace {

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0)
    a += kTwoPi;
  if (a >= kTwoPi)
    a = 0;
  return a;
}

CMatrix haar_unitary(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> N01(0.0, 1.0);
  CMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z(i, j) = cplx(N01(rng), N01(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix Q = qr.householderQ();
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < n; ++j) {
    cplx d = R(j, j);
    Q.col(j) *= d / std::abs(d);
  }
  return Q;
}

} // namespace

UnitaryMatrix::UnitaryMatrix(CMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("unitary matrix must be square and nonempty");
  double err = (m_.adjoint() * m_ - CMatrix::Identity(m_.rows(), m_.cols())).norm();
  if (!(err < tol))
    throw std::invalid_argument("matrix is not unitary (|U*U - 1| = " +
                                std::to_string(err) + ")");
}

bool UnitaryMatrix::special(double tol) const {
  return std::abs(m_.determinant() - cplx(1)) < tol;
}

std::vector<cplx> UnitaryMatrix::eigenvalues() const {
  Eigen::ComplexSchur<CMatrix> schur(m_);
  std::vector<cplx> ev;
  for (Eigen::Index k = 0; k < m_.rows(); ++k)
    ev.push_back(schur.matrixT()(k, k));
  return ev;
}

std::vector<double> UnitaryMatrix::angles() const {
  std::vector<double> a;
  for (cplx z : eigenvalues())
    a.push_back(wrap(std::arg(z)));
  std::sort(a.begin(), a.end());
  return a;
}

SpectralCut SpectralCut::at_angle(double theta) { return {wrap(theta)}; }

SpectralCut SpectralCut::at_point(cplx lambda) {
  if (std::abs(std::abs(lambda) - 1) > 1e-12)
    throw std::invalid_argument("cut point must lie on the unit circle");
  return {wrap(std::arg(lambda))};
}

UnitaryMatrix random_special_unitary(std::size_t n, std::mt19937_64 &rng) {
  CMatrix q = haar_unitary(n, rng);
  cplx det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / static_cast<double>(n));
  return UnitaryMatrix(q);
}

UnitaryMatrix unitary_with_angles(const std::vector<double> &angles,
                                  std::mt19937_64 &rng) {
  CMatrix v = haar_unitary(angles.size(), rng);
  CMatrix d = CMatrix::Zero(angles.size(), angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k)
    d(k, k) = std::polar(1.0, angles[k]);
  return UnitaryMatrix(v * d * v.adjoint());
}

UnitaryMatrix diag_unitary(const std::vector<cplx> &entries) {
  CMatrix d = CMatrix::Zero(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    d(k, k) = entries[k];
  return UnitaryMatrix(d);
}

double spectral_gap(const UnitaryMatrix &g, const SpectralCut &cut) {
  double gap = kPi;
  for (double a : g.angles()) {
    double d = std::abs(a - cut.theta);
    gap = std::min(gap, std::min(d, kTwoPi - d));
  }
  return gap;
}

double branch_angle(cplx z, const SpectralCut &cut) {
  // arg(z / lambda) lies in (-pi, pi]; shift into (-2 pi, 0).
  double rel = std::arg(z * std::conj(cut.lambda()));
  if (rel >= 0)
    rel -= kTwoPi;
  return cut.theta + rel;
}

bool avoids_some_cut(const UnitaryMatrix &g, const std::vector<SpectralCut> &cuts,
                     double tol) {
  for (const auto &c : cuts)
    if (spectral_gap(g, c) > tol)
      return true;
  return false;
}

CMatrix expm(const CMatrix &x) { return x.exp(); }

double frobenius(const CMatrix &x) { return x.norm(); }

} // namespace qg::classical
