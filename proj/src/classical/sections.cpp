#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qg/classical.hpp"

namespace qg::classical {

const char *to_string(SectionVariant v) {
  switch (v) {
  case SectionVariant::circle_contraction:
    return "circle_contraction";
  case SectionVariant::affine:
    return "affine";
  case SectionVariant::exponential:
    return "exponential";
  }
  return "?";
}

CMatrix affine_segment(const UnitaryMatrix &g, const SpectralCut &cut,
                       double tau) {
  const auto n = g.matrix().rows();
  return -(1 - tau) * cut.lambda() * CMatrix::Identity(n, n) + tau * g.matrix();
}

cplx prefix_path(const SpectralCut &cut, double s) {
  // -lambda != -1, so its principal angle lies strictly inside (-pi, pi).
  double a = std::arg(-cut.lambda());
  return std::polar(1.0, s * a);
}

CMatrix local_section(const UnitaryMatrix &g, const SpectralCut &cut, double t,
                      SectionVariant variant) {
  if (t < 0 || t > 1)
    throw std::domain_error("section parameter outside [0, 1]");
  const auto n = g.matrix().rows();
  switch (variant) {
  case SectionVariant::exponential:
    return expm(t * matrix_log_spectral(g, cut));
  case SectionVariant::circle_contraction: {
    // Eigenvector-wise contraction e^{i s a} -> e^{i t s a}, a the angle
    // in the branch cut at lambda.
    if (spectral_gap(g, cut) <= 1e-8)
      throw std::domain_error("cut point is an eigenvalue");
    Eigen::ComplexSchur<CMatrix> schur(g.matrix());
    CMatrix D = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
      D(k, k) = std::polar(1.0, t * branch_angle(schur.matrixT()(k, k), cut));
    return schur.matrixU() * D * schur.matrixU().adjoint();
  }
  case SectionVariant::affine:
    if (t <= 0.5)
      return prefix_path(cut, 2 * t) * CMatrix::Identity(n, n);
    return affine_segment(g, cut, 2 * t - 1);
  }
  throw std::invalid_argument("unknown section variant");
}

PathSample transition_path(const UnitaryMatrix &g, const SpectralCut &cutA,
                           const SpectralCut &cutB, std::size_t N,
                           SectionVariant variant) {
  if (N == 0)
    throw std::invalid_argument("path needs at least one interval");
  PathSample out;
  for (std::size_t k = 0; k <= N; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(N);
    CMatrix a = local_section(g, cutA, t, variant);
    CMatrix b = local_section(g, cutB, t, variant);
    Eigen::PartialPivLU<CMatrix> lu(a);
    if (std::abs(lu.determinant()) < 1e-14)
      throw std::domain_error("section is not invertible");
    out.t.push_back(t);
    out.values.push_back(lu.solve(b));
    if (k > 0)
      out.lipschitz = std::max(
          out.lipschitz, frobenius(out.values[k] - out.values[k - 1]) *
                             static_cast<double>(N));
  }
  return out;
}

double cocycle_residual(const UnitaryMatrix &g,
                        const std::array<SpectralCut, 3> &cuts, std::size_t N,
                        SectionVariant variant) {
  auto ab = transition_path(g, cuts[0], cuts[1], N, variant);
  auto bc = transition_path(g, cuts[1], cuts[2], N, variant);
  auto ac = transition_path(g, cuts[0], cuts[2], N, variant);
  double worst = 0;
  for (std::size_t k = 0; k < ab.values.size(); ++k)
    worst = std::max(worst, frobenius(ab.values[k] * bc.values[k] - ac.values[k]));
  return worst;
}

} // namespace qg::classical
