#pragma once

// Numeric side of the undeformed SU(n) gerbe: logarithms with a spectral
// cut, local sections of the path fibration, transition loops and
// cocycles, the basic SU(2) loop and its suspension degree, and spectra of
// the twisted Dirac family.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qg::classical {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;

class UnitaryMatrix {
public:
  /// Throws std::invalid_argument when |U*U - 1|_F >= tol.
  explicit UnitaryMatrix(CMatrix m, double tol = 1e-10);
  const CMatrix &matrix() const { return m_; }
  std::size_t n() const { return static_cast<std::size_t>(m_.rows()); }
  bool special(double tol = 1e-10) const;
  /// Eigenvalues of the (normal) matrix, via complex Schur form.
  std::vector<cplx> eigenvalues() const;
  /// Eigenvalue angles in [0, 2 pi), ascending.
  std::vector<double> angles() const;

private:
  CMatrix m_;
};

struct SpectralCut {
  double theta = 0; // in [0, 2 pi)
  static SpectralCut at_angle(double theta);
  static SpectralCut at_point(cplx lambda);
  cplx lambda() const { return std::polar(1.0, theta); }
};

struct PathSample {
  std::vector<double> t;
  std::vector<CMatrix> values;
  /// max_k |M_{k+1} - M_k|_F * N
  double lipschitz = 0;
};

struct DiracSpectrum {
  double lo = 0, hi = 0;
  std::vector<double> eigenvalues;
};

/// Haar-distributed unitary with determinant 1.
UnitaryMatrix random_special_unitary(std::size_t n, std::mt19937_64 &rng);
/// V diag(e^{i angles}) V* for a Haar-random unitary V.
UnitaryMatrix unitary_with_angles(const std::vector<double> &angles,
                                  std::mt19937_64 &rng);
UnitaryMatrix diag_unitary(const std::vector<cplx> &entries);

/// Angular distance from the cut point to the nearest eigenvalue.
double spectral_gap(const UnitaryMatrix &g, const SpectralCut &cut);
/// Angle of z taken in the open interval (theta - 2 pi, theta).
double branch_angle(cplx z, const SpectralCut &cut);

/// Some cut avoids Spec(g) by more than tol.
bool avoids_some_cut(const UnitaryMatrix &g, const std::vector<SpectralCut> &cuts,
                     double tol = 1e-9);

CMatrix expm(const CMatrix &x);
double frobenius(const CMatrix &x);

/// Principal log with the branch cut on the ray through the cut point.
CMatrix matrix_log_spectral(const UnitaryMatrix &g, const SpectralCut &cut,
                            double min_gap = 1e-8);
/// (1/2 pi i) times the keyhole-contour integral of log(z)(z-g)^-1 dz:
/// circles of radius 2 and 1/2 joined along the cut ray.
CMatrix matrix_log_contour(const UnitaryMatrix &g, const SpectralCut &cut,
                           int quad_points, double min_gap = 1e-8);

/// Gauss-Legendre nodes and weights on [-1, 1].
const std::pair<std::vector<double>, std::vector<double>> &
gauss_legendre(std::size_t n);

enum class SectionVariant { circle_contraction, affine, exponential };
const char *to_string(SectionVariant v);

/// Full path from 1 (t = 0) to g (t = 1).
CMatrix local_section(const UnitaryMatrix &g, const SpectralCut &cut, double t,
                      SectionVariant variant);
/// -(1 - tau) lambda + tau g, without the prefix contraction.
CMatrix affine_segment(const UnitaryMatrix &g, const SpectralCut &cut,
                       double tau);
/// (-lambda)^s, the prefix path from 1 to -lambda.
cplx prefix_path(const SpectralCut &cut, double s);

/// phi(t_k) = psi_A(t_k)^-1 psi_B(t_k) on t_k = k/N.
PathSample transition_path(const UnitaryMatrix &g, const SpectralCut &cutA,
                           const SpectralCut &cutB, std::size_t N,
                           SectionVariant variant);
double cocycle_residual(const UnitaryMatrix &g,
                        const std::array<SpectralCut, 3> &cuts, std::size_t N,
                        SectionVariant variant);

/// Reparametrization with f(0)=0, f(1/2)=1/2, f(1)=1, flat at all three.
double smoothing(double t);
/// cos(2 pi f(t)) + i x sin(2 pi f(t)) on [0, 1/2], then
/// diag(e^{2 pi i f(t)}, e^{-2 pi i f(t)}).
CMatrix su2_basic_loop(const std::array<double, 3> &x, double t);

enum class LoopKind { basic, reversed, constant };
/// Degree of S^2 x S^1 -> SU(2) = S^3 by the midpoint rule on a grid^3
/// lattice of (theta, phi, t).
double suspension_degree(int grid, LoopKind kind = LoopKind::basic);

DiracSpectrum dirac_spectrum_analytic(const UnitaryMatrix &g, double lo,
                                      double hi);
/// Central differences on N points with psi_N = g psi_0.
DiracSpectrum dirac_spectrum_fd(const UnitaryMatrix &g, double lo, double hi,
                                std::size_t N);

struct WindowMatch {
  double mu = 0, mu_prime = 0;
  std::vector<double> dirac;          // Dirac eigenvalues in ]mu, mu'[
  std::vector<cplx> group;            // eigenvalues of g in the arc
  std::vector<std::pair<double, double>> bijection; // (Dirac, angle of g-ev)
  bool match = false;
};
WindowMatch spectral_window_match(const UnitaryMatrix &g, const SpectralCut &a,
                                  const SpectralCut &b);

} // namespace qg::classical
