#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qg/classical.hpp"

namespace qg::classical {

DiracSpectrum dirac_spectrum_analytic(const UnitaryMatrix &g, double lo,
                                      double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("spectral window must be finite and nonempty");
  DiracSpectrum s{lo, hi, {}};
  for (double mu : g.angles()) {
    auto m0 = static_cast<long>(std::floor((lo - mu) / kTwoPi));
    auto m1 = static_cast<long>(std::ceil((hi - mu) / kTwoPi));
    for (long m = m0; m <= m1; ++m) {
      double e = kTwoPi * static_cast<double>(m) + mu;
      if (e > lo && e < hi)
        s.eigenvalues.push_back(e);
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

DiracSpectrum dirac_spectrum_fd(const UnitaryMatrix &g, double lo, double hi,
                                std::size_t N) {
  if (N < 256)
    throw std::invalid_argument("finite-difference grid too small");
  if (!(lo < hi))
    throw std::invalid_argument("spectral window must be nonempty");
  // psi_N = g psi_0 decouples in an eigenbasis of g into scalar twists.
  const double h = 1.0 / static_cast<double>(N);
  DiracSpectrum s{lo, hi, {}};
  const auto n = static_cast<Eigen::Index>(N);
  for (cplx z : g.eigenvalues()) {
    cplx tw = z / std::abs(z);
    CMatrix D = CMatrix::Zero(n, n);
    const cplx c(0, -1 / (2 * h));
    for (Eigen::Index k = 0; k < n; ++k) {
      // -i (psi_{k+1} - psi_{k-1}) / 2h with psi_{N} = tw psi_0 and
      // psi_{-1} = conj(tw) psi_{N-1}.
      if (k + 1 < n)
        D(k, k + 1) += c;
      else
        D(k, 0) += c * tw;
      if (k >= 1)
        D(k, k - 1) -= c;
      else
        D(k, n - 1) -= c * std::conj(tw);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(D, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < n; ++k) {
      double e = es.eigenvalues()(k);
      if (e > lo && e < hi)
        s.eigenvalues.push_back(e);
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

WindowMatch spectral_window_match(const UnitaryMatrix &g, const SpectralCut &a,
                                  const SpectralCut &b) {
  for (const auto &c : {a, b})
    if (spectral_gap(g, c) < 1e-12)
      throw std::domain_error("eigenvalue lies on a cut");
  WindowMatch m;
  m.mu = std::min(a.theta, b.theta);
  m.mu_prime = std::max(a.theta, b.theta);
  if (m.mu == m.mu_prime)
    throw std::invalid_argument("cuts must be distinct");
  m.dirac = dirac_spectrum_analytic(g, m.mu, m.mu_prime).eigenvalues;
  // Arc from lambda to lambda' counter-clockwise: 0 < arg(z/lambda) and
  // arg(z/lambda) < arg(lambda'/lambda), both measured in [0, 2 pi).
  const cplx lam = std::polar(1.0, m.mu), lamp = std::polar(1.0, m.mu_prime);
  auto rel = [&](cplx z) {
    double r = std::arg(z * std::conj(lam));
    return r < 0 ? r + kTwoPi : r;
  };
  const double span = rel(lamp);
  std::vector<std::pair<double, cplx>> in_arc;
  for (cplx z : g.eigenvalues()) {
    double r = rel(z);
    if (r > 0 && r < span)
      in_arc.emplace_back(r, z);
  }
  std::sort(in_arc.begin(), in_arc.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  for (const auto &[r, z] : in_arc)
    m.group.push_back(z);
  m.match = m.group.size() == m.dirac.size();
  if (m.match)
    for (std::size_t k = 0; k < m.dirac.size(); ++k)
      m.bijection.emplace_back(m.dirac[k], m.mu + in_arc[k].first);
  return m;
}

} // namespace qg::classical
