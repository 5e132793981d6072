#include "qg/algmatrix.hpp"

#include <stdexcept>

#include "qg/expr.hpp"

namespace qg {

AlgMatrix::AlgMatrix(const Presentation &pres, std::size_t n)
    : pres_(&pres), n_(n), e_(n * n) {}

AlgMatrix::AlgMatrix(const Presentation &pres,
                     std::vector<std::vector<NCPolynomial>> rows)
    : pres_(&pres), n_(rows.size()) {
  e_.reserve(n_ * n_);
  for (auto &r : rows) {
    if (r.size() != n_)
      throw std::invalid_argument("AlgMatrix: rows must form a square");
    for (auto &p : r)
      e_.push_back(std::move(p));
  }
}

AlgMatrix AlgMatrix::identity(const Presentation &pres, std::size_t n) {
  return scalar(pres, n, NCPolynomial(1));
}

AlgMatrix AlgMatrix::scalar(const Presentation &pres, std::size_t n,
                            const NCPolynomial &s) {
  AlgMatrix m(pres, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = s;
  return m;
}

AlgMatrix AlgMatrix::normalized() const {
  return map_entries([&](const NCPolynomial &p) { return normalize(p, *pres_); });
}

AlgMatrix AlgMatrix::star() const {
  if (!pres_->star())
    throw std::invalid_argument("AlgMatrix::star: " + pres_->label() +
                                " has no star structure");
  AlgMatrix m(*pres_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m.at(i, j) = normalize(apply_star(at(j, i), *pres_->star()), *pres_);
  return m;
}

AlgMatrix AlgMatrix::map_entries(
    const std::function<NCPolynomial(const NCPolynomial &)> &f) const {
  AlgMatrix m(*pres_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k)
    m.e_[k] = f(e_[k]);
  return m;
}

static void check_compatible(const AlgMatrix &a, const AlgMatrix &b) {
  if (a.n() != b.n() || &a.presentation() != &b.presentation())
    throw std::invalid_argument("AlgMatrix: size or presentation mismatch");
}

AlgMatrix operator+(const AlgMatrix &a, const AlgMatrix &b) {
  check_compatible(a, b);
  AlgMatrix m = a;
  for (std::size_t k = 0; k < m.e_.size(); ++k)
    m.e_[k] += b.e_[k];
  return m;
}

AlgMatrix operator-(const AlgMatrix &a, const AlgMatrix &b) {
  check_compatible(a, b);
  AlgMatrix m = a;
  for (std::size_t k = 0; k < m.e_.size(); ++k)
    m.e_[k] -= b.e_[k];
  return m;
}

AlgMatrix operator*(const AlgMatrix &a, const AlgMatrix &b) {
  check_compatible(a, b);
  AlgMatrix m(a.presentation(), a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      NCPolynomial s;
      for (std::size_t k = 0; k < a.n(); ++k)
        s += a.at(i, k) * b.at(k, j);
      m.at(i, j) = normalize(s, a.presentation());
    }
  return m;
}

AlgMatrix operator*(const NCPolynomial &s, const AlgMatrix &a) {
  return a.map_entries([&](const NCPolynomial &p) { return s * p; });
}

std::string AlgMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j)
        out += ", ";
      out += format_expr(at(i, j), *pres_);
    }
    out += "]";
  }
  return out + "]";
}

CheckResult verify_matrix_identity(const std::string &name, const AlgMatrix &lhs,
                                   const AlgMatrix &rhs) {
  CheckResult r{name, Status::holds, {}, {}};
  for (std::size_t i = 0; i < lhs.n(); ++i)
    for (std::size_t j = 0; j < lhs.n(); ++j) {
      auto v = verify_identity(lhs.at(i, j), rhs.at(i, j), lhs.presentation());
      if (!v.holds) {
        r.status = Status::fails;
        if (!r.witness.empty())
          r.witness += "; ";
        r.witness += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     "): " + format_expr(v.residual, lhs.presentation());
      }
    }
  return r;
}

} // namespace qg
