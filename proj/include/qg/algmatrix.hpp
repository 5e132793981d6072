#pragma once

// Square matrices with entries in a presented algebra.

#include <functional>
#include <string>
#include <vector>

#include "qg/check.hpp"
#include "qg/rewrite.hpp"

namespace qg {

class AlgMatrix {
public:
  AlgMatrix(const Presentation &pres, std::size_t n);
  AlgMatrix(const Presentation &pres,
            std::vector<std::vector<NCPolynomial>> rows);
  static AlgMatrix identity(const Presentation &pres, std::size_t n);
  static AlgMatrix scalar(const Presentation &pres, std::size_t n,
                          const NCPolynomial &s);

  std::size_t n() const { return n_; }
  const Presentation &presentation() const { return *pres_; }
  NCPolynomial &at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const NCPolynomial &at(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }

  /// Entrywise normal forms.
  AlgMatrix normalized() const;
  /// Transpose composed with the entrywise star map.
  AlgMatrix star() const;
  AlgMatrix map_entries(const std::function<NCPolynomial(const NCPolynomial &)>
                            &f) const;

  friend AlgMatrix operator+(const AlgMatrix &a, const AlgMatrix &b);
  friend AlgMatrix operator-(const AlgMatrix &a, const AlgMatrix &b);
  /// Product with normalized entries.
  friend AlgMatrix operator*(const AlgMatrix &a, const AlgMatrix &b);
  friend AlgMatrix operator*(const NCPolynomial &s, const AlgMatrix &a);

  /// Bracketed rendering: [[q K, L], [L', -K]].
  std::string to_string() const;

private:
  const Presentation *pres_;
  std::size_t n_;
  std::vector<NCPolynomial> e_;
};

/// Entrywise verify_identity; fails carry "(i,j): residual" witnesses.
CheckResult verify_matrix_identity(const std::string &name, const AlgMatrix &lhs,
                                   const AlgMatrix &rhs);

} // namespace qg
