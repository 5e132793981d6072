#pragma once

// Exact scalars: Gaussian rationals and Laurent polynomials in the real
// deformation parameter q with Gaussian-rational coefficients.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qg {

class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class &re() const { return re_; }
  const mpq_class &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational &b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational &b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational &b) {
    return a *= b;
  }
  friend GaussianRational operator/(const GaussianRational &a,
                                    const GaussianRational &b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Renders "3/2", "-i", "3/2*i", "(1/2+3*i)".
  std::string to_string() const;
  // True when to_string() would print a leading minus sign.
  bool prints_negative() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Finite sum  sum_k c_k q^k  with c_k Gaussian rationals, no zero entries.
class LaurentScalar {
public:
  using Terms = std::map<int, GaussianRational>;

  LaurentScalar() = default;
  LaurentScalar(long c) : LaurentScalar(GaussianRational(c)) {}
  LaurentScalar(const GaussianRational &c, int exponent = 0);

  static LaurentScalar q(int exponent = 1) { return {GaussianRational(1), exponent}; }
  static LaurentScalar i() { return LaurentScalar(GaussianRational::i()); }
  static LaurentScalar rational(long num, long den = 1) {
    return LaurentScalar(GaussianRational(mpq_class(num, den)));
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// The q^0 coefficient when no other exponent occurs.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  GaussianRational constant_term() const;

  LaurentScalar conj() const;
  /// Inverse of a monomial c*q^k; throws std::domain_error otherwise.
  LaurentScalar inverse() const;
  /// Substitutes q -> q^-1.
  LaurentScalar invert_q() const;
  std::complex<double> eval(double q0) const;

  LaurentScalar operator-() const;
  LaurentScalar &operator+=(const LaurentScalar &o);
  LaurentScalar &operator-=(const LaurentScalar &o);
  LaurentScalar &operator*=(const LaurentScalar &o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar &b) {
    return a += b;
  }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar &b) {
    return a -= b;
  }
  friend LaurentScalar operator*(const LaurentScalar &a, const LaurentScalar &b);
  friend bool operator==(const LaurentScalar &a, const LaurentScalar &b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;
  bool prints_negative() const;

private:
  void add_term(int e, const GaussianRational &c);
  Terms terms_;
};

enum class ArithKind { add, sub, mul };

LaurentScalar scalar_arith(const LaurentScalar &a, const LaurentScalar &b,
                           ArithKind kind);
inline LaurentScalar conjugate(const LaurentScalar &a) { return a.conj(); }
/// Numeric value at q = q0; q0 must be positive.
std::complex<double> eval_at_q(const LaurentScalar &a, double q0);

} // namespace qg
