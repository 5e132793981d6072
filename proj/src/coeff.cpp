#include "qg/coeff.hpp"

#include <cmath>

namespace qg {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero())
    throw std::domain_error("division by zero Gaussian rational");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

bool GaussianRational::prints_negative() const {
  return sgn(re_) < 0 || (sgn(re_) == 0 && sgn(im_) < 0);
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0)
    return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1)
      return "i";
    if (im_ == -1)
      return "-i";
    return im_.get_str() + "*i";
  }
  std::string out = "(" + re_.get_str();
  mpq_class a = abs(im_);
  out += sgn(im_) < 0 ? "-" : "+";
  if (a != 1)
    out += a.get_str() + "*";
  return out + "i)";
}

LaurentScalar::LaurentScalar(const GaussianRational &c, int exponent) {
  if (!c.is_zero())
    terms_.emplace(exponent, c);
}

void LaurentScalar::add_term(int e, const GaussianRational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second.is_one();
}

GaussianRational LaurentScalar::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? GaussianRational() : it->second;
}

LaurentScalar LaurentScalar::conj() const {
  LaurentScalar r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(e, c.conj());
  return r;
}

LaurentScalar LaurentScalar::inverse() const {
  if (!is_monomial())
    throw std::domain_error("only monomial scalars c*q^k are invertible: " +
                            to_string());
  const auto &[e, c] = *terms_.begin();
  return LaurentScalar(c.inverse(), -e);
}

LaurentScalar LaurentScalar::invert_q() const {
  LaurentScalar r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(-e, c);
  return r;
}

std::complex<double> LaurentScalar::eval(double q0) const {
  std::complex<double> s = 0;
  for (const auto &[e, c] : terms_)
    s += c.to_complex() * std::pow(q0, e);
  return s;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(e, -c);
  return r;
}

LaurentScalar &LaurentScalar::operator+=(const LaurentScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentScalar &LaurentScalar::operator-=(const LaurentScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar &a, const LaurentScalar &b) {
  LaurentScalar r;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentScalar &LaurentScalar::operator*=(const LaurentScalar &o) {
  *this = *this * o;
  return *this;
}

bool LaurentScalar::prints_negative() const {
  return !terms_.empty() && terms_.begin()->second.prints_negative();
}

// Ascending exponents: "3/2*i*q^-2 + q".
std::string LaurentScalar::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    bool neg = c.prints_negative();
    GaussianRational mag = neg ? -c : c;
    std::string coef = mag.to_string();
    std::string qpart;
    if (e == 1)
      qpart = "q";
    else if (e != 0)
      qpart = "q^" + std::to_string(e);
    std::string body;
    if (qpart.empty())
      body = coef;
    else if (mag.is_one())
      body = qpart;
    else
      body = coef + "*" + qpart;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

LaurentScalar scalar_arith(const LaurentScalar &a, const LaurentScalar &b,
                           ArithKind kind) {
  switch (kind) {
  case ArithKind::add:
    return a + b;
  case ArithKind::sub:
    return a - b;
  case ArithKind::mul:
    return a * b;
  }
  return {};
}

std::complex<double> eval_at_q(const LaurentScalar &a, double q0) {
  if (!(q0 > 0))
    throw std::domain_error("eval_at_q: q must be positive");
  return a.eval(q0);
}

} // namespace qg
