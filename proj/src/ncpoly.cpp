#include "qg/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qg {

MonomialOrder MonomialOrder::identity(std::size_t n) {
  std::vector<int> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = static_cast<int>(i);
  return MonomialOrder(std::move(r));
}

std::strong_ordering MonomialOrder::compare(const Word &u,
                                            const Word &v) const {
  if (u.size() != v.size())
    return u.size() <=> v.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    int a = rank(u[k]), b = rank(v[k]);
    if (a != b)
      return a <=> b;
  }
  return std::strong_ordering::equal;
}

Word concat(const Word &a, const Word &b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

NCPolynomial NCPolynomial::word(Word w, LaurentScalar c) {
  NCPolynomial p;
  p.add_term(std::move(w), c);
  return p;
}

LaurentScalar NCPolynomial::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void NCPolynomial::add_term(const Word &w, const LaurentScalar &c) {
  add_term(Word(w), c);
}

void NCPolynomial::add_term(Word &&w, const LaurentScalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r;
  for (const auto &[w, c] : terms_)
    r.terms_.emplace(w, -c);
  return r;
}

NCPolynomial &NCPolynomial::operator+=(const NCPolynomial &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

NCPolynomial &NCPolynomial::operator-=(const NCPolynomial &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

NCPolynomial &NCPolynomial::operator*=(const LaurentScalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, coef] : terms_)
    coef *= c;
  return *this;
}

NCPolynomial operator*(const NCPolynomial &a, const NCPolynomial &b) {
  NCPolynomial r;
  for (const auto &[u, cu] : a.terms_)
    for (const auto &[v, cv] : b.terms_)
      r.add_term(concat(u, v), cu * cv);
  return r;
}

NCPolynomial NCPolynomial::relabel(const std::vector<GenId> &map) const {
  NCPolynomial r;
  for (const auto &[w, c] : terms_) {
    Word out;
    out.reserve(w.size());
    for (GenId g : w) {
      if (g >= map.size())
        throw std::out_of_range("relabel: generator id outside map");
      out.push_back(map[g]);
    }
    r.add_term(std::move(out), c);
  }
  return r;
}

NCPolynomial poly_arith(const NCPolynomial &p, const NCPolynomial &r,
                        PolyArith kind) {
  switch (kind) {
  case PolyArith::add:
    return p + r;
  case PolyArith::sub:
    return p - r;
  case PolyArith::mul:
    return p * r;
  }
  return {};
}

NCPolynomial poly_scale(const NCPolynomial &p, const LaurentScalar &c) {
  return c * p;
}

namespace {

const NCPolynomial &image_of(const GeneratorMap &m, GenId g, const char *what) {
  if (g >= m.size() || !m[g])
    throw std::invalid_argument(std::string(what) + ": no image for generator #" +
                                std::to_string(g));
  return *m[g];
}

} // namespace

NCPolynomial apply_star(const NCPolynomial &p, const GeneratorMap &starmap) {
  NCPolynomial out;
  for (const auto &[w, c] : p.terms()) {
    NCPolynomial term(c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      term = term * image_of(starmap, *it, "apply_star");
    out += term;
  }
  return out;
}

NCPolynomial substitute(const NCPolynomial &p, const GeneratorMap &images) {
  NCPolynomial out;
  for (const auto &[w, c] : p.terms()) {
    NCPolynomial term(c);
    for (GenId g : w)
      term = term * image_of(images, g, "substitute");
    out += term;
  }
  return out;
}

NCPolynomial random_polynomial(std::size_t alphabet, std::mt19937_64 &rng,
                               std::size_t max_degree, std::size_t max_terms,
                               std::size_t first) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> letter(first, alphabet - 1);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<int> qexp(-2, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  NCPolynomial p;
  std::size_t k = nterms(rng);
  for (std::size_t t = 0; t < k; ++t) {
    Word w(deg(rng));
    for (auto &g : w)
      g = static_cast<GenId>(letter(rng));
    long re = num(rng), im = coin(rng) == 0 ? num(rng) : 0;
    if (re == 0 && im == 0)
      re = 1;
    p.add_term(w, LaurentScalar(GaussianRational(re, im), qexp(rng)));
  }
  return p;
}

TensorPoly TensorPoly::unit(std::size_t arity) {
  TensorPoly t(arity);
  t.add_term(Key(arity), 1);
  return t;
}

TensorPoly TensorPoly::pure(std::vector<Word> factors, LaurentScalar c) {
  TensorPoly t(factors.size());
  t.add_term(factors, c);
  return t;
}

void TensorPoly::add_term(const Key &k, const LaurentScalar &c) {
  if (k.size() != arity_)
    throw std::invalid_argument("tensor arity mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

TensorPoly &TensorPoly::operator+=(const TensorPoly &o) {
  for (const auto &[k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

TensorPoly &TensorPoly::operator-=(const TensorPoly &o) {
  for (const auto &[k, c] : o.terms_)
    add_term(k, -c);
  return *this;
}

TensorPoly operator*(const TensorPoly &a, const TensorPoly &b) {
  if (a.arity_ != b.arity_)
    throw std::invalid_argument("tensor arity mismatch");
  TensorPoly r(a.arity_);
  for (const auto &[ka, ca] : a.terms_)
    for (const auto &[kb, cb] : b.terms_) {
      TensorPoly::Key k(a.arity_);
      for (std::size_t s = 0; s < a.arity_; ++s)
        k[s] = concat(ka[s], kb[s]);
      r.add_term(k, ca * cb);
    }
  return r;
}

TensorPoly TensorPoly::expand_slot(
    std::size_t slot, const std::function<TensorPoly(const Word &)> &f) const {
  if (slot >= arity_)
    throw std::out_of_range("expand_slot");
  std::optional<TensorPoly> out;
  for (const auto &[k, c] : terms_) {
    TensorPoly img = f(k[slot]);
    if (!out)
      out.emplace(arity_ - 1 + img.arity());
    for (const auto &[ik, ic] : img.terms()) {
      Key nk;
      nk.reserve(arity_ - 1 + ik.size());
      nk.insert(nk.end(), k.begin(), k.begin() + static_cast<long>(slot));
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + static_cast<long>(slot) + 1, k.end());
      out->add_term(nk, c * ic);
    }
  }
  return out ? *out : TensorPoly(arity_ + 1);
}

NCPolynomial TensorPoly::multiply_out(
    const std::vector<std::function<NCPolynomial(const Word &)>> &slots) const {
  if (slots.size() != arity_)
    throw std::invalid_argument("multiply_out: slot count mismatch");
  NCPolynomial out;
  for (const auto &[k, c] : terms_) {
    NCPolynomial term(c);
    for (std::size_t s = 0; s < arity_; ++s)
      term = term * slots[s](k[s]);
    out += term;
  }
  return out;
}

} // namespace qg
