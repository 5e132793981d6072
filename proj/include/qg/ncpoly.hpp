#pragma once

// Words, noncommutative polynomials over LaurentScalar, tensor powers and
// the star anti-involution.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qg/coeff.hpp"

namespace qg {

using GenId = std::uint16_t;

struct GeneratorSymbol {
  GenId id = 0;
  std::string name;
  bool central = false;
};

/// Generator ids in left-to-right order. The empty word is the unit.
using Word = std::vector<GenId>;

/// Degree first, then leftmost difference by generator id.
struct DegLex {
  bool operator()(const Word &u, const Word &v) const {
    if (u.size() != v.size())
      return u.size() < v.size();
    return u < v;
  }
};

/// Deg-lex order with an explicit rank for every generator id.
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  /// rank[id] = id, the order used by every Presentation.
  static MonomialOrder identity(std::size_t n);

  std::strong_ordering compare(const Word &u, const Word &v) const;
  int rank(GenId g) const { return g < rank_.size() ? rank_[g] : g; }

private:
  std::vector<int> rank_;
};

inline std::strong_ordering monomial_compare(const Word &u, const Word &v,
                                             const MonomialOrder &ord) {
  return ord.compare(u, v);
}

Word concat(const Word &a, const Word &b);

class NCPolynomial {
public:
  using Terms = std::map<Word, LaurentScalar, DegLex>;

  NCPolynomial() = default;
  NCPolynomial(const LaurentScalar &c) { add_term({}, c); }
  NCPolynomial(long c) : NCPolynomial(LaurentScalar(c)) {}
  static NCPolynomial generator(GenId g) { return word(Word{g}); }
  static NCPolynomial word(Word w, LaurentScalar c = 1);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest word in deg-lex order; the polynomial must be nonzero.
  const Word &leading_word() const { return terms_.rbegin()->first; }
  std::size_t degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
  }
  LaurentScalar coefficient(const Word &w) const;

  void add_term(const Word &w, const LaurentScalar &c);
  void add_term(Word &&w, const LaurentScalar &c);

  NCPolynomial operator-() const;
  NCPolynomial &operator+=(const NCPolynomial &o);
  NCPolynomial &operator-=(const NCPolynomial &o);
  NCPolynomial &operator*=(const LaurentScalar &c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial &b) {
    return a += b;
  }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial &b) {
    return a -= b;
  }
  friend NCPolynomial operator*(const NCPolynomial &a, const NCPolynomial &b);
  friend NCPolynomial operator*(const LaurentScalar &c, NCPolynomial p) {
    return p *= c;
  }
  friend bool operator==(const NCPolynomial &a, const NCPolynomial &b) {
    return a.terms_ == b.terms_;
  }

  /// Replaces every generator id via `map` (ids absent from the map are
  /// rejected).
  NCPolynomial relabel(const std::vector<GenId> &map) const;

private:
  Terms terms_;
};

enum class PolyArith { add, sub, mul };

/// Free-algebra arithmetic; no relation is applied.
NCPolynomial poly_arith(const NCPolynomial &p, const NCPolynomial &r,
                        PolyArith kind);
NCPolynomial poly_scale(const NCPolynomial &p, const LaurentScalar &c);

/// Generator-wise images; index = generator id. An empty optional slot
/// means "undefined".
using GeneratorMap = std::vector<std::optional<NCPolynomial>>;

/// Reverses words, substitutes star images and conjugates coefficients.
/// Throws std::invalid_argument for a generator without a star image.
NCPolynomial apply_star(const NCPolynomial &p, const GeneratorMap &starmap);

/// Algebra homomorphism of free algebras determined by generator images.
NCPolynomial substitute(const NCPolynomial &p, const GeneratorMap &images);

/// Random element: up to max_terms words of degree <= max_degree over
/// generator ids [first, alphabet), coefficients small Gaussian-rational
/// Laurent monomials.
NCPolynomial random_polynomial(std::size_t alphabet, std::mt19937_64 &rng,
                               std::size_t max_degree,
                               std::size_t max_terms = 3, std::size_t first = 0);

/// Finite sum of k-fold pure tensors w_1 (x) ... (x) w_k.
class TensorPoly {
public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, LaurentScalar>;

  explicit TensorPoly(std::size_t arity = 2) : arity_(arity) {}
  static TensorPoly unit(std::size_t arity);
  static TensorPoly pure(std::vector<Word> factors, LaurentScalar c = 1);

  std::size_t arity() const { return arity_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key &k, const LaurentScalar &c);
  TensorPoly &operator+=(const TensorPoly &o);
  TensorPoly &operator-=(const TensorPoly &o);
  friend TensorPoly operator-(TensorPoly a, const TensorPoly &b) {
    return a -= b;
  }
  /// Componentwise product (u1(x)v1)(u2(x)v2) = u1u2 (x) v1v2.
  friend TensorPoly operator*(const TensorPoly &a, const TensorPoly &b);
  friend bool operator==(const TensorPoly &a, const TensorPoly &b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// sum c * f(w_slot) in place of slot `slot`, where f returns a tensor
  /// of arity m; the result has arity arity()-1+m.
  TensorPoly expand_slot(std::size_t slot,
                         const std::function<TensorPoly(const Word &)> &f) const;
  /// Collapses all slots by concatenation after mapping each slot through
  /// the given function.
  NCPolynomial multiply_out(
      const std::vector<std::function<NCPolynomial(const Word &)>> &slots) const;

private:
  std::size_t arity_;
  Terms terms_;
};

} // namespace qg
