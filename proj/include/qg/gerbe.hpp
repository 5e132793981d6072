#pragma once

// Quantum-gerbe objects over S^2_q and SU_q(n): the equator matrix x, its
// projection, the extended x with square-root generators, the unitary
// transition loop, resolvent extensions and the formal transition maps.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qg/algmatrix.hpp"
#include "qg/check.hpp"
#include "qg/rewrite.hpp"

namespace qg {

/// [[q K, L], [L', -K]] over s2q.
AlgMatrix build_x_equator();
/// x* = x and x^2 = 1.
std::vector<CheckResult> verify_involution(const AlgMatrix &x);
/// (1 + x) / 2.
AlgMatrix build_projection(const AlgMatrix &x);
/// P^2 = P and P* = P.
std::vector<CheckResult> verify_projection(const AlgMatrix &P);
/// s x s with s the 2x2 flip.
AlgMatrix flip_conjugate(const AlgMatrix &x);

/// Extension of SU_q(2) (deformed) or of the commutative q = 1 algebra
/// (undeformed) by f, f^-1 (and f_q, f_q^-1 when deformed). Built once.
const Presentation &extension_presentation(bool deformed);
AlgMatrix build_x_extended(bool deformed);
/// Checks on the extended matrix. Off the equator the deformed identities
/// report "indeterminate" when the residual involves f or f_q.
std::vector<CheckResult> verify_x_extended(const AlgMatrix &x, bool deformed);
/// Deformed: b -> -q c, f, f_q -> 1, onto s2q.
AlgMatrix restrict_to_equator(const AlgMatrix &x);
/// Undeformed: c -> -b, f -> 1 inside the commutative extension.
AlgMatrix restrict_undeformed(const AlgMatrix &x);

/// s2q with central C < S and C^2 + S^2 = 1.
const Presentation &loop_presentation();

struct LoopPiece {
  double t0 = 0, t1 = 0;
  AlgMatrix value;
};

struct SymbolicLoop {
  std::vector<LoopPiece> pieces;
};

/// C + i S x on [0, 1/2], diag(C + i S, C - i S) on [1/2, 1]. With
/// `require_involution` the x* = x, x^2 = 1 preconditions are enforced.
SymbolicLoop build_equator_loop(const AlgMatrix &x,
                                bool require_involution = true);
SymbolicLoop constant_loop(std::size_t n);
/// Unitarity per piece, continuity at interior breakpoints, basedness.
std::vector<CheckResult> verify_loop_unitary(const SymbolicLoop &loop);
/// Value of a piece at a point (C, S) of the unit circle.
AlgMatrix evaluate_piece(const LoopPiece &piece, const GaussianRational &C,
                         const GaussianRational &S);

/// Cut point: exact unit-modulus Gaussian rational, or symbolic.
struct Cut {
  std::optional<GaussianRational> exact;
  std::string symbol = "lam";
  static Cut parse(const std::string &text);
  std::string to_string() const;
};

struct ResolventExtension {
  std::shared_ptr<const Presentation> pres;
  std::shared_ptr<const Presentation> base;
  Cut cut;
  std::size_t n = 0;
  /// g and h as matrices over pres.
  std::shared_ptr<const AlgMatrix> g, h;
  /// lambda as an element of pres (a scalar or the central symbol).
  NCPolynomial lambda;
};

/// Adjoins h with (g - lambda) h = 1 = h (g - lambda) to suq:n.
ResolventExtension adjoin_resolvent(const std::string &base_label, const Cut &cut);
/// (g - lambda) h = 1, h (g - lambda) = 1, h (g - lambda) h = h.
std::vector<CheckResult> verify_resolvent(const ResolventExtension &ext);

/// Formal transition checks for cuts lambda, lambda' (and lambda'' for the
/// cocycle): endpoint values, prefix junction, free-group cancellation,
/// and the q = 1 numeric specialization.
std::vector<CheckResult> formal_transition(std::size_t n, const Cut &a,
                                           const Cut &b, const Cut &c,
                                           std::size_t samples,
                                           std::uint64_t seed);

/// Free-group words in the letters psi_name^(+-1), freely reduced.
struct FormalLetter {
  std::string name;
  int power = 1;
  friend bool operator==(const FormalLetter &, const FormalLetter &) = default;
};
using FormalWord = std::vector<FormalLetter>;
FormalWord free_reduce(const FormalWord &w);
FormalWord formal_phi(const std::string &a, const std::string &b);
FormalWord operator*(const FormalWord &x, const FormalWord &y);

struct ExtensionStats {
  std::size_t points = 0;
  double max_hermitian = 0;   // max |x* - x|_F
  double max_involution = 0;  // max |x^2 - 1|_F
  double median_idempotent = 0; // median |x^2 - x|_F
};
/// The undeformed extended x at q = 1, evaluated at random SU(2) points with |Im b| < 0.9.
ExtensionStats extension_numeric(std::size_t points, std::uint64_t seed);

/// Numeric resolvent relations at q = 1 for random g in SU(n).
double resolvent_numeric_residual(std::size_t n, const Cut &cut,
                                  std::size_t samples, std::uint64_t seed);

} // namespace qg
