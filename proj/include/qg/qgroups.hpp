#pragma once

// Quantum matrix algebras, SU_q(n), SU_q(2), the Podles sphere, quantum
// determinants and minors, Hopf structure maps and their verifiers.

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qg/algmatrix.hpp"
#include "qg/check.hpp"
#include "qg/rewrite.hpp"

namespace qg {

/// M_q(n): generators g11..gnn in row-major order. Certified when
/// `certify_now` (n <= 3). The antipode sign of `conv` is used for the
/// homogenized Hopf structure attached to the result.
Presentation build_quantum_matrix_algebra(std::size_t n, ConventionTag conv,
                                          bool certify_now = true);

/// sum over permutations s of `cols` of (-q)^(e*l(s)) g[r1,c_s(1)]...;
/// e = -1 for eq4, +1 for eq9. Indices are 1-based.
NCPolynomial quantum_determinant(const Presentation &pres,
                                 const std::vector<std::size_t> &rows,
                                 const std::vector<std::size_t> &cols);
NCPolynomial quantum_determinant(const Presentation &pres);
/// Determinant of the matrix with row i and column j deleted (1-based).
NCPolynomial quantum_minor(const Presentation &pres, std::size_t i,
                           std::size_t j);

/// S(g_ij) = (-1)^(i+j) q^(s(i-j)) X_ji. s = 0 is the unweighted sign form.
GeneratorMap antipode_from_minors(const Presentation &pres, int s);
/// Matrix coproduct and counit with the given antipode; `homogenize`
/// records det_q as the unit substitute.
HopfStructure matrix_hopf(const Presentation &pres, int s, bool homogenize);

/// M_q(n) with Hopf structure and star g_ij* = S(g_ji); 2 <= n <= 3.
Presentation build_suqn(std::size_t n, ConventionTag conv);
/// Generators b < c < a < d with the determinant relation folded in.
Presentation build_suq2();
/// SU_q(2) modulo b + q c, on K (=c), L (=a), L' (=d).
Presentation build_podles_sphere();
/// b -> -q c, renaming onto the sphere generators, normalized.
NCPolynomial project_to_sphere(const NCPolynomial &p);

/// Labels: mq:2 mq:3 suq:2 suq:3 suq2 s2q; optional ":eq4" suffix on the
/// matrix presets selects the other relation source. Built once.
const Presentation &preset(const std::string &label);
std::vector<std::string> preset_labels();

/// Copy of `base` with extra generators placed before all of base's ids.
/// Rules, star, aliases and matrix layout are carried over; Hopf data is not.
Presentation prepend_generators(
    const Presentation &base,
    const std::vector<std::pair<std::string, bool>> &extra);

/// (g_ij) as a matrix over pres (requires a matrix layout).
AlgMatrix generator_matrix(const Presentation &pres);

TensorPoly coproduct(const NCPolynomial &p, const Presentation &pres);
LaurentScalar counit(const NCPolynomial &p, const Presentation &pres);
NCPolynomial antipode(const NCPolynomial &p, const Presentation &pres);

enum class HopfKind { coproduct, counit, antipode };
using HopfValue = std::variant<TensorPoly, LaurentScalar, NCPolynomial>;
HopfValue hopf_apply(const NCPolynomial &p, const Presentation &pres,
                     HopfKind kind);

/// Coassociativity, counit and antipode laws on generators and on
/// `samples` random elements of degree <= max_degree; compatibility of the
/// structure maps with every rewrite rule.
std::vector<CheckResult> verify_hopf_axioms(const Presentation &pres,
                                            std::size_t max_degree,
                                            std::uint64_t seed,
                                            std::size_t samples = 4);
/// g g* = 1 = g* g (or det_q times 1 when homogenized).
std::vector<CheckResult> verify_unitarity(const Presentation &pres);
/// g_ij det_q = det_q g_ij for all i, j.
std::vector<CheckResult> verify_det_central(const Presentation &pres);

/// Antipode exponent signs in {+1, -1, 0} that pass the antipode law at
/// sizes 2 and 3 for the given relation source.
std::vector<int> admissible_antipode_signs(RelationSource src);
/// Sign selection, b* = -qc reproduction, and the q -> q^-1 exchange of
/// the two relation sources.
std::vector<CheckResult> adjudicate_conventions();

/// q -> q^-1 on every coefficient.
NCPolynomial invert_q(const NCPolynomial &p);
/// Commutative evaluation: generator id k -> values[k], q -> q0.
std::complex<double> eval_commutative(const NCPolynomial &p,
                                      const std::vector<std::complex<double>> &values,
                                      double q0 = 1.0);

} // namespace qg
