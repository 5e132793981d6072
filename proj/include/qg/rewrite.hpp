#pragma once

// Presentations by oriented rewrite rules, normalization to canonical form,
// orientation and local-confluence certification, identity verification.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qg/ncpoly.hpp"

namespace qg {

struct RewriteRule {
  Word lhs;
  NCPolynomial rhs;
};

/// Which printed form of the quantum-matrix relations is used.
enum class RelationSource { eq4, eq9 };

struct ConventionTag {
  RelationSource relation_source = RelationSource::eq9;
  /// s in S(g_ij) = (-q)^(s(i-j)) X_ji.
  int antipode_exponent_sign = +1;
};

std::string to_string(RelationSource s);

struct HopfStructure {
  std::vector<std::optional<TensorPoly>> coproduct;
  std::vector<std::optional<LaurentScalar>> counit;
  GeneratorMap antipode;
  /// Set when det_q = 1 is not a rewrite rule: antipode identities are then
  /// checked with det_q in place of the unit.
  std::optional<NCPolynomial> homogenizer;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Presentation {
public:
  Presentation() = default;
  explicit Presentation(std::string label) : label_(std::move(label)) {}

  GenId add_generator(const std::string &name, bool central = false);
  void add_alias(const std::string &alias, GenId g) { aliases_[alias] = g; }
  void add_rule(Word lhs, NCPolynomial rhs);
  void set_star(GeneratorMap star) { star_ = std::move(star); }
  void set_hopf(HopfStructure h) { hopf_ = std::move(h); }
  void set_convention(ConventionTag c) { convention_ = c; }
  void set_label(std::string l) { label_ = std::move(l); }
  void set_budget(std::size_t b) { budget_ = b; }
  /// Generator ids of the defining matrix (g_ij), when there is one.
  void set_matrix(std::vector<std::vector<GenId>> m) { matrix_ = std::move(m); }

  const std::string &label() const { return label_; }
  const std::vector<GeneratorSymbol> &alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  const GeneratorSymbol &generator(GenId g) const { return alphabet_.at(g); }
  /// Resolves a display name or alias.
  std::optional<GenId> find(const std::string &name) const;
  GenId id(const std::string &name) const;
  NCPolynomial gen(const std::string &name) const {
    return NCPolynomial::generator(id(name));
  }
  const std::map<std::string, GenId> &aliases() const { return aliases_; }

  const std::vector<RewriteRule> &rules() const { return rules_; }
  const std::optional<GeneratorMap> &star() const { return star_; }
  const std::optional<HopfStructure> &hopf() const { return hopf_; }
  const std::optional<ConventionTag> &convention() const { return convention_; }
  MonomialOrder order() const { return MonomialOrder::identity(size()); }
  std::size_t budget() const { return budget_; }
  const std::vector<std::vector<GenId>> &matrix() const { return matrix_; }
  bool has_central() const;

  /// Rules starting with generator g, longest lhs first.
  const std::vector<std::size_t> &rules_starting_with(GenId g) const {
    return by_first_[g];
  }
  /// Central generators moved leftmost (stable), sorted among themselves.
  Word sort_central(const Word &w) const;

private:
  std::string label_;
  std::vector<GeneratorSymbol> alphabet_;
  std::map<std::string, GenId> aliases_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::optional<GeneratorMap> star_;
  std::optional<HopfStructure> hopf_;
  std::optional<ConventionTag> convention_;
  std::vector<std::vector<GenId>> matrix_;
  std::size_t budget_ = 1'000'000;
};

struct NormalizeOptions {
  /// Rule applications allowed; 0 means the presentation's default.
  std::size_t budget = 0;
  /// When set, redexes and terms are picked at random (for strategy
  /// independence checks) instead of leftmost / largest-first.
  std::mt19937_64 *rng = nullptr;
};

NCPolynomial normalize(const NCPolynomial &p, const Presentation &pres,
                       NormalizeOptions opts = {});
TensorPoly normalize(const TensorPoly &t, const Presentation &pres);
bool is_normal_word(const Word &w, const Presentation &pres);

struct OrientationReport {
  bool ok = true;
  std::size_t rules_checked = 0;
  /// Indices of rules with a rhs monomial >= lhs.
  std::vector<std::size_t> offending;
  std::vector<std::string> messages;
};

OrientationReport check_rule_orientation(const Presentation &pres);

struct CriticalPairFailure {
  std::size_t rule_a = 0, rule_b = 0;
  Word overlap;
  NCPolynomial residual;
};

struct ConfluenceReport {
  bool ok = true;
  std::size_t rules = 0;
  std::size_t pairs_checked = 0;
  std::vector<CriticalPairFailure> failures;
  std::vector<std::string> messages;
};

/// Reduces every overlap / inclusion ambiguity of the rule set (implicit
/// centrality rules included) both ways and reports surviving differences.
/// Overlaps longer than 2*max_lhs + max_extra_degree are skipped.
ConfluenceReport check_local_confluence(const Presentation &pres,
                                        std::size_t max_extra_degree = 0);

struct IdentityResult {
  bool holds = false;
  NCPolynomial residual;
  explicit operator bool() const { return holds; }
};

IdentityResult verify_identity(const NCPolynomial &lhs, const NCPolynomial &rhs,
                               const Presentation &pres);

/// Throws std::logic_error if orientation or confluence fails.
void certify(const Presentation &pres, bool require_confluence = true);

} // namespace qg
