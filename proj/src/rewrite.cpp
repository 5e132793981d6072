#include "qg/rewrite.hpp"

#include <algorithm>
#include <iterator>

#include "qg/expr.hpp"

namespace qg {

std::string to_string(RelationSource s) {
  return s == RelationSource::eq4 ? "eq4" : "eq9";
}

GenId Presentation::add_generator(const std::string &name, bool central) {
  if (find(name))
    throw std::invalid_argument("duplicate generator name: " + name);
  // Central letters sort leftmost, so they must also be the smallest ids
  // for the sorting step to decrease words.
  if (central && !alphabet_.empty() && !alphabet_.back().central)
    throw std::invalid_argument("central generator " + name +
                                " must precede non-central ones");
  auto id = static_cast<GenId>(alphabet_.size());
  alphabet_.push_back({id, name, central});
  by_first_.emplace_back();
  return id;
}

std::optional<GenId> Presentation::find(const std::string &name) const {
  for (const auto &g : alphabet_)
    if (g.name == name)
      return g.id;
  if (auto it = aliases_.find(name); it != aliases_.end())
    return it->second;
  return std::nullopt;
}

GenId Presentation::id(const std::string &name) const {
  if (auto g = find(name))
    return *g;
  throw std::invalid_argument("unknown generator '" + name + "' in " + label_);
}

void Presentation::add_rule(Word lhs, NCPolynomial rhs) {
  if (lhs.size() < 2)
    throw std::invalid_argument("rewrite rule lhs must have length >= 2");
  for (GenId g : lhs)
    if (g >= alphabet_.size())
      throw std::invalid_argument("rule uses unknown generator");
  rules_.push_back({std::move(lhs), std::move(rhs)});
  std::size_t idx = rules_.size() - 1;
  auto &bucket = by_first_[rules_.back().lhs.front()];
  bucket.push_back(idx);
  std::stable_sort(bucket.begin(), bucket.end(), [&](auto a, auto b) {
    return rules_[a].lhs.size() > rules_[b].lhs.size();
  });
}

bool Presentation::has_central() const {
  return std::any_of(alphabet_.begin(), alphabet_.end(),
                     [](const auto &g) { return g.central; });
}

Word Presentation::sort_central(const Word &w) const {
  Word central, rest;
  for (GenId g : w)
    (alphabet_[g].central ? central : rest).push_back(g);
  if (central.empty())
    return w;
  std::sort(central.begin(), central.end());
  central.insert(central.end(), rest.begin(), rest.end());
  return central;
}

namespace {

struct Redex {
  std::size_t pos;
  std::size_t rule;
};

bool matches_at(const Word &w, std::size_t pos, const Word &lhs) {
  return pos + lhs.size() <= w.size() &&
         std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos));
}

// Leftmost position, longest lhs at that position.
std::optional<Redex> first_redex(const Word &w, const Presentation &pres) {
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos)
    for (std::size_t r : pres.rules_starting_with(w[pos]))
      if (matches_at(w, pos, pres.rules()[r].lhs))
        return Redex{pos, r};
  return std::nullopt;
}

std::vector<Redex> all_redexes(const Word &w, const Presentation &pres) {
  std::vector<Redex> out;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos)
    for (std::size_t r : pres.rules_starting_with(w[pos]))
      if (matches_at(w, pos, pres.rules()[r].lhs))
        out.push_back({pos, r});
  return out;
}

void expand_redex(const Word &w, const LaurentScalar &c, const Redex &rx,
                  const Presentation &pres, NCPolynomial::Terms &into) {
  const auto &rule = pres.rules()[rx.rule];
  auto pre_end = w.begin() + static_cast<long>(rx.pos);
  auto post_begin = pre_end + static_cast<long>(rule.lhs.size());
  for (const auto &[u, d] : rule.rhs.terms()) {
    Word nw;
    nw.reserve(w.size() - rule.lhs.size() + u.size());
    nw.insert(nw.end(), w.begin(), pre_end);
    nw.insert(nw.end(), u.begin(), u.end());
    nw.insert(nw.end(), post_begin, w.end());
    LaurentScalar coef = c * d;
    auto [it, inserted] = into.try_emplace(std::move(nw), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero())
        into.erase(it);
    }
  }
}

void accumulate(NCPolynomial::Terms &into, Word w, const LaurentScalar &c) {
  auto [it, inserted] = into.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      into.erase(it);
  }
}

NCPolynomial normalize_deterministic(const NCPolynomial &p,
                                     const Presentation &pres,
                                     std::size_t budget) {
  // Every rewrite produces strictly smaller words, so once the largest
  // pending word is taken no further contributions to it can arrive.
  NCPolynomial::Terms pending = p.terms();
  NCPolynomial result;
  const bool central = pres.has_central();
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    Word w = std::move(node.key());
    LaurentScalar c = std::move(node.mapped());
    if (central) {
      Word sorted = pres.sort_central(w);
      if (sorted != w) {
        accumulate(pending, std::move(sorted), c);
        continue;
      }
    }
    auto rx = first_redex(w, pres);
    if (!rx) {
      result.add_term(std::move(w), c);
      continue;
    }
    if (++steps > budget)
      throw BudgetExceeded("normalize: rule-application budget exceeded in " +
                           pres.label());
    expand_redex(w, c, *rx, pres, pending);
  }
  return result;
}

NCPolynomial normalize_randomized(const NCPolynomial &p,
                                  const Presentation &pres, std::size_t budget,
                                  std::mt19937_64 &rng) {
  NCPolynomial::Terms pending = p.terms();
  NCPolynomial result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
    auto it = std::next(pending.begin(), static_cast<long>(pick(rng)));
    auto node = pending.extract(it);
    Word w = std::move(node.key());
    LaurentScalar c = std::move(node.mapped());
    auto rxs = all_redexes(w, pres);
    Word sorted = pres.sort_central(w);
    bool can_sort = sorted != w;
    if (rxs.empty() && !can_sort) {
      result.add_term(std::move(w), c);
      continue;
    }
    if (++steps > budget)
      throw BudgetExceeded("normalize: rule-application budget exceeded in " +
                           pres.label());
    // Index rxs.size() stands for one central transposition step.
    std::size_t upper = can_sort ? rxs.size() : rxs.size() - 1;
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, upper)(rng);
    if (k == rxs.size()) {
      // One adjacent transposition bringing a central letter leftwards.
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool ci = pres.generator(w[i]).central;
        bool cj = pres.generator(w[i + 1]).central;
        if ((!ci && cj) || (ci && cj && w[i] > w[i + 1])) {
          std::swap(w[i], w[i + 1]);
          break;
        }
      }
      accumulate(pending, std::move(w), c);
    } else {
      expand_redex(w, c, rxs[k], pres, pending);
    }
  }
  // A word may have been emitted more than once; add_term merged them.
  return result;
}

} // namespace

NCPolynomial normalize(const NCPolynomial &p, const Presentation &pres,
                       NormalizeOptions opts) {
  std::size_t budget = opts.budget ? opts.budget : pres.budget();
  if (opts.rng)
    return normalize_randomized(p, pres, budget, *opts.rng);
  return normalize_deterministic(p, pres, budget);
}

TensorPoly normalize(const TensorPoly &t, const Presentation &pres) {
  TensorPoly out(t.arity());
  for (const auto &[key, c] : t.terms()) {
    // Expand the product of normalized factors.
    std::vector<std::pair<TensorPoly::Key, LaurentScalar>> acc{{{}, c}};
    for (const Word &w : key) {
      NCPolynomial nf = normalize(NCPolynomial::word(w), pres);
      std::vector<std::pair<TensorPoly::Key, LaurentScalar>> next;
      next.reserve(acc.size() * nf.size());
      for (const auto &[k, kc] : acc)
        for (const auto &[u, uc] : nf.terms()) {
          auto nk = k;
          nk.push_back(u);
          next.emplace_back(std::move(nk), kc * uc);
        }
      acc = std::move(next);
    }
    for (const auto &[k, kc] : acc)
      out.add_term(k, kc);
  }
  return out;
}

bool is_normal_word(const Word &w, const Presentation &pres) {
  return pres.sort_central(w) == w && !first_redex(w, pres);
}

OrientationReport check_rule_orientation(const Presentation &pres) {
  OrientationReport rep;
  const auto &rules = pres.rules();
  rep.rules_checked = rules.size();
  DegLex less;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (const auto &[u, c] : rules[r].rhs.terms()) {
      if (!less(u, rules[r].lhs)) {
        rep.ok = false;
        rep.offending.push_back(r);
        rep.messages.push_back("rule " + std::to_string(r) + ": " +
                               format_word(rules[r].lhs, pres) + " -> " +
                               format_expr(rules[r].rhs, pres) +
                               " is not decreasing at monomial " +
                               format_word(u, pres));
        break;
      }
    }
  }
  return rep;
}

ConfluenceReport check_local_confluence(const Presentation &pres,
                                        std::size_t max_extra_degree) {
  ConfluenceReport rep;
  // Explicit rules plus the centrality rules x C -> C x (C central, x not)
  // and C2 C1 -> C1 C2 (both central, C1 < C2) that sort_central encodes.
  std::vector<RewriteRule> rules = pres.rules();
  const std::size_t explicit_rules = rules.size();
  for (const auto &x : pres.alphabet())
    for (const auto &y : pres.alphabet()) {
      if (!y.central)
        continue;
      if (!x.central || x.id > y.id)
        rules.push_back({Word{x.id, y.id}, NCPolynomial::word(Word{y.id, x.id})});
    }
  rep.rules = rules.size();
  std::size_t max_lhs = 0;
  for (const auto &r : rules)
    max_lhs = std::max(max_lhs, r.lhs.size());
  const std::size_t max_overlap = 2 * max_lhs + max_extra_degree;

  auto reduce_pair = [&](std::size_t ra, std::size_t rb, const Word &overlap,
                         const NCPolynomial &route_a,
                         const NCPolynomial &route_b) {
    ++rep.pairs_checked;
    NCPolynomial diff = normalize(route_a - route_b, pres);
    if (!diff.is_zero()) {
      rep.ok = false;
      rep.failures.push_back({ra, rb, overlap, diff});
      std::string name_a = ra < explicit_rules ? "rule " + std::to_string(ra)
                                               : "centrality rule";
      std::string name_b = rb < explicit_rules ? "rule " + std::to_string(rb)
                                               : "centrality rule";
      rep.messages.push_back(name_a + " / " + name_b + " on " +
                             format_word(overlap, pres) + ": residual " +
                             format_expr(diff, pres));
    }
  };

  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word &la = rules[a].lhs;
      const Word &lb = rules[b].lhs;
      // Suffix of la equal to prefix of lb.
      for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
        if (!std::equal(la.end() - static_cast<long>(k), la.end(), lb.begin()))
          continue;
        Word w = concat(la, Word(lb.begin() + static_cast<long>(k), lb.end()));
        if (w.size() > max_overlap)
          continue;
        NCPolynomial ra = rules[a].rhs *
                          NCPolynomial::word(Word(lb.begin() + static_cast<long>(k),
                                                  lb.end()));
        NCPolynomial rb =
            NCPolynomial::word(Word(la.begin(), la.end() - static_cast<long>(k))) *
            rules[b].rhs;
        reduce_pair(a, b, w, ra, rb);
      }
      // lb strictly inside la (or equal lhs for distinct rules).
      if (a != b && lb.size() <= la.size()) {
        for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (!matches_at(la, pos, lb))
            continue;
          if (lb.size() == la.size() && a > b)
            continue;
          NCPolynomial rb =
              NCPolynomial::word(Word(la.begin(), la.begin() + static_cast<long>(pos))) *
              rules[b].rhs *
              NCPolynomial::word(
                  Word(la.begin() + static_cast<long>(pos + lb.size()), la.end()));
          reduce_pair(a, b, la, rules[a].rhs, rb);
        }
      }
    }
  return rep;
}

IdentityResult verify_identity(const NCPolynomial &lhs, const NCPolynomial &rhs,
                               const Presentation &pres) {
  IdentityResult r;
  r.residual = normalize(lhs - rhs, pres);
  r.holds = r.residual.is_zero();
  return r;
}

void certify(const Presentation &pres, bool require_confluence) {
  auto orient = check_rule_orientation(pres);
  if (!orient.ok)
    throw std::logic_error("presentation " + pres.label() +
                           " fails orientation: " + orient.messages.front());
  if (require_confluence) {
    auto conf = check_local_confluence(pres);
    if (!conf.ok)
      throw std::logic_error("presentation " + pres.label() +
                             " is not locally confluent: " +
                             conf.messages.front());
  }
}

} // namespace qg
