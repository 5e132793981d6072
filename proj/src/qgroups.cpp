#include "qg/qgroups.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qg/expr.hpp"

namespace qg {

namespace {

NCPolynomial W(std::initializer_list<GenId> w, LaurentScalar c = 1) {
  return NCPolynomial::word(Word(w), c);
}

std::string gname(std::size_t i, std::size_t j) {
  return "g" + std::to_string(i) + std::to_string(j);
}

int det_exponent_sign(const Presentation &pres) {
  if (!pres.convention())
    return +1;
  return pres.convention()->relation_source == RelationSource::eq4 ? -1 : +1;
}

std::size_t inversions(const std::vector<std::size_t> &p) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b])
        ++n;
  return n;
}

// Four relation families, eq4 form: for i<j, k<m
//   g_im g_ik = q g_ik g_im,  g_jm g_im = q g_im g_jm,
//   g_im g_jk = g_jk g_im,    g_ik g_jm - g_jm g_ik = (q^-1 - q) g_im g_jk.
void add_eq4_relations(Presentation &p, std::size_t n,
                       const std::vector<std::vector<GenId>> &g) {
  const LaurentScalar q = LaurentScalar::q();
  const LaurentScalar qdiff = LaurentScalar::q(-1) - q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = k + 1; m < n; ++m)
        p.add_rule({g[i][m], g[i][k]}, W({g[i][k], g[i][m]}, q));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        p.add_rule({g[j][m], g[i][m]}, W({g[i][m], g[j][m]}, q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) {
          p.add_rule({g[j][k], g[i][m]}, W({g[i][m], g[j][k]}));
          // g_jm g_ik = g_ik g_jm - (q^-1 - q) g_im g_jk
          p.add_rule({g[j][m], g[i][k]},
                     W({g[i][k], g[j][m]}) - W({g[i][m], g[j][k]}, qdiff));
        }
}

// eq9 form, written out for general n: for i<j, k<m
//   g_ik g_im = q g_im g_ik,  g_ik g_jk = q g_jk g_ik,
//   g_im g_jk = g_jk g_im,    g_ik g_jm - g_jm g_ik = (q - q^-1) g_im g_jk.
void add_eq9_relations(Presentation &p, std::size_t n,
                       const std::vector<std::vector<GenId>> &g) {
  const LaurentScalar qinv = LaurentScalar::q(-1);
  const LaurentScalar qdiff = LaurentScalar::q() - qinv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = k + 1; m < n; ++m)
        p.add_rule({g[i][m], g[i][k]}, W({g[i][k], g[i][m]}, qinv));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        p.add_rule({g[j][m], g[i][m]}, W({g[i][m], g[j][m]}, qinv));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) {
          p.add_rule({g[j][k], g[i][m]}, W({g[i][m], g[j][k]}));
          p.add_rule({g[j][m], g[i][k]},
                     W({g[i][k], g[j][m]}) - W({g[i][m], g[j][k]}, qdiff));
        }
}

std::vector<std::vector<GenId>> layout_or_throw(const Presentation &pres) {
  if (pres.matrix().empty())
    throw std::invalid_argument(pres.label() + " has no generator matrix");
  return pres.matrix();
}

GeneratorMap star_from_antipode(const Presentation &pres,
                                const GeneratorMap &S) {
  auto g = layout_or_throw(pres);
  GeneratorMap star(pres.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      star[g[i][j]] = S[g[j][i]];
  return star;
}

const HopfStructure &hopf_or_throw(const Presentation &pres) {
  if (!pres.hopf())
    throw std::invalid_argument(pres.label() + " carries no Hopf structure");
  return *pres.hopf();
}

TensorPoly word_coproduct(const Word &w, const Presentation &pres) {
  const auto &h = hopf_or_throw(pres);
  TensorPoly acc = TensorPoly::unit(2);
  for (GenId g : w) {
    if (g >= h.coproduct.size() || !h.coproduct[g])
      throw std::invalid_argument("no coproduct for " + pres.generator(g).name);
    acc = normalize(acc * *h.coproduct[g], pres);
  }
  return acc;
}

LaurentScalar word_counit(const Word &w, const Presentation &pres) {
  const auto &h = hopf_or_throw(pres);
  LaurentScalar acc(1);
  for (GenId g : w) {
    if (g >= h.counit.size() || !h.counit[g])
      throw std::invalid_argument("no counit for " + pres.generator(g).name);
    acc *= *h.counit[g];
  }
  return acc;
}

NCPolynomial word_antipode(const Word &w, const Presentation &pres) {
  const auto &h = hopf_or_throw(pres);
  NCPolynomial acc(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it >= h.antipode.size() || !h.antipode[*it])
      throw std::invalid_argument("no antipode for " +
                                  pres.generator(*it).name);
    acc = normalize(acc * *h.antipode[*it], pres);
  }
  return acc;
}

NCPolynomial power(const NCPolynomial &p, std::size_t k,
                   const Presentation &pres) {
  NCPolynomial r(1);
  for (std::size_t i = 0; i < k; ++i)
    r = normalize(r * p, pres);
  return r;
}

// Unit substitute raised to the word length (1 without homogenizer).
NCPolynomial unit_of_degree(std::size_t k, const Presentation &pres,
                            std::map<std::size_t, NCPolynomial> &cache) {
  const auto &h = hopf_or_throw(pres);
  if (!h.homogenizer)
    return NCPolynomial(1);
  auto it = cache.find(k);
  if (it != cache.end())
    return it->second;
  NCPolynomial v = power(*h.homogenizer, k, pres);
  cache.emplace(k, v);
  return v;
}

std::string render(const NCPolynomial &p, const Presentation &pres) {
  return format_expr(p, pres);
}

CheckResult poly_check(const std::string &name, const NCPolynomial &lhs,
                       const NCPolynomial &rhs, const Presentation &pres) {
  auto v = verify_identity(lhs, rhs, pres);
  CheckResult r{name, v.holds ? Status::holds : Status::fails, {}, {}};
  if (!v.holds)
    r.witness = render(v.residual, pres);
  return r;
}

std::string tensor_witness(const TensorPoly &t, const Presentation &pres) {
  return format_tensor(t, pres);
}

// Elements to test: every non-central generator, then random elements.
std::vector<NCPolynomial> sample_elements(const Presentation &pres,
                                          std::size_t max_degree,
                                          std::uint64_t seed,
                                          std::size_t samples) {
  std::vector<NCPolynomial> xs;
  std::size_t first = 0;
  while (first < pres.size() && pres.generator(first).central)
    ++first;
  for (std::size_t g = first; g < pres.size(); ++g)
    xs.push_back(NCPolynomial::generator(static_cast<GenId>(g)));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples && max_degree > 0; ++s)
    xs.push_back(random_polynomial(pres.size(), rng, max_degree, 2, first));
  return xs;
}

// Relation of a rule as a homogeneous-up-to-unit element:
// sum_w c_w u^(deg - |w|) w with u the homogenizer (or 1).
NCPolynomial antipode_of_relation(const RewriteRule &r,
                                  const Presentation &pres,
                                  std::map<std::size_t, NCPolynomial> &cache) {
  NCPolynomial rel = NCPolynomial::word(r.lhs) - r.rhs;
  std::size_t deg = rel.degree();
  NCPolynomial out;
  for (const auto &[w, c] : rel.terms())
    out += c * (unit_of_degree(deg - w.size(), pres, cache) *
                word_antipode(w, pres));
  return normalize(out, pres);
}

} // namespace

Presentation build_quantum_matrix_algebra(std::size_t n, ConventionTag conv,
                                          bool certify_now) {
  if (n < 1)
    throw std::invalid_argument("matrix size must be at least 1");
  if (n > 9)
    throw std::invalid_argument("matrix size above 9 is not supported");
  Presentation p("mq:" + std::to_string(n));
  std::vector<std::vector<GenId>> g(n, std::vector<GenId>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g[i][j] = p.add_generator(gname(i + 1, j + 1));
  if (conv.relation_source == RelationSource::eq4)
    add_eq4_relations(p, n, g);
  else
    add_eq9_relations(p, n, g);
  if (n == 2) {
    p.add_alias("a", g[0][0]);
    p.add_alias("b", g[0][1]);
    p.add_alias("c", g[1][0]);
    p.add_alias("d", g[1][1]);
  }
  p.set_matrix(g);
  p.set_convention(conv);
  p.set_hopf(matrix_hopf(p, conv.antipode_exponent_sign, true));
  if (certify_now && n <= 3)
    certify(p);
  return p;
}

NCPolynomial quantum_determinant(const Presentation &pres,
                                 const std::vector<std::size_t> &rows,
                                 const std::vector<std::size_t> &cols) {
  auto g = layout_or_throw(pres);
  if (rows.size() != cols.size())
    throw std::invalid_argument("quantum_determinant: size mismatch");
  for (auto r : rows)
    if (r < 1 || r > g.size())
      throw std::out_of_range("quantum_determinant: row index");
  for (auto c : cols)
    if (c < 1 || c > g.size())
      throw std::out_of_range("quantum_determinant: column index");
  const int e = det_exponent_sign(pres);
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPolynomial det;
  do {
    int l = static_cast<int>(inversions(perm));
    LaurentScalar coef = LaurentScalar::q(e * l);
    if (l % 2)
      coef = -coef;
    Word w;
    for (std::size_t k = 0; k < rows.size(); ++k)
      w.push_back(g[rows[k] - 1][cols[perm[k]] - 1]);
    det.add_term(w, coef);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

NCPolynomial quantum_determinant(const Presentation &pres) {
  auto g = layout_or_throw(pres);
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 1);
  return quantum_determinant(pres, all, all);
}

NCPolynomial quantum_minor(const Presentation &pres, std::size_t i,
                           std::size_t j) {
  auto g = layout_or_throw(pres);
  std::vector<std::size_t> rows, cols;
  for (std::size_t k = 1; k <= g.size(); ++k) {
    if (k != i)
      rows.push_back(k);
    if (k != j)
      cols.push_back(k);
  }
  if (rows.size() == g.size() || cols.size() == g.size())
    throw std::out_of_range("quantum_minor: index");
  if (rows.empty())
    return NCPolynomial(1);
  return quantum_determinant(pres, rows, cols);
}

GeneratorMap antipode_from_minors(const Presentation &pres, int s) {
  auto g = layout_or_throw(pres);
  const std::size_t n = g.size();
  GeneratorMap S(pres.size());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      int d = static_cast<int>(i) - static_cast<int>(j);
      LaurentScalar coef = LaurentScalar::q(s * d);
      if ((i + j) % 2)
        coef = -coef;
      S[g[i - 1][j - 1]] = normalize(coef * quantum_minor(pres, j, i), pres);
    }
  return S;
}

HopfStructure matrix_hopf(const Presentation &pres, int s, bool homogenize) {
  auto g = layout_or_throw(pres);
  const std::size_t n = g.size();
  HopfStructure h;
  h.coproduct.resize(pres.size());
  h.counit.resize(pres.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TensorPoly d(2);
      for (std::size_t k = 0; k < n; ++k)
        d.add_term({Word{g[i][k]}, Word{g[k][j]}}, 1);
      h.coproduct[g[i][j]] = d;
      h.counit[g[i][j]] = LaurentScalar(i == j ? 1 : 0);
    }
  h.antipode = antipode_from_minors(pres, s);
  if (homogenize && n > 1)
    h.homogenizer = normalize(quantum_determinant(pres), pres);
  return h;
}

Presentation build_suqn(std::size_t n, ConventionTag conv) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("suq:n is supported for n = 2, 3");
  Presentation p = build_quantum_matrix_algebra(n, conv);
  p.set_label("suq:" + std::to_string(n));
  p.set_star(star_from_antipode(p, p.hopf()->antipode));
  return p;
}

Presentation build_suq2() {
  Presentation p("suq2");
  GenId b = p.add_generator("b");
  GenId c = p.add_generator("c");
  GenId a = p.add_generator("a");
  GenId d = p.add_generator("d");
  const LaurentScalar q = LaurentScalar::q(), qi = LaurentScalar::q(-1);
  p.add_rule({a, b}, W({b, a}, q));
  p.add_rule({a, c}, W({c, a}, q));
  p.add_rule({d, b}, W({b, d}, qi));
  p.add_rule({d, c}, W({c, d}, qi));
  p.add_rule({c, b}, W({b, c}));
  p.add_rule({d, a}, W({a, d}) - W({b, c}, q - qi));
  p.add_rule({a, d}, NCPolynomial(1) + W({b, c}, q));
  p.set_matrix({{a, b}, {c, d}});
  ConventionTag conv{RelationSource::eq9, +1};
  p.set_convention(conv);
  p.set_hopf(matrix_hopf(p, conv.antipode_exponent_sign, false));
  p.set_star(star_from_antipode(p, p.hopf()->antipode));
  certify(p);
  return p;
}

namespace {

// Orients relations by their leading words; a new rule evicts older rules
// whose lhs it divides, and those are re-reduced. Right-hand sides are
// normalized at the end.
void install_relations(Presentation &p, std::vector<NCPolynomial> pending) {
  std::vector<RewriteRule> rules;
  auto with_rules = [&] {
    Presentation t = p;
    for (const auto &r : rules)
      t.add_rule(r.lhs, r.rhs);
    return t;
  };
  auto contains = [](const Word &w, const Word &u) {
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
  };
  while (!pending.empty()) {
    NCPolynomial x = normalize(pending.back(), with_rules());
    pending.pop_back();
    if (x.is_zero())
      continue;
    const Word lw = x.leading_word();
    if (lw.size() < 2)
      throw std::logic_error("relation collapses a generator: " +
                             format_expr(x, p));
    LaurentScalar lc = x.coefficient(lw);
    if (!lc.is_monomial())
      throw std::logic_error("leading coefficient not invertible: " +
                             format_expr(x, p));
    std::vector<RewriteRule> keep;
    for (auto &r : rules) {
      if (contains(r.lhs, lw))
        pending.push_back(NCPolynomial::word(r.lhs) - r.rhs);
      else
        keep.push_back(std::move(r));
    }
    keep.push_back({lw, -(lc.inverse() * (x - NCPolynomial::word(lw, lc)))});
    rules = std::move(keep);
  }
  Presentation all = with_rules();
  for (auto &r : rules)
    p.add_rule(r.lhs, normalize(r.rhs, all));
}

} // namespace

Presentation build_podles_sphere() {
  const Presentation &su = preset("suq2");
  Presentation p("s2q");
  GenId K = p.add_generator("K");
  GenId L = p.add_generator("L");
  GenId Ls = p.add_generator("L'");
  p.add_alias("c", K);
  p.add_alias("a", L);
  p.add_alias("d", Ls);
  GeneratorMap img(su.size());
  img[su.id("b")] = W({K}, -LaurentScalar::q());
  img[su.id("c")] = W({K});
  img[su.id("a")] = W({L});
  img[su.id("d")] = W({Ls});
  std::vector<NCPolynomial> rels;
  for (const auto &r : su.rules())
    rels.push_back(substitute(NCPolynomial::word(r.lhs) - r.rhs, img));
  install_relations(p, rels);
  GeneratorMap star(p.size());
  for (const char *name : {"c", "a", "d"})
    star[p.id(name)] = normalize(substitute(*(*su.star())[su.id(name)], img), p);
  p.set_star(star);
  p.set_convention(*su.convention());
  certify(p);
  return p;
}

NCPolynomial project_to_sphere(const NCPolynomial &x) {
  const Presentation &su = preset("suq2");
  const Presentation &sp = preset("s2q");
  GeneratorMap img(su.size());
  img[su.id("b")] = W({sp.id("K")}, -LaurentScalar::q());
  img[su.id("c")] = W({sp.id("K")});
  img[su.id("a")] = W({sp.id("L")});
  img[su.id("d")] = W({sp.id("L'")});
  return normalize(substitute(x, img), sp);
}

const Presentation &preset(const std::string &label) {
  static std::map<std::string, std::unique_ptr<Presentation>> cache;
  auto it = cache.find(label);
  if (it != cache.end())
    return *it->second;
  std::unique_ptr<Presentation> p;
  std::string base = label;
  ConventionTag conv{RelationSource::eq9, +1};
  if (label.size() > 4 && label.substr(label.size() - 4) == ":eq4") {
    base = label.substr(0, label.size() - 4);
    conv = {RelationSource::eq4, -1};
  }
  if (base == "mq:1" || base == "mq:2" || base == "mq:3")
    p = std::make_unique<Presentation>(
        build_quantum_matrix_algebra(static_cast<std::size_t>(base[3] - '0'), conv));
  else if (base == "suq:2" || base == "suq:3")
    p = std::make_unique<Presentation>(
        build_suqn(static_cast<std::size_t>(base[4] - '0'), conv));
  else if (label == "suq2")
    p = std::make_unique<Presentation>(build_suq2());
  else if (label == "s2q")
    p = std::make_unique<Presentation>(build_podles_sphere());
  else
    throw std::invalid_argument("unknown algebra preset '" + label + "'");
  p->set_label(label);
  return *cache.emplace(label, std::move(p)).first->second;
}

std::vector<std::string> preset_labels() {
  return {"mq:2", "mq:3", "suq:2", "suq:3", "suq2", "s2q"};
}

Presentation prepend_generators(
    const Presentation &base,
    const std::vector<std::pair<std::string, bool>> &extra) {
  Presentation p(base.label());
  for (const auto &[name, central] : extra)
    p.add_generator(name, central);
  std::vector<GenId> map(base.size());
  for (const auto &g : base.alphabet())
    map[g.id] = p.add_generator(g.name, g.central);
  for (const auto &[alias, g] : base.aliases())
    p.add_alias(alias, map[g]);
  for (const auto &r : base.rules()) {
    Word lhs;
    for (GenId g : r.lhs)
      lhs.push_back(map[g]);
    p.add_rule(lhs, r.rhs.relabel(map));
  }
  if (base.star()) {
    GeneratorMap star(p.size());
    for (std::size_t g = 0; g < base.size(); ++g)
      if ((*base.star())[g])
        star[map[g]] = (*base.star())[g]->relabel(map);
    p.set_star(star);
  }
  auto m = base.matrix();
  for (auto &row : m)
    for (auto &g : row)
      g = map[g];
  p.set_matrix(m);
  if (base.convention())
    p.set_convention(*base.convention());
  return p;
}

AlgMatrix generator_matrix(const Presentation &pres) {
  auto g = layout_or_throw(pres);
  std::vector<std::vector<NCPolynomial>> rows;
  for (const auto &r : g) {
    rows.emplace_back();
    for (GenId x : r)
      rows.back().push_back(NCPolynomial::generator(x));
  }
  return AlgMatrix(pres, rows);
}

TensorPoly coproduct(const NCPolynomial &p, const Presentation &pres) {
  TensorPoly out(2);
  for (const auto &[w, c] : p.terms()) {
    TensorPoly t = word_coproduct(w, pres);
    for (const auto &[k, kc] : t.terms())
      out.add_term(k, c * kc);
  }
  return out;
}

LaurentScalar counit(const NCPolynomial &p, const Presentation &pres) {
  LaurentScalar out;
  for (const auto &[w, c] : p.terms())
    out += c * word_counit(w, pres);
  return out;
}

NCPolynomial antipode(const NCPolynomial &p, const Presentation &pres) {
  NCPolynomial out;
  for (const auto &[w, c] : p.terms())
    out += c * word_antipode(w, pres);
  return normalize(out, pres);
}

HopfValue hopf_apply(const NCPolynomial &p, const Presentation &pres,
                     HopfKind kind) {
  NCPolynomial x = normalize(p, pres);
  switch (kind) {
  case HopfKind::coproduct:
    return coproduct(x, pres);
  case HopfKind::counit:
    return counit(x, pres);
  case HopfKind::antipode:
    return antipode(x, pres);
  }
  throw std::invalid_argument("hopf_apply: unknown kind");
}

std::vector<CheckResult> verify_hopf_axioms(const Presentation &pres,
                                            std::size_t max_degree,
                                            std::uint64_t seed,
                                            std::size_t samples) {
  hopf_or_throw(pres);
  std::vector<CheckResult> out;
  std::map<std::size_t, NCPolynomial> ucache;
  auto elements = sample_elements(pres, max_degree, seed, samples);

  auto fold = [&](CheckResult &agg, const std::string &label,
                  const std::string &witness) {
    agg.status = Status::fails;
    if (agg.witness.empty())
      agg.witness = label + ": " + witness;
  };

  CheckResult coassoc{"coassociativity", Status::holds, {}, {}};
  CheckResult counit_l{"counit_left", Status::holds, {}, {}};
  CheckResult counit_r{"counit_right", Status::holds, {}, {}};
  CheckResult anti_l{"antipode_left", Status::holds, {}, {}};
  CheckResult anti_r{"antipode_right", Status::holds, {}, {}};
  auto slot_coproduct = [&](const Word &w) { return word_coproduct(w, pres); };

  for (const auto &x0 : elements) {
    NCPolynomial x = normalize(x0, pres);
    std::string label = format_expr(x, pres);
    TensorPoly dx = coproduct(x, pres);

    TensorPoly l3 = normalize(dx.expand_slot(0, slot_coproduct), pres);
    TensorPoly r3 = normalize(dx.expand_slot(1, slot_coproduct), pres);
    if (!(l3 == r3))
      fold(coassoc, label, tensor_witness(l3 - r3, pres));

    NCPolynomial el, er, sl, sr, unit_side;
    for (const auto &[k, c] : dx.terms()) {
      el += (c * word_counit(k[0], pres)) * NCPolynomial::word(k[1]);
      er += (c * word_counit(k[1], pres)) * NCPolynomial::word(k[0]);
      sl += c * (word_antipode(k[0], pres) * NCPolynomial::word(k[1]));
      sr += c * (NCPolynomial::word(k[0]) * word_antipode(k[1], pres));
    }
    for (const auto &[w, c] : x.terms())
      unit_side += (c * word_counit(w, pres)) * unit_of_degree(w.size(), pres, ucache);
    if (auto v = verify_identity(el, x, pres); !v)
      fold(counit_l, label, render(v.residual, pres));
    if (auto v = verify_identity(er, x, pres); !v)
      fold(counit_r, label, render(v.residual, pres));
    if (auto v = verify_identity(sl, unit_side, pres); !v)
      fold(anti_l, label, render(v.residual, pres));
    if (auto v = verify_identity(sr, unit_side, pres); !v)
      fold(anti_r, label, render(v.residual, pres));
  }
  for (auto *r : {&coassoc, &counit_l, &counit_r, &anti_l, &anti_r}) {
    r->value = std::to_string(elements.size()) + " elements";
    out.push_back(*r);
  }

  // The structure maps must annihilate every defining relation.
  CheckResult wd_delta{"coproduct_respects_relations", Status::holds, {}, {}};
  CheckResult wd_eps{"counit_respects_relations", Status::holds, {}, {}};
  CheckResult wd_s{"antipode_respects_relations", Status::holds, {}, {}};
  for (const auto &r : pres.rules()) {
    std::string label = format_word(r.lhs, pres) + " -> " + format_expr(r.rhs, pres);
    NCPolynomial rel = NCPolynomial::word(r.lhs) - r.rhs;
    TensorPoly d = coproduct(rel, pres);
    if (!d.is_zero())
      fold(wd_delta, label, tensor_witness(d, pres));
    LaurentScalar e = counit(rel, pres);
    if (!e.is_zero())
      fold(wd_eps, label, e.to_string());
    NCPolynomial s = antipode_of_relation(r, pres, ucache);
    if (!s.is_zero())
      fold(wd_s, label, render(s, pres));
  }
  for (auto *r : {&wd_delta, &wd_eps, &wd_s}) {
    r->value = std::to_string(pres.rules().size()) + " relations";
    out.push_back(*r);
  }
  return out;
}

std::vector<CheckResult> verify_unitarity(const Presentation &pres) {
  std::vector<CheckResult> out;
  if (pres.label() == "s2q") {
    const Presentation &su = preset("suq2");
    AlgMatrix g0 = generator_matrix(su);
    AlgMatrix g = g0.map_entries(project_to_sphere);
    AlgMatrix g_on_sphere(pres, g.n());
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        g_on_sphere.at(i, j) = g.at(i, j);
    AlgMatrix one = AlgMatrix::identity(pres, g.n());
    out.push_back(verify_matrix_identity("g g* = 1", g_on_sphere * g_on_sphere.star(), one));
    out.push_back(verify_matrix_identity("g* g = 1", g_on_sphere.star() * g_on_sphere, one));
    return out;
  }
  AlgMatrix g = generator_matrix(pres);
  NCPolynomial unit(1);
  bool homog = pres.hopf() && pres.hopf()->homogenizer;
  if (homog)
    unit = *pres.hopf()->homogenizer;
  AlgMatrix rhs = AlgMatrix::scalar(pres, g.n(), unit);
  AlgMatrix ginv = pres.star()
                       ? g.star()
                       : g.map_entries([&](const NCPolynomial &p) {
                           return antipode(p, pres);
                         });
  std::string suffix = homog ? " det_q" : "";
  out.push_back(verify_matrix_identity("g g* = 1" + suffix, g * ginv, rhs));
  out.push_back(verify_matrix_identity("g* g = 1" + suffix, ginv * g, rhs));
  // Row form: sum_k g_ik g_ik* for every row i, listed separately.
  for (std::size_t i = 0; i < g.n(); ++i) {
    NCPolynomial s;
    for (std::size_t k = 0; k < g.n(); ++k)
      s += g.at(i, k) * ginv.at(k, i);
    out.push_back(poly_check("row " + std::to_string(i + 1) + " norm", s, unit, pres));
  }
  return out;
}

std::vector<CheckResult> verify_det_central(const Presentation &pres) {
  NCPolynomial det = normalize(quantum_determinant(pres), pres);
  CheckResult r{"det_q central", Status::holds, {}, {}};
  std::size_t checked = 0;
  for (const auto &row : layout_or_throw(pres))
    for (GenId x : row) {
      NCPolynomial gx = NCPolynomial::generator(x);
      auto v = verify_identity(gx * det, det * gx, pres);
      ++checked;
      if (!v.holds) {
        r.status = Status::fails;
        r.witness += pres.generator(x).name + ": " + render(v.residual, pres) + "; ";
      }
    }
  r.value = "det_q = " + render(det, pres) + " (" + std::to_string(checked) +
            " generators)";
  return {r};
}

std::vector<int> admissible_antipode_signs(RelationSource src) {
  std::vector<int> ok;
  for (int s : {+1, -1, 0}) {
    bool pass = true;
    for (std::size_t n : {2, 3}) {
      Presentation p = build_quantum_matrix_algebra(n, {src, s}, n <= 2);
      for (const auto &r : verify_hopf_axioms(p, 0, 0, 0))
        if (r.name.rfind("antipode", 0) == 0 && r.status != Status::holds)
          pass = false;
      if (!pass)
        break;
    }
    if (pass)
      ok.push_back(s);
  }
  return ok;
}

NCPolynomial invert_q(const NCPolynomial &p) {
  NCPolynomial out;
  for (const auto &[w, c] : p.terms())
    out.add_term(w, c.invert_q());
  return out;
}

std::vector<CheckResult> adjudicate_conventions() {
  std::vector<CheckResult> out;
  for (RelationSource src : {RelationSource::eq9, RelationSource::eq4}) {
    auto signs = admissible_antipode_signs(src);
    CheckResult r{"antipode sign selected by axioms (" + to_string(src) + ")",
                  signs.size() == 1 ? Status::holds : Status::fails, {}, {}};
    std::string list;
    for (int s : signs)
      list += (list.empty() ? "" : ",") + std::to_string(s);
    r.value = "s = {" + list + "}";
    if (signs.size() != 1)
      r.witness = "expected exactly one admissible sign";
    out.push_back(r);
    CheckResult lit{"unweighted (-1)^(i+j) antipode rejected (" + to_string(src) + ")",
                    std::find(signs.begin(), signs.end(), 0) == signs.end()
                        ? Status::holds
                        : Status::fails,
                    {}, {}};
    out.push_back(lit);
  }
  // b* = -q c with the selected eq9 sign.
  {
    auto signs = admissible_antipode_signs(RelationSource::eq9);
    int s = signs.empty() ? +1 : signs.front();
    Presentation p = build_suqn(2, {RelationSource::eq9, s});
    NCPolynomial bstar = apply_star(p.gen("b"), *p.star());
    CheckResult r = poly_check("b* = -q c (eq9, s = " + std::to_string(s) + ")",
                               bstar, LaurentScalar::q() * -p.gen("c"), p);
    r.value = "b* = " + format_expr(normalize(bstar, p), p);
    out.push_back(r);
  }
  // The two relation sources are exchanged by q -> q^-1.
  for (std::size_t n : {2, 3}) {
    Presentation p9 = build_quantum_matrix_algebra(n, {RelationSource::eq9, +1}, false);
    Presentation p4 = build_quantum_matrix_algebra(n, {RelationSource::eq4, -1}, false);
    CheckResult r{"eq9 rules under q -> 1/q equal eq4 rules (n = " +
                      std::to_string(n) + ")",
                  Status::holds, {}, {}};
    std::map<Word, NCPolynomial> eq4;
    for (const auto &rule : p4.rules())
      eq4.emplace(rule.lhs, rule.rhs);
    std::size_t matched = 0;
    for (const auto &rule : p9.rules()) {
      auto it = eq4.find(rule.lhs);
      NCPolynomial img = invert_q(rule.rhs);
      if (it == eq4.end() || !(it->second == img)) {
        r.status = Status::fails;
        r.witness += format_word(rule.lhs, p9) + " -> " + format_expr(img, p9) + "; ";
      } else {
        ++matched;
      }
    }
    if (p9.rules().size() != p4.rules().size())
      r.status = Status::fails;
    r.value = std::to_string(matched) + "/" + std::to_string(p4.rules().size()) +
              " rules matched";
    out.push_back(r);
    // Determinants are exchanged as well.
    out.push_back(poly_check("det_q(eq9) under q -> 1/q equals det_q(eq4) (n = " +
                                 std::to_string(n) + ")",
                             invert_q(quantum_determinant(p9)),
                             quantum_determinant(p4), p4));
  }
  return out;
}

std::complex<double> eval_commutative(const NCPolynomial &p,
                                      const std::vector<std::complex<double>> &values,
                                      double q0) {
  std::complex<double> sum = 0;
  for (const auto &[w, c] : p.terms()) {
    std::complex<double> t = c.eval(q0);
    for (GenId g : w) {
      if (g >= values.size())
        throw std::out_of_range("eval_commutative: missing value");
      t *= values[g];
    }
    sum += t;
  }
  return sum;
}

} // namespace qg
