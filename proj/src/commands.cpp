#include "qg/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qg/expr.hpp"
#include "qg/gerbe.hpp"
#include "qg/qgroups.hpp"
#include "qg/selftest.hpp"

namespace qg {

using namespace classical;

namespace {

struct Options {
  std::string alg;
  std::string expr, lhs, rhs;
  std::string q;
  std::size_t max_degree = 3;
  int grid = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool json = false, text = false;
  std::vector<double> window;
  std::string cuts;
  std::string g;
  std::size_t n = 2;
  std::string variant;
  std::string method = "analytic";
  std::vector<int> only;
};

CheckResult check(const std::string &name, bool ok, const std::string &witness = {},
                  const std::string &value = {}) {
  return {name, ok ? Status::holds : Status::fails, ok ? "" : witness, value};
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(')
      ++depth;
    if (ch == ')')
      --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  for (auto &x : out) {
    auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t");
    x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
  }
  return out;
}

const Presentation &algebra(const Options &o, const std::string &fallback) {
  try {
    return preset(o.alg.empty() ? fallback : o.alg);
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
}

void set_algebra(Report &r, const Presentation &p) {
  r.algebra = p.label();
  r.convention = p.convention();
}

NCPolynomial parse_in(const std::string &text, const Presentation &p,
                      const char *flag) {
  if (text.empty())
    throw UsageError(std::string("missing ") + flag);
  return parse_expr(text, p);
}

void forbid_q(const Options &o) {
  if (!o.q.empty())
    throw UsageError("--q applies to the numeric q = 1 cross-checks only; "
                     "exact checks are symbolic in q");
}

void require_q1(const Options &o) {
  if (!o.q.empty() && !(parse_scalar(o.q) == LaurentScalar(1)))
    throw UsageError("numeric specialization is available at q = 1 only");
}

// [[e11, e12], [e21, e22]] over pres.
AlgMatrix parse_alg_matrix(const std::string &text, const Presentation &p) {
  std::vector<std::vector<NCPolynomial>> rows;
  std::vector<NCPolynomial> row;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') {
      ++depth;
      continue;
    }
    if (ch == ']') {
      if (depth == 2) {
        row.push_back(parse_expr(cur, p));
        cur.clear();
        rows.push_back(std::move(row));
        row.clear();
      }
      --depth;
      continue;
    }
    if (ch == ',' && depth == 2) {
      row.push_back(parse_expr(cur, p));
      cur.clear();
      continue;
    }
    if (depth == 2)
      cur += ch;
  }
  if (depth != 0 || rows.empty())
    throw UsageError("malformed matrix literal: " + text);
  for (const auto &r : rows)
    if (r.size() != rows.size())
      throw UsageError("matrix literal must be square");
  return AlgMatrix(p, rows).normalized();
}

std::vector<SpectralCut> parse_angles(const std::string &s,
                                      std::vector<double> fallback) {
  std::vector<SpectralCut> out;
  if (s.empty()) {
    for (double a : fallback)
      out.push_back(SpectralCut::at_angle(a));
    return out;
  }
  for (const auto &x : split_list(s)) {
    try {
      out.push_back(SpectralCut::at_angle(std::stod(x)));
    } catch (const std::invalid_argument &) {
      throw UsageError("cut angle expected, got " + x);
    }
  }
  return out;
}

std::vector<Cut> parse_points(const std::string &s, const std::string &fallback) {
  std::vector<Cut> out;
  for (const auto &x : split_list(s.empty() ? fallback : s))
    out.push_back(Cut::parse(x));
  return out;
}

SectionVariant parse_variant(const std::string &v) {
  if (v == "circle_contraction" || v == "circle")
    return SectionVariant::circle_contraction;
  if (v == "affine")
    return SectionVariant::affine;
  if (v == "exponential" || v == "exp")
    return SectionVariant::exponential;
  throw UsageError("unknown section variant " + v);
}

std::vector<SectionVariant> variants(const Options &o) {
  if (o.variant.empty())
    return {SectionVariant::circle_contraction, SectionVariant::affine,
            SectionVariant::exponential};
  return {parse_variant(o.variant)};
}

UnitaryMatrix unitary_arg(const Options &o, std::mt19937_64 &rng,
                          const char *fallback = "random") {
  return parse_unitary(o.g.empty() ? fallback : o.g, o.n, rng);
}

void echo_common(Report &r, const Options &o) {
  if (!o.alg.empty())
    r.inputs["alg"] = o.alg;
  if (!o.expr.empty())
    r.inputs["expr"] = o.expr;
  if (!o.lhs.empty())
    r.inputs["lhs"] = o.lhs;
  if (!o.rhs.empty())
    r.inputs["rhs"] = o.rhs;
  if (!o.q.empty())
    r.inputs["q"] = o.q;
  if (!o.g.empty())
    r.inputs["g"] = o.g;
  if (!o.cuts.empty())
    r.inputs["cuts"] = o.cuts;
  if (!o.window.empty())
    r.inputs["window"] = o.window;
  if (!o.variant.empty())
    r.inputs["variant"] = o.variant;
}

// --- algebra commands -------------------------------------------------------

void cmd_normalize(Report &r, const Options &o) {
  forbid_q(o);
  const Presentation &p = algebra(o, "suq2");
  set_algebra(r, p);
  NCPolynomial nf = normalize(parse_in(o.expr, p, "--expr"), p);
  r.results.push_back(check("normal form", true, {}, format_expr(nf, p)));
  r.data["normal_form"] = format_expr(nf, p);
}

void cmd_verify(Report &r, const Options &o) {
  forbid_q(o);
  const Presentation &p = algebra(o, "suq2");
  set_algebra(r, p);
  auto v = verify_identity(parse_in(o.lhs, p, "--lhs"), parse_in(o.rhs, p, "--rhs"), p);
  r.results.push_back(check(o.lhs + " = " + o.rhs, v.holds, format_expr(v.residual, p)));
}

void cmd_hopf(Report &r, const Options &o, const std::string &which) {
  forbid_q(o);
  const Presentation &p = algebra(o, "suq2");
  set_algebra(r, p);
  if (!p.hopf())
    throw UsageError(p.label() + " carries no Hopf structure");
  if (which == "axioms") {
    r.inputs["max_degree"] = o.max_degree;
    r.inputs["samples"] = o.samples ? o.samples : 4;
    r.results = verify_hopf_axioms(p, o.max_degree, o.seed, o.samples ? o.samples : 4);
    return;
  }
  NCPolynomial x = parse_in(o.expr, p, "--expr");
  std::string out;
  if (which == "delta")
    out = format_tensor(std::get<TensorPoly>(hopf_apply(x, p, HopfKind::coproduct)), p);
  else if (which == "epsilon")
    out = std::get<LaurentScalar>(hopf_apply(x, p, HopfKind::counit)).to_string();
  else
    out = format_expr(std::get<NCPolynomial>(hopf_apply(x, p, HopfKind::antipode)), p);
  r.results.push_back(check(which + "(" + o.expr + ")", true, {}, out));
  r.data["value"] = out;
}

void cmd_detq(Report &r, const Options &o) {
  forbid_q(o);
  const Presentation &p = algebra(o, "mq:2");
  set_algebra(r, p);
  if (p.matrix().empty())
    throw UsageError(p.label() + " has no generator matrix");
  NCPolynomial det = normalize(quantum_determinant(p), p);
  r.data["det_q"] = format_expr(det, p);
  auto c = verify_det_central(p);
  for (auto &x : c)
    x.value = format_expr(det, p);
  r.results = c;
}

void cmd_presets(Report &r, const Options &o) {
  forbid_q(o);
  Json list = Json::array();
  for (const auto &label : preset_labels()) {
    const Presentation &p = preset(label);
    auto orient = check_rule_orientation(p);
    auto conf = check_local_confluence(p);
    std::string value = std::to_string(p.size()) + " generators, " +
                        std::to_string(p.rules().size()) + " rules";
    if (p.convention())
      value += ", " + to_string(p.convention()->relation_source) + " s = " +
               std::to_string(p.convention()->antipode_exponent_sign);
    r.results.push_back(check(label + ": orientation", orient.ok,
                              orient.messages.empty() ? "" : orient.messages.front(),
                              value));
    std::string w;
    if (!conf.failures.empty())
      w = format_word(conf.failures.front().overlap, p) + " -> " +
          format_expr(conf.failures.front().residual, p);
    r.results.push_back(check(label + ": local confluence", conf.ok, w,
                              std::to_string(conf.pairs_checked) + " pairs"));
    Json e;
    e["label"] = label;
    Json gens = Json::array();
    for (const auto &g : p.alphabet())
      gens.push_back(g.name);
    e["generators"] = gens;
    Json rules = Json::array();
    for (const auto &rule : p.rules())
      rules.push_back(format_word(rule.lhs, p) + " -> " + format_expr(rule.rhs, p));
    e["rules"] = rules;
    list.push_back(e);
  }
  r.data["presets"] = list;
}

// --- gerbe commands ---------------------------------------------------------

void cmd_gerbe(Report &r, const Options &o, const std::string &which) {
  if (which == "x") {
    forbid_q(o);
    AlgMatrix x = build_x_equator();
    set_algebra(r, x.presentation());
    r.results = verify_involution(x);
    r.data["x"] = x.to_string();
  } else if (which == "projection") {
    forbid_q(o);
    AlgMatrix x = build_x_equator();
    set_algebra(r, x.presentation());
    AlgMatrix P = build_projection(x);
    r.results = verify_projection(P);
    r.data["P"] = P.to_string();
  } else if (which == "xext") {
    require_q1(o);
    r.algebra = "suq2";
    r.convention = preset("suq2").convention();
    for (bool deformed : {false, true}) {
      AlgMatrix x = build_x_extended(deformed);
      for (auto c : verify_x_extended(x, deformed)) {
        c.name = (deformed ? "q: " : "q = 1: ") + c.name;
        r.results.push_back(c);
      }
      r.data[deformed ? "x_q" : "x_1"] = x.to_string();
    }
    std::size_t pts = o.samples ? o.samples : 100;
    ExtensionStats st = extension_numeric(pts, o.seed);
    r.inputs["samples"] = pts;
    r.results.push_back(check("q = 1 numeric: |x* - x| < 1e-10", st.max_hermitian < 1e-10,
                              fmt(st.max_hermitian), fmt(st.max_hermitian)));
    r.results.push_back(check("q = 1 numeric: |x^2 - 1| < 1e-10",
                              st.max_involution < 1e-10, fmt(st.max_involution),
                              fmt(st.max_involution)));
    r.results.push_back(check("q = 1 numeric: median |x^2 - x| > 0.1",
                              st.median_idempotent > 0.1, fmt(st.median_idempotent),
                              fmt(st.median_idempotent)));
  } else if (which == "loop") {
    forbid_q(o);
    AlgMatrix x = o.expr.empty() ? build_x_equator()
                                 : parse_alg_matrix(o.expr, preset("s2q"));
    set_algebra(r, x.presentation());
    auto inv = verify_involution(x);
    for (auto c : inv) {
      c.name = "precondition " + c.name;
      r.results.push_back(c);
    }
    SymbolicLoop loop = build_equator_loop(x, false);
    for (const auto &c : verify_loop_unitary(loop))
      r.results.push_back(c);
    Json pieces = Json::array();
    for (const auto &pc : loop.pieces)
      pieces.push_back({{"t0", pc.t0}, {"t1", pc.t1}, {"value", pc.value.to_string()}});
    r.data["pieces"] = pieces;
  } else if (which == "resolvent") {
    require_q1(o);
    std::string base = o.alg.empty() ? "suq:2" : o.alg;
    Cut cut = parse_points(o.cuts, "-1").front();
    ResolventExtension ext = adjoin_resolvent(base, cut);
    r.algebra = base;
    r.convention = ext.base->convention();
    r.results = verify_resolvent(ext);
    if (cut.exact) {
      std::size_t s = o.samples ? o.samples : 20;
      double res = resolvent_numeric_residual(ext.n, cut, s, o.seed);
      r.inputs["samples"] = s;
      r.results.push_back(check("q = 1 numeric relations < 1e-10", res < 1e-10, fmt(res),
                                fmt(res)));
    }
    Json rules = Json::array();
    for (const auto &rule : ext.pres->rules())
      if (std::any_of(rule.lhs.begin(), rule.lhs.end(), [&](GenId g) {
            return ext.pres->generator(g).name[0] == 'h';
          }))
        rules.push_back(format_word(rule.lhs, *ext.pres) + " -> " +
                        format_expr(rule.rhs, *ext.pres));
    r.data["adjunction_rules"] = rules;
  } else if (which == "transition") {
    require_q1(o);
    std::string base = o.alg.empty() ? "suq:2" : o.alg;
    if (base != "suq:2" && base != "suq:3")
      throw UsageError("transition needs suq:2 or suq:3");
    auto cuts = parse_points(o.cuts, "1,i,-1");
    if (cuts.size() < 2)
      throw UsageError("transition needs at least two cuts");
    // A third cut for the cocycle check, distinct from the first two.
    for (const char *c : {"-1", "i", "-i", "1"}) {
      if (cuts.size() > 2)
        break;
      if (c != cuts[0].to_string() && c != cuts[1].to_string())
        cuts.push_back(Cut::parse(c));
    }
    r.algebra = base;
    r.convention = preset(base).convention();
    std::size_t s = o.samples ? o.samples : 5;
    r.inputs["samples"] = s;
    r.results = formal_transition(base == "suq:2" ? 2 : 3, cuts[0], cuts[1], cuts[2], s,
                                  o.seed);
  } else {
    throw UsageError("unknown gerbe command " + which);
  }
}

// --- classical commands -----------------------------------------------------

void cmd_classical(Report &r, const Options &o, const std::string &which) {
  std::mt19937_64 rng(o.seed);
  if (which == "log") {
    UnitaryMatrix g = unitary_arg(o, rng);
    SpectralCut cut = parse_angles(o.cuts, {kPi}).front();
    int quad = o.grid ? o.grid : 4096;
    r.inputs["grid"] = quad;
    CMatrix L = matrix_log_spectral(g, cut);
    CMatrix Lc = matrix_log_contour(g, cut, quad);
    double e1 = frobenius(expm(L) - g.matrix());
    double e2 = frobenius(Lc - L);
    r.results.push_back(check("|exp(log g) - g| < 1e-10", e1 < 1e-10, fmt(e1), fmt(e1)));
    r.results.push_back(check("|log_contour - log_spectral| < 1e-6", e2 < 1e-6, fmt(e2),
                              fmt(e2)));
    r.data["g"] = to_json(g.matrix());
    r.data["log"] = to_json(L);
    r.data["spectral_gap"] = spectral_gap(g, cut);
  } else if (which == "section") {
    UnitaryMatrix g = unitary_arg(o, rng);
    SpectralCut cut = parse_angles(o.cuts, {kPi}).front();
    std::size_t N = o.samples ? o.samples : 16;
    const auto n = g.matrix().rows();
    Json paths = Json::object();
    for (auto v : variants(o)) {
      std::string tag = to_string(v);
      double e0 = frobenius(local_section(g, cut, 0, v) - CMatrix::Identity(n, n));
      double e1 = frobenius(local_section(g, cut, 1, v) - g.matrix());
      bool singular = false;
      Json vals = Json::array();
      for (std::size_t k = 0; k <= N; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(N);
        CMatrix s = local_section(g, cut, t, v);
        singular = singular || std::abs(s.determinant()) < 1e-12;
        vals.push_back(to_json(s));
      }
      r.results.push_back(check(tag + ": psi(0) = 1", e0 < 1e-10, fmt(e0), fmt(e0)));
      r.results.push_back(check(tag + ": psi(1) = g", e1 < 1e-10, fmt(e1), fmt(e1)));
      r.results.push_back(check(tag + ": psi(t) invertible", !singular, "singular sample"));
      paths[tag] = vals;
    }
    r.data["g"] = to_json(g.matrix());
    r.data["sections"] = paths;
  } else if (which == "transition") {
    UnitaryMatrix g = unitary_arg(o, rng);
    auto cuts = parse_angles(o.cuts, {kPi, kPi / 2});
    if (cuts.size() != 2)
      throw UsageError("transition needs two cuts");
    std::size_t N = o.samples ? o.samples : 64;
    const auto n = g.matrix().rows();
    for (auto v : variants(o)) {
      std::string tag = to_string(v);
      PathSample p = transition_path(g, cuts[0], cuts[1], N, v);
      double b0 = frobenius(p.values.front() - CMatrix::Identity(n, n));
      double b1 = frobenius(p.values.back() - CMatrix::Identity(n, n));
      r.results.push_back(check(tag + ": phi(0) = 1", b0 < 1e-10, fmt(b0), fmt(b0)));
      r.results.push_back(check(tag + ": phi(1) = 1", b1 < 1e-10, fmt(b1), fmt(b1)));
      r.data["lipschitz_" + tag] = p.lipschitz;
    }
    r.data["g"] = to_json(g.matrix());
  } else if (which == "cocycle") {
    auto cuts = parse_angles(o.cuts, {0.5, 2.5, 4.5});
    if (cuts.size() != 3)
      throw UsageError("cocycle needs three cuts");
    std::size_t count = o.g.empty() ? (o.samples ? o.samples : 20) : 1;
    r.inputs["samples"] = count;
    for (auto v : variants(o)) {
      double worst = 0;
      std::size_t done = 0;
      while (done < count) {
        UnitaryMatrix g = unitary_arg(o, rng);
        bool ok = true;
        for (const auto &c : cuts)
          ok = ok && spectral_gap(g, c) > 1e-2;
        if (!ok) {
          if (!o.g.empty())
            throw UsageError("g has an eigenvalue within 1e-2 of a cut");
          continue;
        }
        worst = std::max(worst, cocycle_residual(g, {cuts[0], cuts[1], cuts[2]}, 32, v));
        ++done;
      }
      r.results.push_back(check(std::string(to_string(v)) + ": cocycle residual < 1e-10",
                                worst < 1e-10, fmt(worst), fmt(worst)));
    }
  } else if (which == "loop") {
    int grid = o.grid ? o.grid : 16;
    double worst_u = 0, worst_det = 0, worst_base = 0, worst_cont = 0;
    const CMatrix I2 = CMatrix::Identity(2, 2);
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        double th = kPi * (i + 0.5) / grid, ph = kTwoPi * j / grid;
        std::array<double, 3> x{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                std::cos(th)};
        for (int k = 0; k <= grid; ++k) {
          CMatrix U = su2_basic_loop(x, static_cast<double>(k) / grid);
          worst_u = std::max(worst_u, frobenius(U.adjoint() * U - I2));
          worst_det = std::max(worst_det, std::abs(U.determinant() - 1.0));
        }
        worst_base = std::max({worst_base, frobenius(su2_basic_loop(x, 0) - I2),
                               frobenius(su2_basic_loop(x, 1) - I2)});
        worst_cont = std::max(worst_cont, frobenius(su2_basic_loop(x, 0.5) + I2));
      }
    r.inputs["grid"] = grid;
    r.results.push_back(check("U* U = 1 (< 1e-12)", worst_u < 1e-12, fmt(worst_u), fmt(worst_u)));
    r.results.push_back(check("det U = 1 (< 1e-12)", worst_det < 1e-12, fmt(worst_det),
                              fmt(worst_det)));
    r.results.push_back(check("based at t = 0, 1", worst_base < 1e-12, fmt(worst_base)));
    r.results.push_back(check("value -1 at t = 1/2", worst_cont < 1e-12, fmt(worst_cont)));
  } else if (which == "degree") {
    int grid = o.grid ? o.grid : 64;
    LoopKind kind = LoopKind::basic;
    double expect = 1;
    if (o.variant == "reversed") {
      kind = LoopKind::reversed;
      expect = -1;
    } else if (o.variant == "constant") {
      kind = LoopKind::constant;
      expect = 0;
    } else if (!o.variant.empty() && o.variant != "basic") {
      throw UsageError("degree variant is basic, reversed or constant");
    }
    r.inputs["grid"] = grid;
    auto t0 = std::chrono::steady_clock::now();
    double d;
    try {
      d = suspension_degree(grid, kind);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.results.push_back(check("grid resolves an integer (|d - round(d)| <= 0.1)",
                              std::abs(d - std::round(d)) <= 0.1, "grid too coarse: " + fmt(d),
                              fmt(d)));
    r.results.push_back(check("degree = " + fmt(expect) + " +- 0.05",
                              std::abs(d - expect) <= 0.05, fmt(d), fmt(d)));
    r.data["degree"] = d;
    r.data["seconds"] = std::round(secs * 10) / 10;
  } else if (which == "dirac") {
    UnitaryMatrix g = unitary_arg(o, rng, "diag(1,1)");
    if (o.window.size() != 2)
      throw UsageError("--window needs two numbers");
    DiracSpectrum s;
    if (o.method == "analytic") {
      s = dirac_spectrum_analytic(g, o.window[0], o.window[1]);
    } else if (o.method == "fd" || o.method == "finite_difference") {
      int N = o.grid ? o.grid : 1024;
      if (N < 256)
        throw UsageError("finite differences need --grid >= 256");
      r.inputs["grid"] = N;
      s = dirac_spectrum_fd(g, o.window[0], o.window[1], static_cast<std::size_t>(N));
    } else {
      throw UsageError("unknown method " + o.method);
    }
    r.inputs["method"] = o.method;
    std::string list;
    for (double e : s.eigenvalues)
      list += (list.empty() ? "" : ", ") + fmt(e);
    r.results.push_back(check("spectrum in ]" + fmt(s.lo) + ", " + fmt(s.hi) + "[", true, {},
                              "[" + list + "]"));
    r.data["eigenvalues"] = s.eigenvalues;
  } else if (which == "match") {
    UnitaryMatrix g = unitary_arg(o, rng);
    auto cuts = parse_angles(o.cuts, {0.1, 3.0});
    if (cuts.size() != 2)
      throw UsageError("match needs two cuts");
    WindowMatch m = spectral_window_match(g, cuts[0], cuts[1]);
    r.results.push_back(check("Dirac count = arc count", m.match,
                              std::to_string(m.dirac.size()) + " vs " +
                                  std::to_string(m.group.size()),
                              std::to_string(m.dirac.size())));
    r.data["mu"] = m.mu;
    r.data["mu_prime"] = m.mu_prime;
    r.data["dirac"] = m.dirac;
    Json grp = Json::array();
    for (cplx z : m.group)
      grp.push_back(to_json(z));
    r.data["group"] = grp;
    Json bij = Json::array();
    for (auto [a, b] : m.bijection)
      bij.push_back(Json::array({a, b}));
    r.data["bijection"] = bij;
  } else {
    throw UsageError("unknown classical command " + which);
  }
}

void cmd_selftest(Report &r, const Options &o) {
  auto outcomes = run_acceptance(o.seed, o.only);
  for (const auto &c : outcomes) {
    std::string name = "criterion " + std::to_string(c.id) + ": " + c.title;
    std::string witness;
    for (const auto &x : c.checks)
      if (x.status == Status::fails)
        witness += (witness.empty() ? "" : "; ") + x.name + (x.witness.empty() ? "" : " [" + x.witness + "]");
    r.results.push_back(check(name, c.pass, witness.empty() ? c.detail : witness, c.detail));
  }
}

struct Command {
  std::string name;
  std::function<void(Report &, const Options &)> run;
};

} // namespace

cplx parse_complex(const std::string &text) {
  try {
    LaurentScalar s = parse_scalar(text);
    if (!s.is_constant())
      throw UsageError("scalar must not involve q: " + text);
    return s.constant_term().to_complex();
  } catch (const ParseError &) {
  }
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size())
      return v;
  } catch (const std::exception &) {
  }
  throw UsageError("not a complex number: " + text);
}

UnitaryMatrix parse_unitary(const std::string &text, std::size_t n,
                            std::mt19937_64 &rng) {
  if (text == "random")
    return random_special_unitary(n, rng);
  try {
    if (text.rfind("diag(", 0) == 0 && text.back() == ')') {
      std::vector<cplx> d;
      for (const auto &x : split_list(text.substr(5, text.size() - 6)))
        d.push_back(parse_complex(x));
      return diag_unitary(d);
    }
    Json j = Json::parse(text);
    const auto m = static_cast<Eigen::Index>(j.size());
    CMatrix M(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (j[i].size() != j.size())
        throw UsageError("matrix must be square");
      for (Eigen::Index k = 0; k < m; ++k) {
        const auto &e = j[i][k];
        M(i, k) = e.is_array() ? cplx(e.at(0).get<double>(), e.at(1).get<double>())
                               : cplx(e.get<double>(), 0);
      }
    }
    return UnitaryMatrix(M);
  } catch (const UsageError &) {
    throw;
  } catch (const std::exception &e) {
    throw UsageError("bad matrix literal " + text + ": " + e.what());
  }
}

Report execute(const std::vector<std::string> &args) {
  Options o;
  CLI::App app{"Quantum gerbe verifier"};
  app.require_subcommand(1);
  std::string chosen;
  std::function<void(Report &, const Options &)> run;

  auto add_flags = [&](CLI::App *c) {
    c->add_option("--alg", o.alg, "preset label");
    c->add_option("--expr", o.expr, "expression or matrix literal");
    c->add_option("--lhs", o.lhs, "left-hand side");
    c->add_option("--rhs", o.rhs, "right-hand side");
    c->add_option("--q", o.q, "numeric q (q = 1 cross-checks only)");
    c->add_option("--max-degree", o.max_degree, "degree bound for random elements");
    c->add_option("--grid", o.grid, "grid or quadrature size");
    c->add_option("--samples", o.samples, "number of random samples");
    c->add_option("--seed", o.seed, "random seed");
    c->add_flag("--json", o.json, "JSON output (default)");
    c->add_flag("--text", o.text, "aligned text output");
    c->add_option("--window", o.window, "spectral window lo hi")->expected(2);
    c->add_option("--cuts", o.cuts, "comma-separated cuts");
    c->add_option("--g", o.g, "unitary matrix literal");
    c->add_option("--n", o.n, "matrix size for random g");
    c->add_option("--variant", o.variant, "section or loop variant");
    c->add_option("--method", o.method, "analytic or fd");
    c->add_option("--only", o.only, "criteria to run")->delimiter(',');
  };
  auto leaf = [&](CLI::App *parent, const std::string &name,
                  std::function<void(Report &, const Options &)> f,
                  const std::string &full) {
    CLI::App *c = parent->add_subcommand(name);
    add_flags(c);
    c->callback([&, f, full] {
      chosen = full;
      run = f;
    });
  };

  leaf(&app, "normalize", cmd_normalize, "normalize");
  leaf(&app, "verify", cmd_verify, "verify");
  leaf(&app, "detq", cmd_detq, "detq");
  leaf(&app, "presets", cmd_presets, "presets");
  leaf(&app, "selftest", cmd_selftest, "selftest");
  CLI::App *hopf = app.add_subcommand("hopf");
  hopf->require_subcommand(1);
  for (std::string w : {"delta", "epsilon", "antipode", "axioms"})
    leaf(hopf, w, [w](Report &r, const Options &op) { cmd_hopf(r, op, w); }, "hopf " + w);
  CLI::App *gerbe = app.add_subcommand("gerbe");
  gerbe->require_subcommand(1);
  for (std::string w : {"x", "projection", "xext", "loop", "resolvent", "transition"})
    leaf(gerbe, w, [w](Report &r, const Options &op) { cmd_gerbe(r, op, w); }, "gerbe " + w);
  CLI::App *cl = app.add_subcommand("classical");
  cl->require_subcommand(1);
  for (std::string w :
       {"log", "section", "transition", "cocycle", "loop", "degree", "dirac", "match"})
    leaf(cl, w, [w](Report &r, const Options &op) { cmd_classical(r, op, w); },
         "classical " + w);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }
  if (!run)
    throw UsageError("no command given\n" + app.help());
  if (o.json && o.text)
    throw UsageError("--json and --text are exclusive");

  Report r;
  r.command = chosen;
  r.seed = o.seed;
  echo_common(r, o);
  auto t0 = std::chrono::steady_clock::now();
  try {
    run(r, o);
  } catch (const UsageError &) {
    throw;
  } catch (const ParseError &e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  } catch (const std::domain_error &e) {
    throw UsageError(e.what());
  }
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return r;
}

int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
  bool text = false;
  for (const auto &a : args)
    if (a == "--text")
      text = true;
  try {
    Report r = execute(args);
    out << (text ? render_text(r) : render_json(r));
    return r.failed() ? 1 : 0;
  } catch (const UsageError &e) {
    err << "qg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "qg: error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace qg
