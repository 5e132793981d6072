#include "qg/expr.hpp"

#include <cctype>

namespace qg {

namespace {

enum class Tok { number, name, plus, minus, star, caret, prime, slash, lparen,
                 rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Tok::name, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
    case '+': k = Tok::plus; break;
    case '-': k = Tok::minus; break;
    case '*': k = Tok::star; break;
    case '^': k = Tok::caret; break;
    case '\'': k = Tok::prime; break;
    case '/': k = Tok::slash; break;
    case '(': k = Tok::lparen; break;
    case ')': k = Tok::rparen; break;
    default:
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

using Node = std::unique_ptr<ExprAST>;

Node make(ExprAST::Kind k, std::size_t pos, std::string text = {}) {
  auto n = std::make_unique<ExprAST>();
  n->kind = k;
  n->pos = pos;
  n->text = std::move(text);
  return n;
}

Node make2(ExprAST::Kind k, Node a, Node b) {
  auto n = make(k, a->pos);
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view s) : toks_(lex(s)) {}

  Node parse() {
    Node e = expr();
    if (peek().kind != Tok::end)
      throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return e;
  }

private:
  const Token &peek() const { return toks_[at_]; }
  const Token &next() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }

  Node expr() {
    Node acc = signed_term();
    while (true) {
      if (accept(Tok::plus))
        acc = make2(ExprAST::Kind::sum, std::move(acc), term());
      else if (accept(Tok::minus))
        acc = make2(ExprAST::Kind::difference, std::move(acc), term());
      else
        return acc;
    }
  }

  Node signed_term() {
    std::size_t pos = peek().pos;
    if (accept(Tok::minus)) {
      auto n = make(ExprAST::Kind::negate, pos);
      n->children.push_back(term());
      return n;
    }
    return term();
  }

  static bool starts_primary(Tok k) {
    return k == Tok::number || k == Tok::name || k == Tok::lparen;
  }

  Node term() {
    Node acc = factor();
    while (true) {
      if (accept(Tok::star)) {
        std::size_t pos = peek().pos;
        if (accept(Tok::minus)) {
          auto n = make(ExprAST::Kind::negate, pos);
          n->children.push_back(factor());
          acc = make2(ExprAST::Kind::product, std::move(acc), std::move(n));
        } else {
          acc = make2(ExprAST::Kind::product, std::move(acc), factor());
        }
      } else if (starts_primary(peek().kind)) {
        acc = make2(ExprAST::Kind::product, std::move(acc), factor());
      } else {
        return acc;
      }
    }
  }

  Node factor() {
    Node base = primary();
    while (true) {
      std::size_t pos = peek().pos;
      if (accept(Tok::caret)) {
        bool neg = false;
        if (accept(Tok::minus))
          neg = true;
        else
          accept(Tok::plus);
        if (peek().kind != Tok::number)
          throw ParseError("expected integer exponent", peek().pos);
        long e = std::stol(next().text);
        auto n = make(ExprAST::Kind::power, pos);
        n->exponent = neg ? -e : e;
        n->children.push_back(std::move(base));
        base = std::move(n);
      } else if (accept(Tok::prime)) {
        auto n = make(ExprAST::Kind::star, pos);
        n->children.push_back(std::move(base));
        base = std::move(n);
      } else {
        return base;
      }
    }
  }

  Node primary() {
    const Token &t = peek();
    switch (t.kind) {
    case Tok::number: {
      std::string lit = next().text;
      if (accept(Tok::slash)) {
        if (peek().kind != Tok::number)
          throw ParseError("expected denominator", peek().pos);
        lit += "/" + next().text;
      }
      return make(ExprAST::Kind::rational, t.pos, lit);
    }
    case Tok::name: {
      std::string name = next().text;
      if (name == "q")
        return make(ExprAST::Kind::q, t.pos);
      if (name == "i")
        return make(ExprAST::Kind::imag, t.pos);
      return make(ExprAST::Kind::name, t.pos, name);
    }
    case Tok::lparen: {
      next();
      Node e = expr();
      if (!accept(Tok::rparen))
        throw ParseError("expected ')'", peek().pos);
      return e;
    }
    default:
      throw ParseError(t.kind == Tok::end ? "unexpected end of input"
                                          : "unexpected token '" + t.text + "'",
                       t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

bool is_scalar(const NCPolynomial &p) {
  return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
}

LaurentScalar as_scalar(const NCPolynomial &p) {
  return p.is_zero() ? LaurentScalar() : p.terms().begin()->second;
}

NCPolynomial eval_node(const ExprAST &n, const Presentation *pres) {
  using K = ExprAST::Kind;
  switch (n.kind) {
  case K::rational: {
    mpq_class v(n.text);
    v.canonicalize();
    return NCPolynomial(LaurentScalar(GaussianRational(v)));
  }
  case K::q:
    return NCPolynomial(LaurentScalar::q());
  case K::imag:
    return NCPolynomial(LaurentScalar::i());
  case K::name: {
    if (!pres)
      throw ParseError("generator '" + n.text + "' not allowed in a scalar",
                       n.pos);
    auto g = pres->find(n.text);
    if (!g)
      throw ParseError("unknown generator '" + n.text + "'", n.pos);
    return NCPolynomial::generator(*g);
  }
  case K::product:
    return eval_node(*n.children[0], pres) * eval_node(*n.children[1], pres);
  case K::sum:
    return eval_node(*n.children[0], pres) + eval_node(*n.children[1], pres);
  case K::difference:
    return eval_node(*n.children[0], pres) - eval_node(*n.children[1], pres);
  case K::negate:
    return -eval_node(*n.children[0], pres);
  case K::power: {
    NCPolynomial base = eval_node(*n.children[0], pres);
    long e = n.exponent;
    if (e < 0) {
      if (!is_scalar(base))
        throw ParseError("negative power of a non-scalar", n.pos);
      try {
        base = NCPolynomial(as_scalar(base).inverse());
      } catch (const std::domain_error &err) {
        throw ParseError(err.what(), n.pos);
      }
      e = -e;
    }
    NCPolynomial r(1);
    for (long k = 0; k < e; ++k)
      r = r * base;
    return r;
  }
  case K::star: {
    NCPolynomial v = eval_node(*n.children[0], pres);
    if (is_scalar(v))
      return NCPolynomial(as_scalar(v).conj());
    if (!pres || !pres->star())
      throw ParseError("presentation has no star structure", n.pos);
    return apply_star(v, *pres->star());
  }
  }
  return {};
}

} // namespace

std::unique_ptr<ExprAST> parse_ast(std::string_view text) {
  return Parser(text).parse();
}

NCPolynomial evaluate(const ExprAST &ast, const Presentation &pres) {
  return eval_node(ast, &pres);
}

NCPolynomial parse_expr(std::string_view text, const Presentation &pres) {
  return evaluate(*parse_ast(text), pres);
}

LaurentScalar parse_scalar(std::string_view text) {
  return as_scalar(eval_node(*parse_ast(text), nullptr));
}

std::string format_word(const Word &w, const Presentation &pres) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += ' ';
    out += pres.generator(w[i]).name;
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Sign-free rendering of c * body; `negative` reports the pulled-out sign.
std::string render_term(const LaurentScalar &c, const std::string &body,
                        bool &negative) {
  negative = false;
  if (!c.is_monomial()) {
    std::string s = "(" + c.to_string() + ")";
    return body.empty() ? s : s + " " + body;
  }
  negative = c.prints_negative();
  LaurentScalar mag = negative ? -c : c;
  if (body.empty())
    return mag.to_string();
  if (mag.is_one())
    return body;
  return mag.to_string() + " " + body;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>> &parts) {
  if (parts.empty())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto &[neg, s] = parts[k];
    if (k == 0)
      out += neg ? "-" + s : s;
    else
      out += (neg ? " - " : " + ") + s;
  }
  return out;
}

} // namespace

std::string format_expr(const NCPolynomial &p, const Presentation &pres) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto &[w, c] : p.terms()) {
    bool neg;
    std::string s = render_term(c, w.empty() ? "" : format_word(w, pres), neg);
    parts.emplace_back(neg, std::move(s));
  }
  return join_terms(parts);
}

std::string format_tensor(const TensorPoly &t, const Presentation &pres) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto &[k, c] : t.terms()) {
    std::string body;
    for (std::size_t s = 0; s < k.size(); ++s) {
      if (s)
        body += " (x) ";
      body += format_word(k[s], pres);
    }
    bool neg;
    std::string s = render_term(c, body, neg);
    parts.emplace_back(neg, std::move(s));
  }
  return join_terms(parts);
}

} // namespace qg
