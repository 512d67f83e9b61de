#include "qgalois/expr.hpp"

#include <cctype>

namespace qgalois {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, bool tensor_mode) : s_(text), tensor_(tensor_mode) {}

  Expr parse() {
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    Expr e = sum();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[pos_];
  }

  // "(x)" or U+2297
  bool eat_tensor() {
    if (!tensor_) return false;
    skip();
    if (s_.substr(pos_, 3) == "\xE2\x8A\x97") {
      pos_ += 3;
      return true;
    }
    std::size_t p = pos_;
    if (p < s_.size() && s_[p] == '(') {
      ++p;
      while (p < s_.size() && s_[p] == ' ') ++p;
      if (p < s_.size() && s_[p] == 'x') {
        ++p;
        while (p < s_.size() && s_[p] == ' ') ++p;
        if (p < s_.size() && s_[p] == ')') {
          pos_ = p + 1;
          return true;
        }
      }
    }
    return false;
  }

  Expr sum() {
    Expr out;
    out.kind = Expr::Kind::Sum;
    out.pos = pos_;
    out.args.push_back(term());
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Expr t = term();
        if (c == '-') {
          Expr n;
          n.kind = Expr::Kind::Negate;
          n.pos = t.pos;
          n.args.push_back(std::move(t));
          t = std::move(n);
        }
        out.args.push_back(std::move(t));
      } else {
        break;
      }
    }
    if (out.args.size() == 1) return std::move(out.args.front());
    return out;
  }

  Expr product() {
    Expr out;
    out.kind = Expr::Kind::Product;
    out.pos = pos_;
    out.args.push_back(factor());
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out.args.push_back(factor());
      } else if (c == '/') {
        std::size_t at = pos_++;
        Expr q;
        q.kind = Expr::Kind::Quotient;
        q.pos = at;
        Expr lhs = out.args.size() == 1 ? std::move(out.args.front()) : std::move(out);
        q.args.push_back(std::move(lhs));
        q.args.push_back(factor());
        out = Expr();
        out.kind = Expr::Kind::Product;
        out.pos = q.pos;
        out.args.push_back(std::move(q));
      } else {
        break;
      }
    }
    if (out.args.size() == 1) return std::move(out.args.front());
    return out;
  }

  Expr term() {
    skip();
    std::size_t start = pos_;
    Expr left = product();
    if (eat_tensor()) {
      Expr t;
      t.kind = Expr::Kind::Tensor;
      t.pos = start;
      t.args.push_back(std::move(left));
      t.args.push_back(product());
      return t;
    }
    return left;
  }

  Expr factor() {
    skip();
    if (!at_end() && s_[pos_] == '-') {
      Expr n;
      n.kind = Expr::Kind::Negate;
      n.pos = pos_++;
      n.args.push_back(factor());
      return n;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      skip();
      std::size_t at = pos_;
      bool negative = eat('-');
      skip();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected integer exponent", pos_);
      long n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + (s_[pos_++] - '0');
        if (n > kMaxExponent) throw ParseError("exponent too large", at);
      }
      Expr p;
      p.kind = Expr::Kind::Power;
      p.pos = at;
      p.exponent = negative ? -n : n;
      p.args.push_back(std::move(base));
      return p;
    }
    return base;
  }

  Expr atom() {
    skip();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    Expr e;
    e.pos = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      e.kind = Expr::Kind::Number;
      e.number = mpq_class(mpz_class(digits));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) id += s_[pos_++];
      if (id == "q" || id == "w") {
        e.kind = Expr::Kind::Omega;
      } else {
        e.kind = Expr::Kind::Symbol;
        e.name = id;
      }
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  bool tensor_;
  std::size_t pos_ = 0;
};

NCPoly reduced(const NCPoly& p, const Symbols& sym) { return sym.reduce ? sym.reduce(p) : p; }

NCPoly invert(const NCPoly& base, const Symbols& sym, std::size_t pos) {
  if (auto s = base.as_scalar()) {
    if (s->is_zero()) throw ParseError("division by zero", pos);
    return NCPoly::constant(sym.alphabet, s->inv());
  }
  if (base.size() == 1) {
    const auto& [w, c] = *base.terms().begin();
    NCPoly out = NCPoly::constant(sym.alphabet, c.inv());
    for (std::size_t i = w.size(); i-- > 0;) {
      const std::string& name = sym.alphabet->name(w[i]);
      auto it = sym.inverses.find(name);
      if (it == sym.inverses.end()) throw ParseError("generator '" + name + "' has no inverse", pos);
      out = reduced(out * it->second, sym);
    }
    return out;
  }
  throw ParseError("only scalars and monomials can be raised to negative powers", pos);
}

}  // namespace

Expr parse_expr(std::string_view text, bool tensor_mode) { return Parser(text, tensor_mode).parse(); }

NCPoly evaluate(const Expr& e, const Symbols& sym) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return NCPoly::constant(sym.alphabet, CycloScalar(e.number, 0));
    case Expr::Kind::Omega:
      return NCPoly::constant(sym.alphabet, CycloScalar::omega());
    case Expr::Kind::Symbol: {
      if (auto it = sym.aliases.find(e.name); it != sym.aliases.end()) return it->second;
      if (sym.alphabet) {
        if (auto l = sym.alphabet->find(e.name)) return NCPoly::monomial(sym.alphabet, Word::letter(*l));
      }
      throw ParseError("unknown generator '" + e.name + "'", e.pos);
    }
    case Expr::Kind::Sum: {
      NCPoly out(sym.alphabet);
      for (const auto& a : e.args) out += evaluate(a, sym);
      return out;
    }
    case Expr::Kind::Product: {
      NCPoly out = evaluate(e.args.front(), sym);
      for (std::size_t i = 1; i < e.args.size(); ++i) out = reduced(out * evaluate(e.args[i], sym), sym);
      return out;
    }
    case Expr::Kind::Quotient: {
      NCPoly num = evaluate(e.args[0], sym);
      NCPoly den = evaluate(e.args[1], sym);
      auto s = den.as_scalar();
      if (!s) throw ParseError("division by a non-scalar", e.pos);
      if (s->is_zero()) throw ParseError("division by zero", e.pos);
      return num * s->inv();
    }
    case Expr::Kind::Power: {
      NCPoly base = evaluate(e.args.front(), sym);
      if (e.exponent < 0) base = invert(base, sym, e.pos);
      const long n = e.exponent < 0 ? -e.exponent : e.exponent;
      NCPoly out = NCPoly::constant(sym.alphabet, CycloScalar(1));
      for (long i = 0; i < n; ++i) out = reduced(out * base, sym);
      return out;
    }
    case Expr::Kind::Negate:
      return -evaluate(e.args.front(), sym);
    case Expr::Kind::Tensor:
      throw ParseError("tensor product outside a tensor context", e.pos);
  }
  throw ParseError("bad expression", e.pos);
}

NCPoly parse_poly(std::string_view text, const Symbols& sym) {
  NCPoly p = evaluate(parse_expr(text, false), sym);
  return reduced(p, sym);
}

namespace {

TensorPoly evaluate_tensor(const Expr& e, const Symbols& left, const Symbols& right) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      TensorPoly out(left.alphabet, right.alphabet);
      for (const auto& a : e.args) out += evaluate_tensor(a, left, right);
      return out;
    }
    case Expr::Kind::Negate:
      return evaluate_tensor(e.args.front(), left, right) * CycloScalar(-1);
    case Expr::Kind::Tensor: {
      NCPoly l = reduced(evaluate(e.args[0], left), left);
      NCPoly r = reduced(evaluate(e.args[1], right), right);
      TensorPoly out(left.alphabet, right.alphabet);
      out += TensorPoly::pure(l, r);
      return out;
    }
    default:
      throw ParseError("expected a sum of 'x (x) y' terms", e.pos);
  }
}

}  // namespace

TensorPoly parse_tensor(std::string_view text, const Symbols& left, const Symbols& right) {
  return evaluate_tensor(parse_expr(text, true), left, right);
}

}  // namespace qgalois
