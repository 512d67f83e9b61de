#pragma once

#include "qgalois/ncpoly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgalois {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  /// Position-free variant; `what` is used verbatim.
  struct Verbatim {};
  ParseError(Verbatim, const std::string& what, std::size_t pos) : std::runtime_error(what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parse tree of the input grammar
///   sum     := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*   [ '(x)' factor-chain in tensor mode ]
///   factor  := '-' factor | power
///   power   := atom ('^' '-'? INT)?
///   atom    := INT | IDENT | '(' sum ')'
/// `q` and `w` both denote the primitive cube root of unity.
struct Expr {
  enum class Kind { Number, Omega, Symbol, Sum, Product, Quotient, Power, Negate, Tensor };

  Kind kind = Kind::Number;
  mpq_class number;
  std::string name;
  long exponent = 1;
  std::vector<Expr> args;
  std::size_t pos = 0;
};

Expr parse_expr(std::string_view text, bool tensor_mode = false);

/// Name resolution for one algebra.
struct Symbols {
  AlphabetPtr alphabet;
  /// Names that expand to a polynomial (d in A(F), a_inv in P+).
  std::map<std::string, NCPoly> aliases;
  /// Two-sided inverses for negative exponents, keyed by name.
  std::map<std::string, NCPoly> inverses;
  /// Applied after every product; identity when empty.
  std::function<NCPoly(const NCPoly&)> reduce;
};

NCPoly evaluate(const Expr& e, const Symbols& sym);
NCPoly parse_poly(std::string_view text, const Symbols& sym);

/// Sums of `left (x) right` terms; `⊗` is accepted as well.
TensorPoly parse_tensor(std::string_view text, const Symbols& left, const Symbols& right);

}  // namespace qgalois
