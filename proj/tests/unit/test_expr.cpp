#include "qgalois/algebras.hpp"
#include "qgalois/expr.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace qgalois;

namespace {

Symbols free_symbols() {
  Symbols s;
  s.alphabet = Alphabet::make({"x", "y"});
  return s;
}

}  // namespace

TEST_CASE("grammar and precedence", "[expr]") {
  const Symbols s = free_symbols();
  const NCPoly x = NCPoly::generator(s.alphabet, "x"), y = NCPoly::generator(s.alphabet, "y");
  CHECK(parse_poly("x + y*x", s) == x + y * x);
  CHECK(parse_poly("(x + y)^2", s) == x * x + x * y + y * x + y * y);
  CHECK(parse_poly("2*x^3", s) == x * x * x * CycloScalar(2));
  CHECK(parse_poly("-x^2", s) == -(x * x));
  CHECK(parse_poly("x/2", s) == x * CycloScalar::rational(1, 2));
  CHECK(parse_poly("q*x", s) == x * CycloScalar::omega());
  CHECK(parse_poly("w^2", s) == NCPoly::constant(s.alphabet, qpow(2)));
  CHECK(parse_poly("q^-1", s) == NCPoly::constant(s.alphabet, qpow(2)));
  CHECK(parse_poly("x^0", s) == NCPoly::constant(s.alphabet, 1));
  CHECK(parse_poly("1/(1+q)", s) == NCPoly::constant(s.alphabet, (CycloScalar(1) + CycloScalar::omega()).inv()));
}

TEST_CASE("parse errors carry positions", "[expr]") {
  const Symbols s = free_symbols();
  auto position = [&](const std::string& text) -> long {
    try {
      parse_poly(text, s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("x +") == 3);
  CHECK(position("x + z") == 4);
  CHECK(position("(x") == 2);
  CHECK(position("x^-1") >= 0);  // no inverse registered
  CHECK(position("x / y") >= 0);  // division only by scalars
  CHECK(position("1/0") >= 0);
  CHECK(position("") == 0);
  CHECK(position("x y") >= 0);
}

TEST_CASE("tensor inputs", "[expr]") {
  const Symbols s = free_symbols();
  const TensorPoly t = parse_tensor("x (x) y + 2*y⊗1", s, s);
  CHECK(t.size() == 2);
  CHECK(t.coeff(Word{0}, Word{1}) == CycloScalar(1));
  CHECK(t.coeff(Word{1}, Word{}) == CycloScalar(2));
  CHECK_THROWS_AS(parse_tensor("x", s, s), ParseError);
}

TEST_CASE("print then parse is the identity on normal forms", "[expr]") {
  std::mt19937_64 rng(11);
  for (const char* name : {"slq2", "af", "borel_plus", "qplane", "m3"}) {
    auto A = algebra(name);
    const auto words = A->rs().irreducible_words(4);
    for (int n = 0; n < 40; ++n) {
      NCPoly p(A->alphabet());
      for (int t = 0; t < 4; ++t) {
        const Word& w = words[rng() % words.size()];
        p.add_term(w, CycloScalar(mpq_class(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1),
                                  mpq_class(static_cast<long>(rng() % 5) - 2)));
      }
      p = A->nf(p);
      const std::string text = A->format(p);
      INFO(name << ": " << text);
      REQUIRE(A->parse(text) == p);
      REQUIRE(A->parse(A->format(p, QStyle::Positive)) == p);
    }
  }
}
