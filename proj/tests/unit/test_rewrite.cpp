#include "oracles.hpp"

#include "qgalois/algebras.hpp"
#include "qgalois/presentation_file.hpp"
#include "qgalois/rewrite.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace qgalois;

namespace {

Word to_word(const std::vector<int>& v) {
  Word w;
  for (int l : v) w *= Word::letter(static_cast<Letter>(l));
  return w;
}

}  // namespace

TEST_CASE("monomial orders", "[rewrite]") {
  const MonomialOrder plain;
  CHECK(plain.less(Word{1}, Word{0, 0}));
  CHECK(plain.less(Word{0, 1}, Word{1, 0}));
  CHECK_FALSE(plain.less(Word{0}, Word{0}));
  const MonomialOrder weighted({1, 0});
  // weight beats length
  CHECK(weighted.less(Word{1, 1, 1}, Word{0}));
  CHECK(weighted.weight(Word{0, 1, 0}) == 2);
}

TEST_CASE("rules must decrease", "[rewrite]") {
  auto al = Alphabet::make({"x", "y"});
  const NCPoly xy = NCPoly::monomial(al, Word{0, 1});
  CHECK_THROWS(ReductionSystem(al, {Rule{Word{0, 1}, NCPoly::monomial(al, Word{1, 0})}}));
  CHECK_NOTHROW(ReductionSystem(al, {Rule{Word{1, 0}, xy}}));
  // inclusion ambiguity
  CHECK_THROWS(ReductionSystem(al, {Rule{Word{1, 0}, xy}, Rule{Word{1, 0, 0}, NCPoly(al)}}));
}

TEST_CASE("quantum plane normal forms match the inversion count", "[rewrite]") {
  auto Q = algebra("qplane");
  const std::vector<std::vector<long>> twist = {{0, -1}, {0, 0}};
  std::mt19937_64 rng(3);
  for (int n = 0; n < 150; ++n) {
    std::vector<int> letters(rng() % 9);
    for (auto& l : letters) l = static_cast<int>(rng() % 2);
    const auto expect = oracle::sort_word(letters, twist);
    const NCPoly got = Q->rs().normal_form(to_word(letters));
    const Word sorted = Word::power(0, expect.exponents[0]) * Word::power(1, expect.exponents[1]);
    REQUIRE(got == NCPoly::monomial(Q->alphabet(), sorted, qpow(expect.q_exponent)));
  }
}

TEST_CASE("irreducible words", "[rewrite]") {
  auto Q = algebra("qplane");
  // x^i y^j with i + j <= 3
  CHECK(Q->rs().irreducible_words(3).size() == 10);
  auto F = algebra("af");
  CHECK(F->rs().irreducible_words(10).size() == 27);
  CHECK(F->rs().is_irreducible(Word{0, 0, 1, 2, 2}));
  CHECK_FALSE(F->rs().is_irreducible(Word{1, 0}));
  const auto w = F->rs().irreducible_words(2);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(F->rs().order().less(w[i - 1], w[i]));
}

TEST_CASE("overlaps of the built-in systems resolve", "[rewrite]") {
  for (const auto& name : algebra_names()) {
    INFO(name);
    const auto r = check_resolvable(algebra(name)->rs());
    CHECK(r.resolvable);
    CHECK(r.failures.empty());
  }
  CHECK(overlap_ambiguities(algebra("slq2")->rs()).size() == 8);
}

TEST_CASE("a non-confluent system is reported with a witness", "[rewrite]") {
  auto A = parse_presentation("letters: a b\nrule: a*b -> 1\nrule: b*a -> b\n");
  const auto r = check_resolvable(A->rs());
  REQUIRE_FALSE(r.resolvable);
  REQUIRE(r.failures.size() == 2);
  const auto& f = r.failures.front();
  CHECK(f.ambiguity.overlap.to_string(*A->alphabet()) == "a*b*a");
  // (ab)a -> a and a(ba) -> ab -> 1
  CHECK(f.via_first != f.via_second);
}

TEST_CASE("presentation files", "[rewrite]") {
  auto A = parse_presentation(
      "# a commutative plane\n"
      "name: plane\n"
      "letters: x y\n"
      "weights: 1 1\n"
      "rule: y*x -> q^2*x*y\n");
  CHECK(A->name() == "plane");
  CHECK(A->format(A->parse("y*x*y")) == "q^-1*x*y^2");
  CHECK(check_resolvable(A->rs()).resolvable);
  CHECK_THROWS_AS(parse_presentation("letters: x\nrule: x -> x*x\n"), std::exception);
  CHECK_THROWS_AS(parse_presentation("letters: x\nrule x -> 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters: x\nfoo: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters: x\nrule: 2*x -> 1\n"), ParseError);
  try {
    parse_presentation("letters: x\n\nrule: x*z -> 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
  }
}
