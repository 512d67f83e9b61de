#include "qgalois/ncpoly.hpp"

#include <catch_amalgamated.hpp>

using namespace qgalois;

namespace {

const AlphabetPtr& abc() {
  static const AlphabetPtr a = Alphabet::make({"a", "b", "c"});
  return a;
}

}  // namespace

TEST_CASE("alphabet lookup", "[ncpoly]") {
  CHECK(abc()->size() == 3);
  CHECK(abc()->at("b") == 1);
  CHECK(abc()->name(2) == "c");
  CHECK_FALSE(abc()->find("z").has_value());
  CHECK_THROWS_AS(abc()->at("z"), std::invalid_argument);
}

TEST_CASE("words", "[ncpoly]") {
  const Word w{0, 1, 1, 2};
  CHECK(w.size() == 4);
  CHECK(w.count(1) == 2);
  CHECK(w.to_string(*abc()) == "a*b^2*c");
  CHECK(Word().to_string(*abc()) == "1");
  CHECK((Word::power(0, 2) * Word::letter(2)).to_string(*abc()) == "a^2*c");
  CHECK(w.sub(1, 2) == Word::power(1, 2));
  CHECK(w.contains(Word{1, 2}));
  CHECK_FALSE(w.contains(Word{2, 1}));
  // Shorter words come first, then letter order.
  CHECK(Word{2} < Word{0, 0});
  CHECK(Word{0, 1} < Word{1, 0});
}

TEST_CASE("free algebra arithmetic", "[ncpoly]") {
  const NCPoly a = NCPoly::generator(abc(), "a"), b = NCPoly::generator(abc(), "b");
  const NCPoly one = NCPoly::constant(abc(), 1);
  CHECK((a * b) != (b * a));
  CHECK(((a + b) * (a + b)).size() == 4);
  CHECK((a - a).is_zero());
  CHECK((a * b).coeff(Word{0, 1}) == CycloScalar(1));
  CHECK((one * a) == a);
  CHECK((a * CycloScalar::omega()).coeff(Word{0}) == CycloScalar::omega());
  CHECK(one.as_scalar() == CycloScalar(1));
  CHECK_FALSE(a.as_scalar().has_value());
  const NCPoly p = a * CycloScalar(2) + b * b * qpow(2) - one;
  CHECK(p.to_string() == "-1 + 2*a + q^-1*b^2");
  CHECK(p.to_string(QStyle::Positive) == "-1 + 2*a + q^2*b^2");
}

TEST_CASE("alphabets must agree", "[ncpoly]") {
  const AlphabetPtr other = Alphabet::make({"x", "y"});
  const NCPoly a = NCPoly::generator(abc(), "a"), x = NCPoly::generator(other, "x");
  CHECK_THROWS_AS(a + x, AlphabetMismatch);
  // A scalar without alphabet combines with anything.
  CHECK_NOTHROW(a + NCPoly::constant(nullptr, 1));
}

TEST_CASE("tensors", "[ncpoly]") {
  const NCPoly a = NCPoly::generator(abc(), "a"), b = NCPoly::generator(abc(), "b");
  const TensorPoly t = TensorPoly::pure(a + b, b);
  CHECK(t.size() == 2);
  CHECK(t.coeff(Word{0}, Word{1}) == CycloScalar(1));
  CHECK(t.left_of(Word{1}) == a + b);
  const TensorPoly sq = tensor_mul(t, t);
  CHECK(sq.coeff(Word{0, 1}, Word{1, 1}) == CycloScalar(1));
  CHECK(sq.size() == 4);
  CHECK((t - t).is_zero());
  CHECK(TensorPoly::pure(a, b).to_string() == "a (x) b");
}

TEST_CASE("scalar rendering", "[ncpoly]") {
  CHECK(format_scalar(CycloScalar()) == "0");
  CHECK(format_scalar(CycloScalar(-1)) == "-1");
  CHECK(format_scalar(qpow(2)) == "q^-1");
  CHECK(format_scalar(qpow(2), QStyle::Positive) == "q^2");
  CHECK(format_scalar(qpow(1) * CycloScalar::rational(-3, 2)) == "-3/2*q");
  CHECK(format_scalar(CycloScalar(mpq_class(1), mpq_class(2))) == "(1 + 2*q)");
}
