#include "matrix_model.hpp"

#include "qgalois/rep.hpp"
#include "qgalois/suites.hpp"

#include <catch_amalgamated.hpp>

using namespace qgalois;

namespace {

model::Mat from_exact(const ExactMatrix& m) {
  model::Mat out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("generator matrices match the model", "[rep]") {
  CHECK(from_exact(rho_generator("a")) == model::generators()[0]);
  CHECK(from_exact(rho_generator("b")) == model::generators()[1]);
  CHECK(from_exact(rho_generator("c")) == model::generators()[2]);
}

TEST_CASE("rho on polynomials is multiplicative", "[rep]") {
  auto F = findim("af");
  const auto& H = F->presentation();
  for (const char* text : {"a*b + c", "d", "b^2*c - q*a", "(1 + a)*(b - c^2)"}) {
    const NCPoly x = H.parse(text);
    INFO(text);
    CHECK(from_exact(rho(x)) == model::image(x));
  }
  CHECK(from_exact(rho(H.parse("a*d - q*b*c"))) == model::identity(27));
}

TEST_CASE("faithfulness", "[rep]") {
  std::vector<FinVec> rows;
  for (const auto& m : rho_basis()) rows.push_back(m.entries());
  CHECK(rank(rows) == 27);
  // h^{klm}(rho(a^k b^l c^m)) is the only nonzero value among basis words.
  auto F = findim("af");
  const std::size_t i = F->index(Word{0, 1, 1, 2});
  CHECK(h_klm(rho_basis()[i], 1, 2, 1) == CycloScalar(1));
  CHECK(h_klm(rho_basis()[i], 1, 1, 1).is_zero());
}

TEST_CASE("M(3) matrices", "[rep]") {
  const ExactMatrix x = m3_x_matrix(), y = m3_y_matrix();
  CHECK(matrix_power(x, 3) == ExactMatrix::identity(3));
  CHECK(matrix_power(y, 3) == ExactMatrix::identity(3));
  CHECK(y * x == qpow(-1) * (x * y));
}

TEST_CASE("corepresentation matrix entries", "[rep]") {
  auto A = algebra("af");
  const CorepMatrix& N = corep_matrix();
  REQUIRE(N.size() == 9);
  auto at = [&](std::size_t j, std::size_t i) { return N[j - 1][i - 1]; };
  CHECK(at(1, 1) == A->one());
  CHECK(at(1, 7) == A->parse("a^2*(b + q^2*c^2)"));
  CHECK(at(1, 8) == A->parse("a*(b^2 + q^2*c - q*b*c^2)"));
  CHECK(at(2, 9) == A->parse("a^2*(b^2 - q*c)"));
  CHECK(at(3, 9) == A->parse("a*(q^2*b^2*c + q*c^2 - b)"));
  CHECK(at(5, 4) == A->parse("-q^2*a*c"));
  CHECK(at(5, 5) == A->parse("1 - b*c"));
  CHECK(at(5, 6) == A->parse("-q^2*b*d"));
  CHECK(at(6, 6) == A->parse("d^2"));
  CHECK(at(7, 8) == A->parse("-b"));
  CHECK(at(8, 8) == A->parse("d"));
  CHECK(at(9, 9) == A->one());
  std::size_t zeros = 0;
  for (const auto& row : N)
    for (const auto& e : row) zeros += e.is_zero();
  CHECK(zeros == 81 - 23);

  const CorepMatrix n1 = restrict_corep(N, corep_block_n1());
  CHECK(n1[0][1] == A->parse("a^2*(b + q^2*c^2)"));
  CHECK(n1[1][2] == A->parse("-b"));
  CHECK(n1[2][2] == A->parse("d"));
  CHECK(restrict_corep(N, corep_block_n2())[1][2] == A->parse("a*(q^2*b^2*c + q*c^2 - b)"));
}

TEST_CASE("brackets", "[rep]") {
  CHECK(bracket1(7) == 2);
  CHECK(bracket2(7) == 1);
  CHECK(bracket1(-1) == -1);
  CHECK(bracket2(-1) == 2);
  for (long n = -20; n <= 20; ++n) CHECK(3 * bracket1(n) + bracket2(n) == n);
  for (long k = 0; k < 6; ++k)
    for (long m = 0; m < 6; ++m)
      for (long u = 0; u < 6; ++u) REQUIRE(bracket_identity(k, m, u));
}

TEST_CASE("representation suites", "[rep][suite]") {
  for (const char* s : {"rho", "corep", "quantum-plane"}) {
    const Report r = run_suite(s);
    for (const auto& c : r.checks) {
      INFO(s << " / " << c.name() << (c.details().empty() ? "" : ": " + c.details().front()));
      CHECK(c.passed());
    }
  }
}
