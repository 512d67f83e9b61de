#include "matrix_model.hpp"

#include "qgalois/findim.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/suites.hpp"

#include <catch_amalgamated.hpp>

using namespace qgalois;

TEST_CASE("exact linear algebra", "[findim][linalg]") {
  const CycloScalar w = CycloScalar::omega();
  CHECK(rank({{1, w}, {w, w * w}}) == 1);
  CHECK(rank({{1, 0}, {0, w}}) == 2);
  CHECK(rank(std::vector<FinVec>{}) == 0);
  const auto ns = nullspace({{1, 1, 0}, {0, 1, w}}, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][2] == CycloScalar(1));
  CHECK(ns[0][0] + ns[0][1] == CycloScalar());
  CHECK(ns[0][1] + w * ns[0][2] == CycloScalar());
  const ExactMatrix m2(2, 2, {0, 1, 1, 0});
  CHECK(matrix_power(m2, 2) == ExactMatrix::identity(2));
  CHECK(kron(m2, ExactMatrix::identity(2)).rows() == 4);
}

TEST_CASE("dimensions and basis labels", "[findim]") {
  auto F = findim("af");
  CHECK(F->dim() == 27);
  CHECK(findim("hplus")->dim() == 9);
  CHECK(findim("hminus")->dim() == 9);
  CHECK(findim("hpm")->dim() == 3);
  CHECK(F->label(F->unit()) == "1");
  CHECK(F->label(F->index(Word{0, 1, 1, 2, 2})) == "a*b^2*c^2");
  CHECK_FALSE(F->find(Word{1, 0}).has_value());
}

TEST_CASE("A(F) products agree with the matrix model", "[findim]") {
  auto F = findim("af");
  const auto& H = F->presentation();
  for (std::size_t i = 0; i < F->dim(); ++i)
    for (std::size_t j = 0; j < F->dim(); j += 2) {
      const model::Mat lhs = model::image(F->to_poly(F->mul(F->basis_vec(i), F->basis_vec(j))));
      const model::Mat rhs = model::image(H.monomial(F->basis()[i] * F->basis()[j]));
      INFO(F->label(i) << " * " << F->label(j));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("structure constants of A(F)", "[findim]") {
  auto F = findim("af");
  const std::size_t a = F->index(Word{0}), b = F->index(Word{1}), c = F->index(Word{2});
  CHECK(F->counit(a) == CycloScalar(1));
  CHECK(F->counit(b).is_zero());
  CHECK(F->counit(F->index(Word{0, 0})) == CycloScalar(1));
  // Delta(b) = a (x) b + b (x) d with d = a^2 + q a^2 b c
  auto H = hopf("af");
  TensorPoly delta_b(H->alphabet(), H->alphabet());
  for (const auto& e : F->coproduct(b)) delta_b.add_term(F->basis()[e.left], F->basis()[e.right], e.coeff);
  CHECK(delta_b == H->reduce(parse_tensor("a (x) b + b (x) d", H->symbols(), H->symbols())));
  CHECK(F->apply_antipode(F->basis_vec(c)) == F->to_vec(H->parse("-q*c")));
  CHECK(F->apply_antipode(F->basis_vec(a)) == F->to_vec(H->parse("d")));
}

TEST_CASE("exhaustive Hopf axioms", "[findim]") {
  for (const char* name : {"af", "hplus", "hminus", "hpm"}) {
    INFO(name);
    const Report r = hopf_axioms_exhaustive(*findim(name));
    for (const auto& c : r.checks) {
      INFO(c.name());
      CHECK(c.passed());
    }
  }
}

TEST_CASE("convolution", "[findim]") {
  auto F = findim("hplus");
  // S * id = id * S = unit o counit
  const auto S = antipode_map(*F), id = identity_map(*F), ue = unit_counit_map(*F);
  CHECK(convolve(S, id, *F) == ue);
  CHECK(convolve(id, S, *F) == ue);
  const auto eps = counit_functional(*F);
  CHECK(convolve(eps, eps, *F) == eps);
}

TEST_CASE("integrals of A(F)", "[findim]") {
  auto F = findim("af");
  const auto& H = F->presentation();
  const std::size_t b2c2 = F->index(H.parse("b^2*c^2").terms().begin()->first);
  const auto left = left_integrals(*F), right = right_integrals(*F);
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  const FinVec h = normalize_at(left[0], b2c2);
  for (std::size_t i = 0; i < F->dim(); ++i) CHECK(h[i] == CycloScalar(i == b2c2 ? 1 : 0));
  CHECK(normalize_at(right[0], b2c2) == h);

  // x Lambda_L = eps(x) Lambda_L, checked in the matrix model on the generators.
  const model::Mat lam_l = model::image(H.parse("(1 + a + a^2)*b^2*c^2"));
  const model::Mat lam_r = model::image(H.parse("b^2*c^2*(1 + a + a^2)"));
  const auto& g = model::generators();
  CHECK(model::mul(g[0], lam_l) == lam_l);
  CHECK(model::mul(g[1], lam_l) == model::Mat(27));
  CHECK(model::mul(g[2], lam_l) == model::Mat(27));
  CHECK(model::mul(lam_r, g[0]) == lam_r);
  CHECK(model::mul(lam_r, g[1]) == model::Mat(27));
  CHECK(model::mul(lam_r, g[2]) == model::Mat(27));
  CHECK_FALSE(lam_l == lam_r);

  const auto in_l = integrals_in(*F, Side::Left);
  REQUIRE(in_l.size() == 1);
  CHECK(normalize_at(in_l[0], b2c2) == F->to_vec(H.parse("(1 + a + a^2)*b^2*c^2")));
  CHECK(run_suite("integrals").passed());
}

TEST_CASE("Borel quotients", "[findim]") { CHECK(verify_borel_quotients().passed()); }
