#include "oracles.hpp"

#include "qgalois/qcalc.hpp"

#include <catch_amalgamated.hpp>

using namespace qgalois;

TEST_CASE("Gaussian binomials match box-partition counts", "[qcalc]") {
  for (long n = 0; n <= 14; ++n)
    for (long k = 0; k <= n; ++k) {
      INFO("n = " << n << ", k = " << k);
      REQUIRE(qbinom(n, k).coefficients() == oracle::box_partitions(n, k));
    }
}

TEST_CASE("values at omega", "[qcalc]") {
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= n; ++k) {
      const auto [r, s] = oracle::at_omega(oracle::box_partitions(n, k));
      INFO("n = " << n << ", k = " << k);
      REQUIRE(qbinom_at_omega(n, k) == CycloScalar(mpq_class(r), mpq_class(s)));
    }
  // (3)_q vanishes at w, so [3,1] and [3,2] do too.
  CHECK(qbinom_at_omega(3, 1).is_zero());
  CHECK(qbinom_at_omega(3, 2).is_zero());
  CHECK(qbinom_at_omega(2, 1) == CycloScalar(1) + CycloScalar::omega());
  CHECK(qbinom_at_omega(6, 3) == CycloScalar(2));
}

TEST_CASE("q-integers and q-factorials", "[qcalc]") {
  CHECK(qint(1) == IntPoly(std::vector<mpz_class>{1}));
  CHECK(qint(3).to_string() == "1 + t + t^2");
  CHECK(qfactorial(0) == IntPoly(std::vector<mpz_class>{1}));
  CHECK(qfactorial(3).to_string("q") == "1 + 2*q + 2*q^2 + q^3");
  CHECK(qint(3).evaluate(CycloScalar::omega()).is_zero());
  // [n,k] (k)! (n-k)! = (n)!
  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n; ++k) REQUIRE(qbinom(n, k) * qfactorial(k) * qfactorial(n - k) == qfactorial(n));
}

TEST_CASE("rendering and argument checks", "[qcalc]") {
  CHECK(qbinom(4, 2).to_string("q") == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(IntPoly().to_string() == "0");
  CHECK(IntPoly(std::vector<mpz_class>{0, -1, 0, 2}).to_string() == "-t + 2*t^3");
  CHECK_THROWS(qbinom(2, 3));
  CHECK_THROWS(qint(0));
}
