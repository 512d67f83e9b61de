#include "oracles.hpp"

#include "qgalois/cyclo.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using qgalois::CycloScalar;
using qgalois::qpow;

namespace {

CycloScalar from(const oracle::Mat2& m) { return CycloScalar(m.re(), m.om()); }

}  // namespace

TEST_CASE("omega is a primitive cube root of unity", "[cyclo]") {
  const CycloScalar w = CycloScalar::omega();
  CHECK(w * w == CycloScalar(-1) - w);
  CHECK(w * w * w == CycloScalar(1));
  CHECK(w != CycloScalar(1));
  CHECK(w + w * w == CycloScalar(-1));
  CHECK(w.conj() == w * w);
  CHECK(w.norm() == 1);
  CHECK(w.inv() == w * w);
}

TEST_CASE("qpow depends on the exponent mod 3", "[cyclo]") {
  CHECK(qpow(0) == CycloScalar(1));
  CHECK(qpow(1) == CycloScalar::omega());
  for (long n = -12; n <= 12; ++n) {
    CHECK(qpow(n) == qpow(n + 3));
    CHECK(qpow(n) * qpow(-n) == CycloScalar(1));
  }
  CHECK(qpow(-1) == qpow(2));
  CHECK(qpow(1) + qpow(2) == CycloScalar(-1));
}

TEST_CASE("arithmetic agrees with the companion-matrix model", "[cyclo]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  for (int n = 0; n < 200; ++n) {
    auto rat = [&] {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      return r;
    };
    const mpq_class r1 = rat(), s1 = rat(), r2 = rat(), s2 = rat();
    const CycloScalar x(r1, s1), y(r2, s2);
    const auto mx = oracle::Mat2::of(r1, s1), my = oracle::Mat2::of(r2, s2);
    REQUIRE(x * y == from(mx * my));
    REQUIRE(x + y == from(mx + my));
    // The norm is the determinant of the model matrix.
    REQUIRE(x.norm() == mx.m[0] * mx.m[3] - mx.m[1] * mx.m[2]);
    if (!x.is_zero()) REQUIRE(from(mx * oracle::Mat2::of(x.inv().re_part(), x.inv().om_part())) == CycloScalar(1));
  }
}

TEST_CASE("canonical text rendering", "[cyclo]") {
  CHECK(CycloScalar().to_string() == "0");
  CHECK(CycloScalar(3).to_string() == "3");
  CHECK(CycloScalar::rational(-2, 4).to_string() == "-1/2");
  CHECK(CycloScalar::omega().to_string() == "w");
  CHECK(CycloScalar(mpq_class(1, 2), mpq_class(-3, 4)).to_string() == "1/2 - 3/4*w");
  CHECK((-CycloScalar::omega()).to_string() == "-w");
  CHECK((qpow(2)).to_string() == "-1 - w");
}

TEST_CASE("q-power recognition", "[cyclo]") {
  mpq_class c;
  int k = -1;
  REQUIRE(qgalois::as_rational_times_qpow(qpow(2) * CycloScalar(5), c, k));
  CHECK(c == 5);
  CHECK(k == 2);
  REQUIRE(qgalois::as_rational_times_qpow(CycloScalar(-7), c, k));
  CHECK((c == -7 && k == 0));
  CHECK_FALSE(qgalois::as_rational_times_qpow(CycloScalar(1) + CycloScalar(mpq_class(0), mpq_class(2)), c, k));
}

TEST_CASE("inverting zero throws", "[cyclo]") { CHECK_THROWS_AS(CycloScalar().inv(), std::domain_error); }
