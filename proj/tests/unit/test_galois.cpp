#include "qgalois/galois.hpp"
#include "qgalois/suites.hpp"

#include <catch_amalgamated.hpp>

#include <map>

using namespace qgalois;

namespace {

void require_report(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(r.suite << " / " << c.name() << (c.details().empty() ? "" : ": " + c.details().front()));
    CHECK(c.passed());
  }
  REQUIRE(r.passed());
}

std::map<std::vector<std::string>, std::string> as_map(const std::vector<TableEntry>& t) {
  std::map<std::vector<std::string>, std::string> m;
  for (const auto& e : t) m[e.args] = e.value;
  return m;
}

long floor_div3(long n) { return n >= 0 ? n / 3 : -((-n + 2) / 3); }

}  // namespace

TEST_CASE("right coaction of slq2 over A(F)", "[galois]") {
  const auto& co = coaction("slq2");
  const auto& P = co.P();
  const auto& H = co.H().presentation();
  const TensorPoly da = co(P.parse("a"));
  CHECK(da == reduce_tensor(parse_tensor("a (x) a + b (x) c", P.symbols(), H.symbols()), P.rs(), H.rs()));
  CHECK(co.is_coinvariant(P.parse("a^3")));
  CHECK(co.is_coinvariant(P.parse("b^3*c^3 + d^3")));
  CHECK_FALSE(co.is_coinvariant(P.parse("a^2")));
  CHECK_FALSE(co.is_coinvariant(P.parse("b*c")));
}

TEST_CASE("Borel coaction closed form", "[galois]") {
  const auto& co = coaction("borel_plus");
  for (long p = -3; p <= 3; ++p)
    for (unsigned r = 0; r <= 4; ++r) {
      const auto& fam = cleaving_family("borel_plus", kDefaultNu);
      INFO("p = " << p << ", r = " << r);
      CHECK(co(fam.laurent(p, r)) == coaction_borel(p, r));
    }
}

TEST_CASE("splitting projection", "[galois]") {
  auto P = hopf("slq2");
  CHECK(splitting_s(P->parse("a^3*b^3 + a*b")) == P->parse("a^3*b^3"));
  CHECK(splitting_s(P->one()) == P->one());
  require_report(verify_s_module_map(3));
}

TEST_CASE("cleaving map values", "[galois]") {
  const std::map<std::vector<std::string>, std::string> expect = {
      {{"1"}, "1"},           {{"a"}, "a"},         {{"a^2"}, "a^-1"},      {{"b"}, "b"},
      {{"b^2"}, "a^-3*b^2"},  {{"a*b"}, "a^-2*b"},  {{"a^2*b"}, "a^-1*b"},  {{"a*b^2"}, "a^-2*b^2"},
      {{"a^2*b^2"}, "a^-1*b^2"}};
  CHECK(as_map(cleaving_table()) == expect);
}

TEST_CASE("cleaving closed form for several nu", "[galois]") {
  auto B = hopf("borel_plus");
  for (const Nu& nu : std::vector<Nu>{{0, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 2, 5}, {0, -3, 4}}) {
    const auto& fam = cleaving_family("borel_plus", nu);
    for (unsigned p = 0; p < 3; ++p)
      for (unsigned r = 0; r < 3; ++r) {
        const long n = p + r;
        const long e = -3 * (floor_div3(n) + nu[static_cast<std::size_t>(n % 3)]) + static_cast<long>(p);
        const NCPoly expect = B->parse("a^" + std::to_string(e) + "*b^" + std::to_string(r));
        INFO("nu = (" << nu[0] << "," << nu[1] << "," << nu[2] << "), p = " << p << ", r = " << r);
        CHECK(fam.phi(fam.h_index(p, r)) == expect);
      }
  }
  CHECK_THROWS(cleaving_family("borel_plus", Nu{1, 0, 0}));
}

TEST_CASE("cocycle values", "[galois]") {
  const std::map<std::vector<std::string>, std::string> expect = {
      {{"a", "a"}, "a^3"},
      {{"a^2", "a^2"}, "a^-3"},
      {{"b", "b^2"}, "a^-3*b^3"},
      {{"b", "a*b^2"}, "q^2*a^-3*b^3"},
      {{"b", "a^2*b^2"}, "q*b^3"},
      {{"b^2", "b"}, "a^-3*b^3"},
      {{"b^2", "a*b"}, "q*a^-6*b^3"},
      {{"b^2", "a^2*b"}, "q^2*a^-3*b^3"},
      {{"a*b", "b^2"}, "a^-6*b^3"},
      {{"a*b", "a*b^2"}, "q^2*a^-3*b^3"},
      {{"a*b", "a^2*b^2"}, "q*a^-3*b^3"},
      {{"a^2*b", "b^2"}, "a^-3*b^3"},
      {{"a^2*b", "a*b^2"}, "q^2*a^-3*b^3"},
      {{"a^2*b", "a^2*b^2"}, "q*a^-3*b^3"},
      {{"a*b^2", "b"}, "a^-3*b^3"},
      {{"a*b^2", "a*b"}, "q*a^-3*b^3"},
      {{"a*b^2", "a^2*b"}, "q^2*a^-3*b^3"},
      {{"a^2*b^2", "b"}, "b^3"},
      {{"a^2*b^2", "a*b"}, "q*a^-3*b^3"},
      {{"a^2*b^2", "a^2*b"}, "q^2*a^-3*b^3"}};
  CHECK(as_map(cocycle_table()) == expect);

  // Every other pair takes the value eps(h) eps(l).
  const auto& fam = cleaving_family("borel_plus", kDefaultNu);
  const auto& H = fam.H();
  std::size_t defaults = 0;
  for (std::size_t h = 0; h < 9; ++h)
    for (std::size_t l = 0; l < 9; ++l) {
      if (expect.count({H.label(h), H.label(l)})) continue;
      ++defaults;
      CHECK(fam.sigma(h, l) == fam.P().one() * (H.counit(h) * H.counit(l)));
    }
  CHECK(defaults == 61);
}

TEST_CASE("lambda values", "[galois]") {
  const std::map<std::vector<std::string>, std::string> expect = {
      {{"1"}, "1 (x) 1"},           {{"a"}, "a (x) 1"},           {{"a^2"}, "a^2 (x) 1"},
      {{"b"}, "b (x) 1"},           {{"a*b"}, "a*b (x) a^-3"},    {{"a^2*b"}, "a^2*b (x) a^-3"},
      {{"b^2"}, "b^2 (x) a^-6"},    {{"a*b^2"}, "a*b^2 (x) a^-3"}, {{"a^2*b^2"}, "a^2*b^2 (x) a^-3"}};
  CHECK(as_map(lambda_table()) == expect);
}

TEST_CASE("Galois suites", "[galois][suite]") {
  for (const char* s : {"splitting", "galois-roundtrip", "cleaving", "cocycle-table", "lambda-table", "bicross"}) {
    INFO(s);
    require_report(run_suite(s));
  }
}
