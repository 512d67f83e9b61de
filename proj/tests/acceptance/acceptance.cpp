// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "qgalois/algebras.hpp"
#include "qgalois/findim.hpp"
#include "qgalois/galois.hpp"
#include "qgalois/properties.hpp"
#include "qgalois/rep.hpp"
#include "qgalois/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace qgalois;

namespace {

Report only(const Report& r, const std::vector<std::string>& prefixes) {
  Report out(r.suite);
  for (const auto& c : r.checks)
    for (const auto& p : prefixes)
      if (c.name().rfind(p, 0) == 0) {
        out.checks.push_back(c);
        break;
      }
  return out;
}

Report basis_and_confluence() {
  Report r = only(verify_confluence(), {"af:", "basis sizes", "A(F) and H+ basis shape"});
  Check& c = r.add("dimensions", "A(F) 27, H+ 9");
  c.expect(findim("af")->dim() == 27);
  c.expect(findim("hplus")->dim() == 9);
  return r;
}

Report diamond() {
  Report r("diamond");
  for (const char* name : {"af", "slq2"}) {
    const auto res = check_resolvable(algebra(name)->rs());
    Check& c = r.add(std::string(name) + " resolvable", "zero unresolved overlaps");
    c.expect(res.resolvable && res.failures.empty() && res.checked > 0);
  }
  r.add("slq2 rule count", "7 rules").expect(algebra("slq2")->rs().rules().size() == 7);
  return r;
}

Report with(Report a, const Report& b) {
  a.append(b);
  return a;
}

struct Criterion {
  const char* label;
  std::function<Report()> run;
};

}  // namespace

int main() {
  const std::uint64_t seed = SuiteOptions{}.seed;
  const std::vector<Criterion> criteria = {
      {"basis of A(F) (27) and H+ (9), confluence certified", basis_and_confluence},
      {"diamond lemma: A(F) and slq2 systems resolve every overlap", diamond},
      {"coproduct closed forms equal the multiplicative expansion, exponents <= 3", [] { return verify_coproduct_closed_form(3); }},
      {"splitting map is a module map over the cubes, degree <= 6", [] { return verify_s_module_map(6); }},
      {"coinvariants: cubes pass, the 26 non-unit A(F)-shaped monomials fail", verify_coinvariants},
      {"Galois roundtrip on A(F), H+ and the Borel pair", [] { return with(verify_coactions(4), verify_galois_roundtrip()); }},
      {"cleaving table and cleaving identities for 4 choices of nu", verify_cleaving},
      {"cocycle table with default rule, normalized cocycle on all triples", verify_cocycle_table},
      {"twisted product associative and isomorphic to P+", verify_twisted_product},
      {"lambda table, zeta, theta and its inverse", [] { return with(verify_lambda_table(), verify_bicross()); }},
      {"integrals on and in A(F)", verify_integrals},
      {"27-dimensional representation: relations, rank 27, delta identity", verify_rho},
      {"corepresentation matrix, axioms and the two 3x3 blocks", corep_axioms_and_reduction},
      {"quantum plane coinvariants to degree 6 and the bracket identity", [] { return quantum_plane_coinvariants(2); }},
      {"seeded property families, >= 1000 cases", [seed] {
         Report r = verify_properties(seed);
         r.add("case count", ">= 1000").expect(r.cases() >= 1000);
         return r;
       }},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    std::string error;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && r.passed();
    failed += !ok;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s [%zu cases, %zu failures, %.2fs]\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].label,
                r.cases(), r.failures(), secs);
    if (!error.empty()) std::printf("     exception: %s\n", error.c_str());
    for (const auto& c : r.checks)
      if (!c.passed()) {
        std::printf("     failed check: %s (%s)\n", c.name().c_str(), c.reference().c_str());
        for (const auto& d : c.details()) std::printf("       %s\n", d.c_str());
      }
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed, %.2fs\n", failed, criteria.size(), total);
  return failed ? 1 : 0;
}
