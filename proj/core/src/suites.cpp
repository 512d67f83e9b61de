#include "qgalois/suites.hpp"

#include "qgalois/algebras.hpp"
#include "qgalois/findim.hpp"
#include "qgalois/galois.hpp"
#include "qgalois/properties.hpp"
#include "qgalois/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgalois {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hopf-axioms", "confluence", "coproduct-closed-form", "splitting", "galois-roundtrip",
      "cleaving",    "cocycle-table", "lambda-table",       "bicross",   "integrals",
      "rho",         "corep",      "quantum-plane",         "properties", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report verify_confluence() {
  Report rep("confluence");
  for (const auto& name : algebra_names()) {
    auto A = algebra(name);
    const ResolvabilityReport r = check_resolvable(A->rs());
    Check& c = rep.add(name + ": all overlap ambiguities resolve",
                       std::to_string(A->rs().rules().size()) + " rules, " + std::to_string(r.checked) + " ambiguities");
    c.expect(r.checked > 0 || A->rs().rules().size() <= 1);
    for (const auto& f : r.failures)
      c.expect(false, [&] {
        return "overlap " + f.ambiguity.overlap.to_string(*A->alphabet()) + ": " + A->format(f.via_first) + " vs " +
               A->format(f.via_second);
      });
    if (r.failures.empty()) c.expect(r.resolvable);
  }
  Check& dims = rep.add("basis sizes", "A(F) 27, H+ and H- 9, H+- 3, M(3) 9; the others infinite");
  const std::vector<std::pair<std::string, std::size_t>> finite = {{"af", 27}, {"hplus", 9}, {"hminus", 9}, {"hpm", 3}, {"m3", 9}};
  for (const auto& [name, n] : finite) {
    const auto b = algebra(name)->finite_basis();
    dims.expect(b && b->size() == n, [&] { return name + ": " + (b ? std::to_string(b->size()) : "infinite"); });
  }
  for (const char* name : {"slq2", "borel_plus", "borel_minus", "cartan", "qplane"})
    dims.expect(!algebra(name)->finite_basis(12).has_value(), [&] { return std::string(name) + " reported finite"; });

  Check& shape = rep.add("A(F) and H+ basis shape", "a^p b^r c^s and a^p b^r, exponents below 3");
  for (const char* name : {"af", "hplus"}) {
    auto F = findim(name);
    const Alphabet& al = *F->presentation().alphabet();
    std::vector<Word> expected;
    const bool has_c = al.find("c").has_value();
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < (has_c ? 3u : 1u); ++s) {
          Word w = Word::power(al.at("a"), p) * Word::power(al.at("b"), r);
          if (has_c) w *= Word::power(al.at("c"), s);
          expected.push_back(w);
        }
    std::vector<Word> got = F->basis();
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    shape.expect(got == expected, [&] { return std::string(name); });
  }
  return rep;
}

Report verify_hopf_axioms(unsigned bound) {
  Report rep("hopf-axioms");
  for (const char* name : {"slq2", "borel_plus", "borel_minus", "cartan"}) {
    auto H = hopf(name);
    Check& rules = rep.add(std::string(name) + ": structure maps respect the rules", "Delta, eps, S on both sides of each rule");
    const auto f = structure_map_failures(*H);
    rules.expect(f.empty(), [&] { return f.front(); });
    for (std::size_t i = 1; i < f.size(); ++i) rules.expect(false, [&] { return f[i]; });
    Check& words = rep.add(std::string(name) + ": Hopf axioms on basis words", "degree <= " + std::to_string(bound));
    for (const Word& w : H->rs().irreducible_words(bound)) {
      const auto fw = hopf_axiom_failures(*H, H->monomial(w));
      words.expect(fw.empty(), [&] { return fw.front(); });
    }
  }
  for (const char* name : {"af", "hplus", "hminus", "hpm"}) rep.append(hopf_axioms_exhaustive(*findim(name)));
  rep.append(verify_borel_quotients());
  rep.append(verify_frobenius());
  return rep;
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  auto b = [&](unsigned dflt) { return o.bound ? o.bound : dflt; };
  Report rep(name);
  if (name == "hopf-axioms") rep.append(verify_hopf_axioms(b(3)));
  else if (name == "confluence") rep.append(verify_confluence());
  else if (name == "coproduct-closed-form") rep.append(verify_coproduct_closed_form(b(3)));
  else if (name == "splitting") {
    rep.append(verify_splitting(b(6)));
    rep.append(verify_coinvariants());
  } else if (name == "galois-roundtrip") {
    rep.append(verify_coactions(b(4)));
    rep.append(verify_galois_roundtrip());
  } else if (name == "cleaving") rep.append(verify_cleaving());
  else if (name == "cocycle-table") rep.append(verify_cocycle_table());
  else if (name == "lambda-table") rep.append(verify_lambda_table());
  else if (name == "bicross") rep.append(verify_bicross());
  else if (name == "integrals") rep.append(verify_integrals());
  else if (name == "rho") {
    rep.append(verify_rho());
    rep.append(verify_m3());
  } else if (name == "corep") rep.append(corep_axioms_and_reduction());
  else if (name == "quantum-plane") rep.append(quantum_plane_coinvariants(b(6) / 3 ? b(6) / 3 : 1));
  else if (name == "properties") rep.append(verify_properties(o.seed));
  else if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") rep.append(run_suite(s, o));
  } else
    throw std::invalid_argument("unknown suite '" + name + "'");
  return rep;
}

}  // namespace qgalois
