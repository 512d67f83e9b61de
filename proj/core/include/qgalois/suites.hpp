#pragma once

#include "qgalois/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qgalois {

struct SuiteOptions {
  /// Degree or exponent bound for sampled suites; 0 keeps each suite's default.
  unsigned bound = 0;
  std::uint64_t seed = 20240601;
};

/// hopf-axioms, confluence, coproduct-closed-form, splitting, galois-roundtrip,
/// cleaving, cocycle-table, lambda-table, bicross, integrals, rho, corep,
/// quantum-plane, properties, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

/// Basis sizes and confluence certificates of the built-in presentations.
Report verify_confluence();
/// Hopf axioms: exhaustive on the finite quotients, rule checks and sampled
/// words up to `bound` on the infinite ones, the Frobenius map, H+ vs H-.
Report verify_hopf_axioms(unsigned bound = 3);

}  // namespace qgalois
