#pragma once

#include "qgalois/report.hpp"

#include <cstdint>

namespace qgalois {

/// Seeded randomized identities: field axioms in Q(w), q-Pascal and q-Lucas,
/// the q-binomial theorem in the quantum plane (k <= 6), normal-form
/// idempotence, linearity and multiplicativity, and Hopf axioms on random
/// elements. `per_family` cases for each of the seven families.
Report verify_properties(std::uint64_t seed, unsigned per_family = 160);

}  // namespace qgalois
