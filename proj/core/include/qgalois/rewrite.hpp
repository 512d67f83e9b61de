#pragma once

#include "qgalois/ncpoly.hpp"

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgalois {

/// Monomial well-order on words: weighted degree, then length, then
/// lexicographic by letter rank (the letter's alphabet position).
///
/// With all weights zero this is plain length-lex. Weights are non-negative,
/// so the order is compatible with concatenation and has the descending chain
/// condition.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<unsigned> weights) : weights_(std::move(weights)) {}

  unsigned weight(const Word& w) const;
  bool less(const Word& a, const Word& b) const;
  const std::vector<unsigned>& weights() const { return weights_; }
  std::string describe(const Alphabet& alpha) const;

 private:
  std::vector<unsigned> weights_;
};

struct Rule {
  Word lhs;
  NCPoly rhs;
};

struct Ambiguity {
  std::size_t rule_i = 0;
  std::size_t rule_j = 0;
  /// lhs_i = u v, lhs_j = v x, overlap = u v x.
  Word overlap;
  std::size_t shared = 0;
};

struct AmbiguityFailure {
  Ambiguity ambiguity;
  NCPoly via_first;
  NCPoly via_second;
};

struct ResolvabilityReport {
  bool resolvable = true;
  std::size_t checked = 0;
  std::vector<AmbiguityFailure> failures;
};

/// Ordered rule list plus a monomial order; defines normal forms.
///
/// Construction rejects rules whose right-hand side is not strictly below the
/// left-hand side, and any inclusion ambiguity (one lhs inside another).
/// Normal forms always rewrite the leftmost occurrence in each monomial; word
/// reductions are memoized behind a mutex.
class ReductionSystem {
 public:
  ReductionSystem(AlphabetPtr alpha, std::vector<Rule> rules, MonomialOrder order = {});

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const MonomialOrder& order() const { return order_; }

  NCPoly normal_form(const NCPoly& p) const;
  NCPoly normal_form(const Word& w) const;
  bool is_irreducible(const Word& w) const;

  /// All irreducible words up to `max_length`, in monomial order.
  std::vector<Word> irreducible_words(std::size_t max_length) const;

  /// Text rendering with terms ascending in the monomial order.
  std::string format(const NCPoly& p, QStyle style = QStyle::Negative) const;

 private:
  const std::vector<std::pair<Word, CycloScalar>>& reduce_word(const Word& w) const;

  AlphabetPtr alpha_;
  std::vector<Rule> rules_;
  MonomialOrder order_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, std::vector<std::pair<Word, CycloScalar>>> cache_;
};

NCPoly normal_form(const NCPoly& p, const ReductionSystem& rs);

/// Every proper overlap lhs_i = u v, lhs_j = v x with u, v, x nonempty.
std::vector<Ambiguity> overlap_ambiguities(const ReductionSystem& rs);

/// Reduces (rhs_i) x and u (rhs_j) to normal form for every overlap and compares.
ResolvabilityReport check_resolvable(const ReductionSystem& rs);

}  // namespace qgalois
