#include "qgalois/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgalois {

unsigned MonomialOrder::weight(const Word& w) const {
  unsigned total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter l = w[i];
    if (l < weights_.size()) total += weights_[l];
  }
  return total;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (!weights_.empty()) {
    const unsigned wa = weight(a);
    const unsigned wb = weight(b);
    if (wa != wb) return wa < wb;
  }
  return a < b;
}

std::string MonomialOrder::describe(const Alphabet& alpha) const {
  std::string ranks;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) ranks += " < ";
    ranks += alpha.name(static_cast<Letter>(i));
  }
  bool weighted = std::any_of(weights_.begin(), weights_.end(), [](unsigned w) { return w != 0; });
  if (!weighted) return "length-lex, " + ranks;
  std::string ws;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) ws += ",";
    ws += alpha.name(static_cast<Letter>(i)) + "=" + std::to_string(i < weights_.size() ? weights_[i] : 0);
  }
  return "weighted(" + ws + ")-length-lex, " + ranks;
}

ReductionSystem::ReductionSystem(AlphabetPtr alpha, std::vector<Rule> rules, MonomialOrder order)
    : alpha_(std::move(alpha)), rules_(std::move(rules)), order_(std::move(order)) {
  if (!alpha_) throw std::invalid_argument("ReductionSystem: null alphabet");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.empty()) throw std::invalid_argument("ReductionSystem: empty left-hand side");
    for (std::size_t k = 0; k < r.lhs.size(); ++k)
      if (r.lhs[k] >= alpha_->size()) throw std::invalid_argument("ReductionSystem: letter outside alphabet");
    rules_[i].rhs = NCPoly(common_alphabet(alpha_, r.rhs.alphabet())) + r.rhs;
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!order_.less(w, r.lhs)) {
        throw std::invalid_argument("ReductionSystem: rule " + r.lhs.to_string(*alpha_) +
                                    " -> ... is not compatible with the order (monomial " + w.to_string(*alpha_) +
                                    " is not smaller)");
      }
    }
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      if (i != j && rules_[j].lhs.contains(rules_[i].lhs)) {
        throw std::invalid_argument("ReductionSystem: inclusion ambiguity between " +
                                    rules_[i].lhs.to_string(*alpha_) + " and " + rules_[j].lhs.to_string(*alpha_));
      }
    }
  }
}

const std::vector<std::pair<Word, CycloScalar>>& ReductionSystem::reduce_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(w.letters());
    if (it != cache_.end()) return it->second;
  }
  std::size_t best_pos = std::string::npos;
  std::size_t best_rule = 0;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const std::size_t pos = w.find(rules_[i].lhs);
    if (pos < best_pos) {
      best_pos = pos;
      best_rule = i;
    }
  }
  std::vector<std::pair<Word, CycloScalar>> result;
  if (best_pos == std::string::npos) {
    result.emplace_back(w, CycloScalar(1));
  } else {
    const Rule& r = rules_[best_rule];
    const Word prefix = w.sub(0, best_pos);
    const Word suffix = w.sub(best_pos + r.lhs.size());
    std::map<Word, CycloScalar> acc;
    for (const auto& [m, c] : r.rhs.terms()) {
      for (const auto& [m2, c2] : reduce_word(prefix * m * suffix)) {
        auto [it, inserted] = acc.try_emplace(m2, c * c2);
        if (!inserted) it->second += c * c2;
      }
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) result.emplace_back(m, std::move(c));
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  // unordered_map references stay valid across rehashing
  return cache_.try_emplace(w.letters(), std::move(result)).first->second;
}

NCPoly ReductionSystem::normal_form(const NCPoly& p) const {
  NCPoly out(common_alphabet(alpha_, p.alphabet()));
  for (const auto& [w, c] : p.terms())
    for (const auto& [m, c2] : reduce_word(w)) out.add_term(m, c * c2);
  return out;
}

NCPoly ReductionSystem::normal_form(const Word& w) const {
  NCPoly out(alpha_);
  for (const auto& [m, c] : reduce_word(w)) out.add_term(m, c);
  return out;
}

bool ReductionSystem::is_irreducible(const Word& w) const {
  return std::none_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return w.contains(r.lhs); });
}

std::vector<Word> ReductionSystem::irreducible_words(std::size_t max_length) const {
  std::vector<Word> all{Word()};
  std::vector<Word> frontier{Word()};
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t l = 0; l < alpha_->size(); ++l) {
        Word e = w * Word::letter(static_cast<Letter>(l));
        // only the new suffixes can contain a fresh left-hand side
        if (is_irreducible(e)) next.push_back(std::move(e));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [this](const Word& a, const Word& b) { return order_.less(a, b); });
  return all;
}

std::string ReductionSystem::format(const NCPoly& p, QStyle style) const {
  return p.to_string(style, [this](const Word& a, const Word& b) { return order_.less(a, b); });
}

NCPoly normal_form(const NCPoly& p, const ReductionSystem& rs) { return rs.normal_form(p); }

std::vector<Ambiguity> overlap_ambiguities(const ReductionSystem& rs) {
  std::vector<Ambiguity> out;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& li = rules[i].lhs;
      const Word& lj = rules[j].lhs;
      const std::size_t max_shared = std::min(li.size(), lj.size());
      for (std::size_t k = 1; k < max_shared; ++k) {
        if (li.sub(li.size() - k) == lj.sub(0, k)) {
          out.push_back(Ambiguity{i, j, li * lj.sub(k), k});
        }
      }
    }
  }
  return out;
}

ResolvabilityReport check_resolvable(const ReductionSystem& rs) {
  ResolvabilityReport report;
  const auto& rules = rs.rules();
  const AlphabetPtr& alpha = rs.alphabet();
  for (const Ambiguity& amb : overlap_ambiguities(rs)) {
    const Rule& ri = rules[amb.rule_i];
    const Rule& rj = rules[amb.rule_j];
    const Word u = ri.lhs.sub(0, ri.lhs.size() - amb.shared);
    const Word x = rj.lhs.sub(amb.shared);
    NCPoly first = rs.normal_form(ri.rhs * NCPoly::monomial(alpha, x));
    NCPoly second = rs.normal_form(NCPoly::monomial(alpha, u) * rj.rhs);
    ++report.checked;
    if (first != second) {
      report.resolvable = false;
      report.failures.push_back(AmbiguityFailure{amb, std::move(first), std::move(second)});
    }
  }
  return report;
}

}  // namespace qgalois
