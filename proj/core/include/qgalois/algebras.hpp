#pragma once

#include "qgalois/expr.hpp"
#include "qgalois/ncpoly.hpp"
#include "qgalois/report.hpp"
#include "qgalois/rewrite.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgalois {

/// An algebra given by generators, a reduction system and parser extras
/// (aliases such as d = a^2 + q*a^2*b*c in A(F), inverses for Laurent letters).
class PresentedAlgebra {
 public:
  PresentedAlgebra(std::string name, std::shared_ptr<const ReductionSystem> rs);
  virtual ~PresentedAlgebra() = default;

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return rs_->alphabet(); }
  const ReductionSystem& rs() const { return *rs_; }
  std::shared_ptr<const ReductionSystem> rs_ptr() const { return rs_; }

  NCPoly nf(const NCPoly& p) const { return rs_->normal_form(p); }
  NCPoly mul(const NCPoly& x, const NCPoly& y) const { return nf(x * y); }
  NCPoly one() const { return NCPoly::constant(alphabet(), CycloScalar(1)); }
  NCPoly monomial(const Word& w) const { return NCPoly::monomial(alphabet(), w); }
  /// Generator or alias by name.
  NCPoly gen(const std::string& name) const;
  /// Parses an expression in this algebra and reduces it.
  NCPoly parse(const std::string& text) const;
  /// Normal form printed in the algebra's display basis, terms ascending in the monomial order.
  std::string format(const NCPoly& p, QStyle style = QStyle::Negative) const;

  /// Display form of an irreducible word: printed monomial and the factor c
  /// with word = c * printed monomial. Identity when unset.
  using DisplayFn = std::function<std::pair<std::string, CycloScalar>(const Word&)>;
  void set_display(DisplayFn f) { display_ = std::move(f); }
  std::pair<std::string, CycloScalar> display(const Word& w) const;

  void set_alias(const std::string& name, NCPoly value);
  void set_inverse(const std::string& name, NCPoly value);
  const Symbols& symbols() const { return symbols_; }

  /// Irreducible words when there are finitely many (searched up to `max_length`).
  std::optional<std::vector<Word>> finite_basis(std::size_t max_length = 64) const;

 private:
  std::string name_;
  std::shared_ptr<const ReductionSystem> rs_;
  Symbols symbols_;
  DisplayFn display_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Normal form of both tensor slots.
TensorPoly reduce_tensor(const TensorPoly& t, const ReductionSystem& left, const ReductionSystem& right);
TensorPoly tensor_product(const TensorPoly& x, const TensorPoly& y, const ReductionSystem& left,
                          const ReductionSystem& right);

/// Both slots in their algebras' display bases.
std::string format_tensor(const TensorPoly& t, const PresentedAlgebra& left, const PresentedAlgebra& right,
                          QStyle style = QStyle::Negative);

/// "a", "a^3", "a^-2"; empty for exponent 0.
std::string power_text(const std::string& name, long exponent);

/// Presented Hopf algebra. Delta, epsilon and S are the homomorphic
/// (for S anti-homomorphic) extensions of their generator values; every
/// output is in normal form. Word images are memoized.
class HopfPresentation : public PresentedAlgebra {
 public:
  HopfPresentation(std::string name, std::shared_ptr<const ReductionSystem> rs, std::vector<TensorPoly> delta,
                   std::vector<CycloScalar> eps, std::vector<NCPoly> antipode);

  TensorPoly coproduct(const Word& w) const;
  TensorPoly coproduct(const NCPoly& p) const;
  CycloScalar counit(const Word& w) const;
  CycloScalar counit(const NCPoly& p) const;
  NCPoly antipode(const Word& w) const;
  NCPoly antipode(const NCPoly& p) const;

  TensorPoly reduce(const TensorPoly& t) const { return reduce_tensor(t, rs(), rs()); }
  /// m: the tensor slots multiplied together.
  NCPoly multiply(const TensorPoly& t) const;

  const std::vector<TensorPoly>& coproduct_on_gens() const { return delta_; }
  const std::vector<CycloScalar>& counit_on_gens() const { return eps_; }
  const std::vector<NCPoly>& antipode_on_gens() const { return S_; }

 private:
  std::vector<TensorPoly> delta_;
  std::vector<CycloScalar> eps_;
  std::vector<NCPoly> S_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, TensorPoly> delta_cache_;
  mutable std::unordered_map<std::string, NCPoly> S_cache_;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

/// Descriptions of failed Hopf axioms at x: coassociativity, both counit laws,
/// both antipode laws.
std::vector<std::string> hopf_axiom_failures(const HopfPresentation& H, const NCPoly& x);
/// Delta, epsilon, S evaluated on both sides of every rule.
std::vector<std::string> structure_map_failures(const HopfPresentation& H);

/// Algebra homomorphism fixed by generator images; outputs are normal-formed
/// in the target.
class AlgebraMap {
 public:
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images);

  const PresentedAlgebra& source() const { return *src_; }
  const PresentedAlgebra& target() const { return *dst_; }
  const AlgebraPtr& source_ptr() const { return src_; }
  const AlgebraPtr& target_ptr() const { return dst_; }

  NCPoly apply(const Word& w) const;
  NCPoly apply(const NCPoly& p) const;
  /// id (x) f
  TensorPoly apply_right(const TensorPoly& t) const;
  /// f (x) f
  TensorPoly apply_both(const TensorPoly& t) const;

  /// Rules whose two sides have different images.
  std::vector<std::string> relation_failures() const;

 private:
  AlgebraPtr src_;
  AlgebraPtr dst_;
  std::vector<NCPoly> images_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, NCPoly> cache_;
};

// Built-in presentations. Each builder certifies confluence and checks the
// Hopf structure on generators; failures throw std::logic_error.
HopfPtr build_slq2();
HopfPtr build_borel_plus();
HopfPtr build_borel_minus();
HopfPtr build_cartan();
HopfPtr build_af_presentation();
HopfPtr build_hplus_presentation();
HopfPtr build_hminus_presentation();
HopfPtr build_hpm_presentation();
AlgebraPtr build_quantum_plane();
AlgebraPtr build_m3();

/// Cached registry: slq2, borel_plus, borel_minus, cartan, af, hplus, hminus, hpm.
HopfPtr hopf(const std::string& name);
/// Every registered algebra, including qplane and m3.
AlgebraPtr algebra(const std::string& name);
std::vector<std::string> hopf_names();
std::vector<std::string> algebra_names();

/// Registered homomorphisms: quotient maps between the Hopf algebras above,
/// qplane -> m3, qplane -> slq2 (x -> a, y -> b), hplus -> hminus (a -> a, b -> c).
const AlgebraMap& algebra_map(const std::string& from, const std::string& to);

/// Classical monomial abar^i bbar^j cbar^k dbar^l of the commutative algebra,
/// sent to the normal form of a^{3i} b^{3j} c^{3k} d^{3l} in slq2.
NCPoly frobenius_embed(const std::array<unsigned, 4>& exponents);

/// Right-hand sides of the closed coproduct formulas on the two slq2 basis families.
TensorPoly coproduct_closed_form_abc(unsigned p, unsigned r, unsigned s);
TensorPoly coproduct_closed_form_bcd(unsigned k, unsigned l, unsigned m);

/// Closed forms against the multiplicative expansion for all exponents <= bound.
Report verify_coproduct_closed_form(unsigned bound = 3);

/// Frobenius map: Hopf compatibility on generators, the classical determinant,
/// and centrality of the cubes.
Report verify_frobenius();

}  // namespace qgalois
