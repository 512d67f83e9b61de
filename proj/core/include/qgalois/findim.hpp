#pragma once

#include "qgalois/algebras.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/report.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgalois {

using SparseVec = std::vector<std::pair<std::size_t, CycloScalar>>;

struct TensorEntry {
  std::size_t left;
  std::size_t right;
  CycloScalar coeff;
};

/// Structure constants of a finite-dimensional presented Hopf algebra, on the
/// basis of irreducible words in monomial order (A(F): a^p b^r c^s).
class FinDimHopf {
 public:
  explicit FinDimHopf(HopfPtr presentation);

  const std::string& name() const { return H_->name(); }
  const HopfPresentation& presentation() const { return *H_; }
  const HopfPtr& presentation_ptr() const { return H_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Word>& basis() const { return basis_; }
  std::optional<std::size_t> find(const Word& w) const;
  std::size_t index(const Word& w) const;
  std::string label(std::size_t i) const;
  std::size_t unit() const { return 0; }

  const SparseVec& product(std::size_t i, std::size_t j) const { return mul_[i * dim() + j]; }
  const std::vector<TensorEntry>& coproduct(std::size_t i) const { return comul_[i]; }
  const CycloScalar& counit(std::size_t i) const { return counit_[i]; }
  const SparseVec& antipode(std::size_t i) const { return antipode_[i]; }

  FinVec zero() const { return FinVec(dim()); }
  FinVec basis_vec(std::size_t i) const;
  FinVec to_vec(const NCPoly& p) const;
  NCPoly to_poly(const FinVec& v) const;
  std::string format(const FinVec& v) const { return H_->format(to_poly(v)); }

  FinVec mul(const FinVec& x, const FinVec& y) const;
  FinVec apply_antipode(const FinVec& x) const;
  CycloScalar apply_counit(const FinVec& x) const;
  /// Dense dim*dim tensor, index left*dim + right.
  FinVec comul(const FinVec& x) const;

 private:
  HopfPtr H_;
  std::vector<Word> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<SparseVec> mul_;
  std::vector<std::vector<TensorEntry>> comul_;
  std::vector<CycloScalar> counit_;
  std::vector<SparseVec> antipode_;
};

using FinDimPtr = std::shared_ptr<const FinDimHopf>;

/// Cached: af (27), hplus, hminus (9), hpm (3).
FinDimPtr findim(const std::string& name);
FinDimPtr build_af();
FinDimPtr build_hplus();
FinDimPtr build_hminus();
FinDimPtr build_hpm();

/// Exhaustive tensor identities: associativity, unit, coassociativity, counit,
/// antipode, and Delta(xy) = Delta(x)Delta(y) on all basis pairs.
Report hopf_axioms_exhaustive(const FinDimHopf& C);

using Functional = FinVec;
using EndoMap = std::vector<FinVec>;

Functional counit_functional(const FinDimHopf& C);
EndoMap identity_map(const FinDimHopf& C);
EndoMap antipode_map(const FinDimHopf& C);
EndoMap unit_counit_map(const FinDimHopf& C);

/// (f*g)(h) = f(h1) g(h2)
Functional convolve(const Functional& f, const Functional& g, const FinDimHopf& C);
EndoMap convolve(const EndoMap& f, const EndoMap& g, const FinDimHopf& C);

enum class Side { Left, Right };

/// Integrals on C: (id (x) h)Delta = 1 h (left) or (h (x) id)Delta = 1 h (right).
std::vector<Functional> integrals_on(const FinDimHopf& C, Side side);
std::vector<Functional> left_integrals(const FinDimHopf& C);
std::vector<Functional> right_integrals(const FinDimHopf& C);
/// Integrals in C: x L = eps(x) L (left) or L x = eps(x) L (right).
std::vector<FinVec> integrals_in(const FinDimHopf& C, Side side);

/// Scales v so that entry `i` is 1; v[i] must be nonzero.
FinVec normalize_at(FinVec v, std::size_t i);

Report verify_integrals();
/// H+ and H- through a -> a, b -> c (algebra iso, coalgebra anti-iso) and
/// a -> a^2, b -> c (coalgebra iso, algebra anti-iso).
Report verify_borel_quotients();

}  // namespace qgalois
