#pragma once

#include "qgalois/algebras.hpp"
#include "qgalois/findim.hpp"
#include "qgalois/report.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace qgalois {

/// Right coaction (id (x) pi) Delta of a presented Hopf algebra P over one of
/// its finite-dimensional quotients H. Pairs: slq2/af, borel_plus/hplus,
/// borel_minus/hminus, cartan/hpm.
class QuotientCoaction {
 public:
  QuotientCoaction(const std::string& total, const std::string& quotient);

  const HopfPresentation& P() const { return *P_; }
  const FinDimHopf& H() const { return *H_; }
  const AlgebraMap& pi() const { return *pi_; }

  /// Left slot in P, right slot in H, both reduced.
  TensorPoly operator()(const NCPoly& x) const;
  TensorPoly operator()(const Word& w) const { return (*this)(P_->monomial(w)); }
  bool is_coinvariant(const NCPoly& x) const;

  /// Canonical section: the quotient basis word spelled in P's letters.
  NCPoly preimage(std::size_t h) const;
  /// Basis index of an H word.
  std::size_t h_index(const Word& w) const { return H_->index(w); }

  /// can(x (x) y) = x y_(0) (x) y_(1), from P (x) P to P (x) H.
  TensorPoly can(const TensorPoly& t) const;
  /// x (x) h -> x S(p_1) (x) p_2 with p the preimage of h.
  TensorPoly can_inverse(const TensorPoly& t) const;
  /// S(p_1) (x) p_2, a representative of the class in P (x)_B P.
  TensorPoly translation(std::size_t h) const;
  TensorPoly translation(const FinVec& h) const;

  /// 1 (x) h as an element of P (x) H.
  TensorPoly one_tensor(std::size_t h) const;
  std::string format(const TensorPoly& t) const { return format_tensor(t, *P_, H_->presentation()); }

 private:
  HopfPtr P_;
  FinDimPtr H_;
  const AlgebraMap* pi_;
  std::vector<NCPoly> preimages_;
};

/// Cached instance for "slq2", "borel_plus", "borel_minus" or "cartan".
const QuotientCoaction& coaction(const std::string& total);

TensorPoly coaction_slq2_af(const NCPoly& x);
/// Closed form of Delta_R(a^p b^r) on the upper Borel algebra.
TensorPoly coaction_borel(long p, unsigned r);
bool coinvariant_test(const NCPoly& x, const QuotientCoaction& co);

/// Monomial projection onto the Frobenius image in slq2: keeps a normal-form
/// word iff every letter exponent is divisible by 3.
NCPoly splitting_s(const NCPoly& x);
/// s(f w) = f s(w) for cube monomials f and slq2 basis words w of degree <= bound.
Report verify_s_module_map(unsigned bound = 6);
Report verify_splitting(unsigned bound = 6);
Report verify_coinvariants();
Report verify_coactions(unsigned bound = 4);
Report verify_galois_roundtrip();

using Nu = std::array<long, 3>;
/// Four-slot tensor B (x) H (x) B (x) H.
using QuadTensor = std::map<std::tuple<Word, Word, Word, Word>, CycloScalar>;

/// Psi_nu, its convolution inverse, and the cleaving map Phi_nu on a Borel
/// or Cartan extension. P-side values are normal forms in P.
class CleavingFamily {
 public:
  /// total is "borel_plus" or "cartan"; nu[0] must be 0.
  CleavingFamily(const std::string& total, Nu nu);

  const QuotientCoaction& co() const { return *co_; }
  const HopfPresentation& P() const { return co_->P(); }
  const FinDimHopf& H() const { return co_->H(); }
  const Nu& nu() const { return nu_; }
  std::size_t dim() const { return H().dim(); }

  /// a^p b^r in P (a^-1 = d); r must be 0 without a b generator.
  NCPoly laurent(long p, unsigned r = 0) const;
  /// (p, r) with a word of P equal to a^p b^r.
  std::pair<long, unsigned> exponents(const Word& w) const;
  /// Index of the H basis word a^p b^r, p, r in {0,1,2}.
  std::size_t h_index(unsigned p, unsigned r) const;

  NCPoly psi(const NCPoly& x) const;
  NCPoly psi_inv(const NCPoly& x) const;
  /// Phi(pi(p)) = Psi^-1(p_1) p_2.
  const NCPoly& phi(std::size_t h) const { return phi_[h]; }
  NCPoly phi(const FinVec& h) const;
  /// Psi^-1(a^{p+r}) a^p b^r
  NCPoly phi_product_form(std::size_t h) const;
  /// a^{-3([p+r]_1 + nu([p+r]_2)) + p} b^r
  NCPoly phi_closed_form(std::size_t h) const;
  /// S(p_1) Psi(p_2)
  const NCPoly& phi_inv(std::size_t h) const { return phi_inv_[h]; }

  /// m (id (x) Phi^-1) Delta_R
  NCPoly s_phi(const NCPoly& x) const;
  /// s_Phi(Phi(h) Phi(l)), tabulated at construction.
  const NCPoly& sigma(std::size_t h, std::size_t l) const { return sigma_[h * dim() + l]; }
  NCPoly sigma(const SparseVec& h, const SparseVec& l) const;

  /// pi(p_2) (x) Psi^-1(p_1) Psi(p_3), in H (x) P.
  TensorPoly lambda(std::size_t h) const;
  /// Delta(Psi^-1(p_1)) (Psi(p_2) (x) Psi(p_3)), in P (x) P.
  TensorPoly zeta(std::size_t h) const;

  /// Psi(p_1) (x) pi(p_2), in P (x) H with the left slot in B.
  TensorPoly theta(const NCPoly& x) const;
  /// w (x) h -> w Phi(h)
  NCPoly theta_inverse(const TensorPoly& t) const;
  /// (w (x) h) -> w_1 (x) lambda1(h_1) (x) w_2 lambda2(h_1) (x) h_2
  QuadTensor crossed_coproduct(const TensorPoly& t) const;
  /// (theta (x) theta) Delta_P
  QuadTensor theta_coproduct(const NCPoly& x) const;

  /// Coefficients over B of x in the free basis {a^p b^r}, p, r < 3.
  std::vector<NCPoly> free_coordinates(const NCPoly& x) const;

  /// Crossed product B # H with the cocycle: coefficient of e_h in B.
  using Twisted = std::vector<NCPoly>;
  Twisted twisted_basis(std::size_t h) const;
  Twisted twisted_mul(const Twisted& x, const Twisted& y) const;
  NCPoly twisted_to_p(const Twisted& x) const;

 private:
  const QuotientCoaction* co_;
  Nu nu_;
  bool has_b_;
  Letter a_, d_, b_;
  std::vector<NCPoly> phi_;
  std::vector<NCPoly> phi_inv_;
  std::vector<NCPoly> sigma_;
};

/// Cached per (total, nu).
const CleavingFamily& cleaving_family(const std::string& total, Nu nu);
/// nu(1) = 0, nu(2) = 1.
constexpr Nu kDefaultNu{0, 0, 1};

Report verify_cleaving();
Report verify_cocycle_table();
Report verify_twisted_product();
Report verify_lambda_table();
Report verify_bicross();
Report cartan_galois();

/// Tables in basis order, values printed in the display basis of P.
struct TableEntry {
  std::vector<std::string> args;
  std::string value;
};
std::vector<TableEntry> cleaving_table(Nu nu = kDefaultNu);
std::vector<TableEntry> cocycle_table(Nu nu = kDefaultNu);
std::vector<TableEntry> lambda_table(Nu nu = kDefaultNu);

}  // namespace qgalois
