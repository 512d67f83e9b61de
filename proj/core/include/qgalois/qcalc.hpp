#pragma once

#include "qgalois/cyclo.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qgalois {

/// Integer polynomial in an indeterminate t, coefficients indexed by degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(std::size_t degree, long coeff = 1);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

  IntPoly& operator+=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation at an element of Q(w).
  CycloScalar evaluate(const CycloScalar& t) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// (k)_t = 1 + t + ... + t^{k-1}; k >= 1.
IntPoly qint(long k);

/// (k)_t! = (1)_t (2)_t ... (k)_t, with (0)_t! = 1.
IntPoly qfactorial(long k);

/// Gaussian binomial [k choose i]_t, built from the q-Pascal recursion
/// [n,k] = [n-1,k-1] + t^k [n-1,k]. Never divides, so it stays valid when
/// evaluated at roots of unity where (3)_q vanishes.
IntPoly qbinom(long k, long i);

/// qbinom(k, i) evaluated at t = w.
CycloScalar qbinom_at_omega(long k, long i);

}  // namespace qgalois
