#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qgalois {

/// Exact element r + s*w of Q(w), where w = e^{2 pi i/3} satisfies w^2 = -1 - w.
///
/// Both parts are arbitrary-precision rationals kept in canonical form, so
/// equality is structural. Values are immutable from the outside; every
/// operation returns a fresh value.
class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(long r) : re_(r) {}  // NOLINT(google-explicit-constructor)
  CycloScalar(mpq_class r, mpq_class s);

  static CycloScalar rational(long num, long den);
  /// The primitive cube root of unity w (written `q` in the algebras).
  static CycloScalar omega() { return CycloScalar(0, 1); }

  const mpq_class& re_part() const { return re_; }
  const mpq_class& om_part() const { return om_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(om_) == 0; }
  bool is_one() const { return sgn(om_) == 0 && re_ == 1; }
  bool is_rational() const { return sgn(om_) == 0; }

  /// N(r + s w) = r^2 - r s + s^2, the field norm down to Q.
  mpq_class norm() const;
  /// Galois conjugate w -> w^2.
  CycloScalar conj() const;
  /// Throws std::domain_error on zero.
  CycloScalar inv() const;

  CycloScalar operator-() const { return CycloScalar(-re_, -om_); }
  CycloScalar& operator+=(const CycloScalar& y);
  CycloScalar& operator-=(const CycloScalar& y);
  CycloScalar& operator*=(const CycloScalar& y);
  CycloScalar& operator/=(const CycloScalar& y) { return *this *= y.inv(); }

  friend CycloScalar operator+(CycloScalar x, const CycloScalar& y) { return x += y; }
  friend CycloScalar operator-(CycloScalar x, const CycloScalar& y) { return x -= y; }
  friend CycloScalar operator*(CycloScalar x, const CycloScalar& y) { return x *= y; }
  friend CycloScalar operator/(CycloScalar x, const CycloScalar& y) { return x /= y; }
  friend bool operator==(const CycloScalar& x, const CycloScalar& y) {
    return x.re_ == y.re_ && x.om_ == y.om_;
  }
  friend bool operator!=(const CycloScalar& x, const CycloScalar& y) { return !(x == y); }

  /// Canonical rendering "a/b + c/d*w"; zero parts are dropped.
  std::string to_string() const;

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class om_{0};
};

CycloScalar add(const CycloScalar& x, const CycloScalar& y);
CycloScalar mul(const CycloScalar& x, const CycloScalar& y);
CycloScalar inv(const CycloScalar& x);

/// q^n for q = w; depends only on n mod 3.
CycloScalar qpow(long n);

/// If x = c * q^k for a rational c and k in {0,1,2}, stores them and returns true.
bool as_rational_times_qpow(const CycloScalar& x, mpq_class& c, int& k);

std::ostream& operator<<(std::ostream& os, const CycloScalar& x);

}  // namespace qgalois
