#include "qgalois/cyclo.hpp"

#include <functional>
#include <ostream>

namespace qgalois {

CycloScalar::CycloScalar(mpq_class r, mpq_class s) : re_(std::move(r)), om_(std::move(s)) {
  re_.canonicalize();
  om_.canonicalize();
}

CycloScalar CycloScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("CycloScalar::rational: zero denominator");
  mpq_class r(num, den);
  r.canonicalize();
  return CycloScalar(r, 0);
}

mpq_class CycloScalar::norm() const { return re_ * re_ - re_ * om_ + om_ * om_; }

CycloScalar CycloScalar::conj() const {
  // r + s w^2 = (r - s) - s w
  return CycloScalar(re_ - om_, -om_);
}

CycloScalar CycloScalar::inv() const {
  if (is_zero()) throw std::domain_error("CycloScalar::inv: division by zero");
  const mpq_class n = norm();
  CycloScalar c = conj();
  c.re_ /= n;
  c.om_ /= n;
  return c;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& y) {
  re_ += y.re_;
  om_ += y.om_;
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& y) {
  re_ -= y.re_;
  om_ -= y.om_;
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& y) {
  if (is_zero() || y.is_zero()) {
    re_ = 0;
    om_ = 0;
    return *this;
  }
  if (y.is_rational()) {
    re_ *= y.re_;
    om_ *= y.re_;
    return *this;
  }
  // (r1 + s1 w)(r2 + s2 w) = r1 r2 - s1 s2 + (r1 s2 + s1 r2 - s1 s2) w
  const mpq_class ss = om_ * y.om_;
  mpq_class r = re_ * y.re_ - ss;
  mpq_class s = re_ * y.om_ + om_ * y.re_ - ss;
  re_ = std::move(r);
  om_ = std::move(s);
  return *this;
}

std::string CycloScalar::to_string() const {
  if (is_zero()) return "0";
  auto w_term = [](const mpq_class& c) { return c == 1 ? std::string("w") : c.get_str() + "*w"; };
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(om_) != 0) {
    if (out.empty()) {
      out = om_ == -1 ? std::string("-w") : w_term(om_);
    } else if (sgn(om_) < 0) {
      out += " - " + w_term(-om_);
    } else {
      out += " + " + w_term(om_);
    }
  }
  return out;
}

std::size_t CycloScalar::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31u ^ h(om_.get_str());
}

CycloScalar add(const CycloScalar& x, const CycloScalar& y) { return x + y; }
CycloScalar mul(const CycloScalar& x, const CycloScalar& y) { return x * y; }
CycloScalar inv(const CycloScalar& x) { return x.inv(); }

CycloScalar qpow(long n) {
  switch (((n % 3) + 3) % 3) {
    case 0:
      return CycloScalar(1);
    case 1:
      return CycloScalar(0, 1);
    default:
      return CycloScalar(-1, -1);
  }
}

bool as_rational_times_qpow(const CycloScalar& x, mpq_class& c, int& k) {
  const auto& r = x.re_part();
  const auto& s = x.om_part();
  if (sgn(s) == 0) {
    c = r;
    k = 0;
    return true;
  }
  if (sgn(r) == 0) {
    c = s;
    k = 1;
    return true;
  }
  if (r == s) {
    // r (1 + w) = -r w^2
    c = -r;
    k = 2;
    return true;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.to_string(); }

}  // namespace qgalois
