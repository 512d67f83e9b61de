#include "qgalois/qcalc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qgalois {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, long coeff) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

CycloScalar IntPoly::evaluate(const CycloScalar& t) const {
  CycloScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += CycloScalar(mpq_class(*it), 0);
  }
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    mpz_class a = abs(c);
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly qint(long k) {
  if (k <= 0) throw std::invalid_argument("qint: k must be positive");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(k), 1));
}

IntPoly qfactorial(long k) {
  if (k < 0) throw std::invalid_argument("qfactorial: k must be non-negative");
  IntPoly acc(std::vector<mpz_class>{1});
  for (long j = 1; j <= k; ++j) acc = acc * qint(j);
  return acc;
}

namespace {

std::mutex g_binom_mutex;
std::map<std::pair<long, long>, IntPoly> g_binom_cache;

IntPoly qbinom_uncached(long n, long k);

IntPoly qbinom_cached(long n, long k) {
  {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    auto it = g_binom_cache.find({n, k});
    if (it != g_binom_cache.end()) return it->second;
  }
  IntPoly value = qbinom_uncached(n, k);
  std::lock_guard<std::mutex> lock(g_binom_mutex);
  g_binom_cache.emplace(std::make_pair(n, k), value);
  return value;
}

IntPoly qbinom_uncached(long n, long k) {
  if (k == 0 || k == n) return IntPoly(std::vector<mpz_class>{1});
  return qbinom_cached(n - 1, k - 1) +
         IntPoly::monomial(static_cast<std::size_t>(k)) * qbinom_cached(n - 1, k);
}

}  // namespace

IntPoly qbinom(long k, long i) {
  if (k < 0 || i < 0) throw std::invalid_argument("qbinom: negative argument");
  if (i > k) throw std::invalid_argument("qbinom: i > k");
  return qbinom_cached(k, i);
}

CycloScalar qbinom_at_omega(long k, long i) { return qbinom(k, i).evaluate(CycloScalar::omega()); }

}  // namespace qgalois
