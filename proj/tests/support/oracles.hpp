#pragma once

// Reference implementations kept independent of the library's algorithms.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

/// r + s w as the rational matrix r I + s C, C the companion matrix of t^2 + t + 1.
struct Mat2 {
  std::array<mpq_class, 4> m{0, 0, 0, 0};

  static Mat2 of(const mpq_class& r, const mpq_class& s) {
    Mat2 x;
    x.m = {r, -s, s, r - s};
    for (auto& e : x.m) e.canonicalize();
    return x;
  }
  mpq_class re() const { return m[0]; }
  mpq_class om() const { return m[2]; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 c;
    c.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    c.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    c.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    c.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return c;
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 c;
    for (int i = 0; i < 4; ++i) c.m[i] = a.m[i] + b.m[i];
    return c;
  }
};

/// Coefficients of the Gaussian binomial [n, k]: partitions of each size that
/// fit in a k x (n-k) box, counted by recursion on the largest part.
inline std::vector<mpz_class> box_partitions(long n, long k) {
  const long w = n - k;
  // f[r][m]: generating polynomial of partitions with at most r parts, each <= m.
  std::vector<std::vector<std::vector<mpz_class>>> f(
      static_cast<std::size_t>(k + 1), std::vector<std::vector<mpz_class>>(static_cast<std::size_t>(w + 1)));
  for (long r = 0; r <= k; ++r)
    for (long m = 0; m <= w; ++m) {
      auto& out = f[r][m];
      out.assign(static_cast<std::size_t>(r * m + 1), 0);
      if (r == 0 || m == 0) {
        out[0] = 1;
        continue;
      }
      for (long t = 0; t <= m; ++t) {
        const auto& sub = f[r - 1][t];
        for (std::size_t s = 0; s < sub.size(); ++s) out[s + static_cast<std::size_t>(t)] += sub[s];
      }
    }
  auto c = f[k][w];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Value at w of an integer polynomial, by residues of the exponents mod 3.
inline std::pair<mpz_class, mpz_class> at_omega(const std::vector<mpz_class>& c) {
  mpz_class r[3] = {0, 0, 0};
  for (std::size_t j = 0; j < c.size(); ++j) r[j % 3] += c[j];
  return {r[0] - r[2], r[1] - r[2]};
}

/// Normal form of a word when every pair "later letter before earlier
/// letter" commutes up to q^-1 per listed pair, i.e. y x = q^-1 x y for the
/// plane and b a = q^-1 a b, c a = q^-1 a c, c b = b c for the 27-dim quotient.
struct SortedWord {
  long q_exponent = 0;
  std::vector<long> exponents;
};

/// twist[i][j]: exponent picked up when letter j moves left past letter i < j.
inline SortedWord sort_word(const std::vector<int>& letters, const std::vector<std::vector<long>>& twist) {
  SortedWord out;
  out.exponents.assign(twist.size(), 0);
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    const int l = letters[pos];
    for (std::size_t later = pos + 1; later < letters.size(); ++later)
      if (letters[later] < l) out.q_exponent += twist[letters[later]][l];
    ++out.exponents[l];
  }
  return out;
}

}  // namespace oracle
