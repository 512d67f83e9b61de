#pragma once

// The 27-dimensional matrix model of the A(F) generators, built from scratch:
// a -> J (x) I (x) I, b -> Q (x) N (x) I, c -> Q (x) I (x) N with J the cyclic
// shift, Q = diag(1, q^-1, q^-2), N the nilpotent lower shift.

#include "qgalois/cyclo.hpp"
#include "qgalois/ncpoly.hpp"

#include <vector>

namespace model {

using qgalois::CycloScalar;

struct Mat {
  std::size_t n = 0;
  std::vector<CycloScalar> e;
  explicit Mat(std::size_t size = 0) : n(size), e(size * size) {}
  CycloScalar& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const CycloScalar& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
  friend bool operator==(const Mat& a, const Mat& b) { return a.n == b.n && a.e == b.e; }
};

inline Mat identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

inline Mat add(Mat a, const Mat& b, const CycloScalar& s = 1) {
  for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] += s * b.e[i];
  return a;
}

inline Mat kron3(const Mat& x, const Mat& y, const Mat& z) {
  Mat m(27);
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = 0; j < 27; ++j)
      m.at(i, j) = x.at(i / 9, j / 9) * y.at((i / 3) % 3, (j / 3) % 3) * z.at(i % 3, j % 3);
  return m;
}

inline const std::vector<Mat>& generators() {
  static const std::vector<Mat> g = [] {
    Mat J(3), Q(3), N(3);
    for (std::size_t i = 0; i < 3; ++i) {
      J.at((i + 1) % 3, i) = 1;
      Q.at(i, i) = qgalois::qpow(-static_cast<long>(i));
    }
    N.at(1, 0) = 1;
    N.at(2, 1) = 1;
    const Mat I = identity(3);
    return std::vector<Mat>{kron3(J, I, I), kron3(Q, N, I), kron3(Q, I, N)};
  }();
  return g;
}

/// Image of a free-algebra polynomial over the letters a, b, c.
inline Mat image(const qgalois::NCPoly& p) {
  Mat out(27);
  for (const auto& [w, c] : p.terms()) {
    Mat m = identity(27);
    for (std::size_t i = 0; i < w.size(); ++i) m = mul(m, generators()[w[i]]);
    out = add(out, m, c);
  }
  return out;
}

}  // namespace model
