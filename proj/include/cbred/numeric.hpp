// Exact-arithmetic primitives shared by every module: GMP-backed rationals,
// small dense rational matrices, and a handful of vector helpers.  Everything
// downstream is integer or rational; there is no floating point outside the
// Verlinde cross-check oracle.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbred {

using Int = mpz_class;
using Rat = mpq_class;

// Integer weight coordinates (fundamental-weight basis).  Kept as 64-bit:
// every weight reachable in scope has coordinates far below this, and all
// quantities that can actually grow (multiplicities, dimensions, divisor
// coefficients) are held as Int/Rat.
using WVec = std::vector<long>;
// Rational vectors: weight-space vectors in the fundamental-weight basis, or
// covectors in the fundamental-coweight (x_i) basis.
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline QVec to_qvec(const WVec& v) {
  QVec q;
  q.reserve(v.size());
  for (long x : v) q.emplace_back(x);
  return q;
}

inline WVec to_wvec(const QVec& v) {
  WVec w;
  w.reserve(v.size());
  for (const Rat& x : v) {
    if (x.get_den() != 1) throw std::domain_error("to_wvec: non-integral coordinate");
    if (!x.get_num().fits_slong_p()) throw std::overflow_error("to_wvec: coordinate too large");
    w.push_back(x.get_num().get_si());
  }
  return w;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec qvec_scale(const QVec& a, const Rat& c) {
  QVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool qvec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Gauss-Jordan inverse; matrices here are r x r with r <= 8.
inline QMat qmat_inverse(QMat m) {
  const size_t n = m.size();
  QMat inv(n, QVec(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("qmat_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline QVec qmat_apply(const QMat& m, const QVec& v) {
  QVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace cbred
