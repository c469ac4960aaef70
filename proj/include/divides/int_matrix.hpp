#pragma once

#include <vector>

#include "divides/int_poly.hpp"

namespace divides {

// dense square integer matrix with overflow-checked arithmetic
class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  long long& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  long long at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        long long xik = x.at(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < x.n_; ++j)
          r.at(i, j) = checked_add(r.at(i, j), checked_mul(xik, y.at(k, j)));
      }
    return r;
  }

  bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<long long> a_;
};

// square matrix over Z[t, 1/t]
class PolyMat {
 public:
  explicit PolyMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  IntPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const IntPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<IntPoly> a_;
};

// Bareiss fraction-free elimination; every division is exact over the domain
inline IntPoly poly_det(PolyMat m) {
  int n = m.size();
  if (n == 0) return IntPoly(1);
  long long sign = 1;
  IntPoly prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return {};
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) =
            divide_exact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return IntPoly(sign) * m.at(n - 1, n - 1);
}

inline IntPoly char_poly(const IntMat& h) {
  int n = h.size();
  PolyMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = IntPoly(-h.at(i, j));
      if (i == j) m.at(i, j) = m.at(i, j) + IntPoly::t();
    }
  return poly_det(m);
}

inline long long trace(const IntMat& h) {
  long long s = 0;
  for (int i = 0; i < h.size(); ++i) s = checked_add(s, h.at(i, i));
  return s;
}

}  // namespace divides
