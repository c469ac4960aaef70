#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace divides {

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// Laurent polynomial over Z: coeffs[i] is the coefficient of t^(low + i).
// Normal form: empty coeffs means zero; otherwise first and last are nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long constant) {  // NOLINT: implicit by design
    if (constant != 0) c_ = {constant};
  }
  static IntPoly monomial(long long coeff, long long power) {
    IntPoly p;
    if (coeff != 0) {
      p.c_ = {coeff};
      p.low_ = power;
    }
    return p;
  }
  static IntPoly t() { return monomial(1, 1); }

  bool zero() const { return c_.empty(); }
  long long low() const { return low_; }
  long long high() const { return low_ + static_cast<long long>(c_.size()) - 1; }
  long long coeff(long long power) const {
    long long i = power - low_;
    if (i < 0 || i >= static_cast<long long>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<long long>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    long long lo = std::min(a.low_, b.low_);
    long long hi = std::max(a.high(), b.high());
    IntPoly r;
    r.low_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<size_t>(a.low_ - lo) + i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[static_cast<size_t>(b.low_ - lo) + i] =
          checked_add(r.c_[static_cast<size_t>(b.low_ - lo) + i], b.c_[i]);
    r.trim();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.zero() || b.zero()) return {};
    IntPoly r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    r.trim();
    return r;
  }

  // exact division; throws if the division leaves a remainder
  friend IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.zero()) throw std::invalid_argument("division by zero polynomial");
    IntPoly rem = a;
    IntPoly quot;
    while (!rem.zero()) {
      if (rem.c_.size() < b.c_.size() || rem.c_.back() % b.c_.back() != 0)
        throw std::domain_error("inexact polynomial division");
      IntPoly term = IntPoly::monomial(rem.c_.back() / b.c_.back(), rem.high() - b.high());
      quot = quot + term;
      rem = rem - term * b;
    }
    return quot;
  }

  bool operator==(const IntPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  // divide by +-t^k so the constant term is positive and low() == 0
  IntPoly normalized() const {
    if (zero()) return {};
    IntPoly r = *this;
    r.low_ = 0;
    if (r.c_.front() < 0)
      for (auto& x : r.c_) x = -x;
    return r;
  }

  // t^mu * p(1/t) == (-1)^mu * p(t), for p with low() == 0 and degree mu
  bool torres_symmetric() const {
    if (zero()) return false;
    long long mu = high() - low_;
    long long sign = (mu % 2 == 0) ? 1 : -1;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[c_.size() - 1 - i] != sign * c_[i]) return false;
    return true;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (long long x : c_) s = checked_add(s, x);
    return s;
  }

  std::string str() const {
    if (zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long i = static_cast<long long>(c_.size()) - 1; i >= 0; --i) {
      long long coeff = c_[static_cast<size_t>(i)];
      if (coeff == 0) continue;
      long long pow = low_ + i;
      if (!first) out << (coeff > 0 ? "+" : "-");
      else if (coeff < 0) out << "-";
      long long a = coeff < 0 ? -coeff : coeff;
      if (a != 1 || pow == 0) out << a;
      if (pow != 0) {
        if (a != 1) out << "*";
        out << "t";
        if (pow != 1) out << "^" << pow;
      }
      first = false;
    }
    return out.str();
  }

 private:
  std::vector<long long> c_;
  long long low_ = 0;

  void trim() {
    size_t begin = 0, end = c_.size();
    while (end > begin && c_[end - 1] == 0) --end;
    while (begin < end && c_[begin] == 0) ++begin;
    if (begin == end) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (begin > 0 || end < c_.size()) {
      c_ = std::vector<long long>(c_.begin() + static_cast<long>(begin),
                                  c_.begin() + static_cast<long>(end));
      low_ += static_cast<long long>(begin);
    }
  }
};

}  // namespace divides
