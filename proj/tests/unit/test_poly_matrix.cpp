#include <doctest.h>

#include "divides/int_matrix.hpp"
#include "divides/int_poly.hpp"

using namespace divides;

namespace {

IntPoly from_coeffs(long long low, std::initializer_list<long long> cs) {
  IntPoly p;
  long long k = low;
  for (long long c : cs) p = p + IntPoly::monomial(c, k++);
  return p;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  IntPoly t = IntPoly::t();
  IntPoly p = t * t - t + IntPoly(1);
  CHECK(p.str() == "t^2-t+1");
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK((p - p).zero());
  CHECK((p - p).str() == "0");

  IntPoly q = IntPoly::monomial(1, -1) + IntPoly(2) + t;
  CHECK(q.low() == -1);
  CHECK(q.high() == 1);
  CHECK((q * IntPoly::t()).low() == 0);
  CHECK(q.eval_at_one() == 4);

  CHECK(p * IntPoly(1) == p);
  CHECK((p * IntPoly(0)).zero());
  CHECK(p * q == q * p);
}

TEST_CASE("exact division round trips") {
  IntPoly t = IntPoly::t();
  IntPoly a = t * t * t - IntPoly(1);
  IntPoly b = t - IntPoly(1);
  CHECK(divide_exact(a, b) == t * t + t + IntPoly(1));
  CHECK(divide_exact(a * b, b) == a);

  IntPoly laurent = IntPoly::monomial(3, -2) * a;
  CHECK(divide_exact(laurent, IntPoly::monomial(3, -2)) == a);
  CHECK(divide_exact(laurent, a) == IntPoly::monomial(3, -2));

  CHECK_THROWS_AS(divide_exact(t + IntPoly(1), t * t + IntPoly(1)), std::domain_error);
  CHECK_THROWS_AS(divide_exact(t * t + IntPoly(1), t + IntPoly(1)), std::domain_error);
  CHECK(divide_exact(IntPoly(0), b).zero());
}

TEST_CASE("normalization strips units") {
  IntPoly p = from_coeffs(-3, {-1, 2, -1});
  IntPoly n = p.normalized();
  CHECK(n.low() == 0);
  CHECK(n == from_coeffs(0, {1, -2, 1}));
  CHECK(n.normalized() == n);
  CHECK(IntPoly(0).normalized().zero());
  // all unit multiples of p normalize the same way
  CHECK((IntPoly::monomial(-1, 5) * p).normalized() == n);
}

TEST_CASE("torres symmetry on normalized polynomials") {
  CHECK(from_coeffs(0, {1, -1, 1}).torres_symmetric());       // trefoil
  CHECK(from_coeffs(0, {1, -3, 1}).torres_symmetric());       // figure eight
  CHECK(from_coeffs(0, {1, -1}).torres_symmetric());          // hopf band annulus, odd degree
  CHECK(from_coeffs(0, {1, -2, 2, -1}).torres_symmetric());
  CHECK_FALSE(from_coeffs(0, {1, -2, 3}).torres_symmetric());
  CHECK_FALSE(from_coeffs(0, {1, 1, -1}).torres_symmetric());
  CHECK(IntPoly(1).torres_symmetric());
}

TEST_CASE("determinant of polynomial matrices") {
  CHECK(poly_det(PolyMat(0)) == IntPoly(1));

  PolyMat one(1);
  one.at(0, 0) = IntPoly(7);
  CHECK(poly_det(one) == IntPoly(7));

  // 2x2 with a zero pivot forces the row swap
  PolyMat sw(2);
  sw.at(0, 1) = IntPoly(1);
  sw.at(1, 0) = IntPoly(1);
  CHECK(poly_det(sw) == IntPoly(-1));

  PolyMat sing(2);
  sing.at(0, 0) = IntPoly::t();
  sing.at(0, 1) = IntPoly::t();
  sing.at(1, 0) = IntPoly::t();
  sing.at(1, 1) = IntPoly::t();
  CHECK(poly_det(sing).zero());

  // Vandermonde at t, 2, 3: det = (2-t)(3-t)(3-2)
  PolyMat v(3);
  IntPoly xs[3] = {IntPoly::t(), IntPoly(2), IntPoly(3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      IntPoly e(1);
      for (int k = 0; k < j; ++k) e = e * xs[i];
      v.at(i, j) = e;
    }
  IntPoly expect = (IntPoly(2) - IntPoly::t()) * (IntPoly(3) - IntPoly::t());
  CHECK(poly_det(v) == expect);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMat(0)) == IntPoly(1));

  IntMat h(2);
  h.at(0, 0) = 1;
  h.at(0, 1) = -1;
  h.at(1, 0) = 1;
  h.at(1, 1) = 0;
  CHECK(char_poly(h) == from_coeffs(0, {1, -1, 1}));
  CHECK(trace(h) == 1);

  // companion matrix of t^3 - 2t + 5
  IntMat c(3);
  c.at(0, 2) = -5;
  c.at(1, 0) = 1;
  c.at(1, 2) = 2;
  c.at(2, 1) = 1;
  CHECK(char_poly(c) == from_coeffs(0, {5, -2, 0, 1}));

  CHECK(char_poly(IntMat::identity(4)) ==
        from_coeffs(0, {1, -4, 6, -4, 1}));
}

TEST_CASE("matrix products are checked") {
  IntMat a = IntMat::identity(3);
  a.at(0, 1) = 2;
  IntMat b = IntMat::identity(3);
  b.at(1, 2) = -1;
  IntMat ab = a * b;
  CHECK(ab.at(0, 1) == 2);
  CHECK(ab.at(0, 2) == -2);
  CHECK(ab.at(1, 2) == -1);

  IntMat big(1);
  big.at(0, 0) = (1LL << 62);
  CHECK_THROWS_AS(big * big, OverflowError);
}
