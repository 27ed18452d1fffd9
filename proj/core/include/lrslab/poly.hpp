#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrslab/bigint.hpp"

namespace lrslab {

// Dense univariate polynomial over Z, coefficients stored from the constant
// term upward. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(int degree, const BigInt& coeff = 1);
  // (X - root)^power, expanded.
  static IntPoly linear_power(const BigInt& root, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& k) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  IntPoly derivative() const;
  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;

  BigInt content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;

  // p(-X).
  IntPoly reflected() const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Quotient a / b in Z[X]; throws InvariantViolation if b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

// True when b divides a in Q[X] (b must be nonzero).
bool divides(const IntPoly& b, const IntPoly& a);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Yun decomposition f = prod g_i^i with g_i square-free, pairwise coprime,
// primitive with positive leading coefficient. Factors equal to 1 are omitted.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);
IntPoly squarefree_part(const IntPoly& f);

// m-th cyclotomic polynomial.
IntPoly cyclotomic(int m);

// Resultant of a and b with formal degrees da >= deg a, db >= deg b, via the
// Sylvester determinant (fraction-free elimination).
BigInt resultant(const IntPoly& a, int da, const IntPoly& b, int db);

// Polynomial in Y whose coefficients are polynomials in X: coeffs[j] is the
// coefficient of Y^j.
using BivariatePoly = std::vector<IntPoly>;

// R(X) = Res_Y(f(Y), g(X, Y)) with g taken at formal Y-degree g.size()-1,
// computed by evaluation at X = 0..degree_bound and exact interpolation.
IntPoly resultant_in_x(const IntPoly& f, const BivariatePoly& g, int degree_bound);

// Number of distinct real roots of p in the half-open interval (a, b]
// (Sturm's theorem). Requires p nonzero and a < b.
int sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

}  // namespace lrslab
