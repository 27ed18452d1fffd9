#pragma once

#include <mpfr.h>

#include "lrslab/bigint.hpp"

namespace lrslab {

// Owning value wrapper around an mpfr_t with a fixed precision.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact conversion of the stored binary value.
  Rational to_rational() const;

 private:
  mpfr_t value_;
};

// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
// returns an interval containing the exact result of applying the operation
// to any points of the operands.
struct RealInterval {
  Mpfr lo;
  Mpfr hi;

  explicit RealInterval(mpfr_prec_t precision = 64) : lo(precision), hi(precision) {}

  static RealInterval point(const Rational& q, mpfr_prec_t precision);
  static RealInterval between(const Rational& a, const Rational& b, mpfr_prec_t precision);

  // ln|v| for v != 0.
  static RealInterval log_abs(const BigInt& v, mpfr_prec_t precision);
  // ln of a positive interval.
  RealInterval log() const;
  RealInterval exp() const;

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;
  RealInterval scaled(const Rational& factor) const;

  double midpoint() const;
  double width() const;
  mpfr_prec_t precision() const { return lo.precision(); }

  // Strictly above / below every point of the other interval.
  bool certainly_above(const RealInterval& o) const;
  bool certainly_below(const RealInterval& o) const;
};

}  // namespace lrslab
