#include "lrslab/mpfr_real.hpp"

#include <algorithm>

#include "lrslab/errors.hpp"

namespace lrslab {

Mpfr::Mpfr(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(value_, other.precision());
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

Rational Mpfr::to_rational() const {
  if (!mpfr_number_p(value_)) throw InvariantViolation("non-finite mpfr value");
  BigInt mantissa;
  mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational out(mantissa);
  if (e > 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else if (e < 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

RealInterval RealInterval::point(const Rational& q, mpfr_prec_t precision) {
  return between(q, q, precision);
}

RealInterval RealInterval::between(const Rational& a, const Rational& b, mpfr_prec_t precision) {
  RealInterval out(precision);
  mpfr_set_q(out.lo.get(), a.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi.get(), b.get_mpq_t(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::log_abs(const BigInt& v, mpfr_prec_t precision) {
  if (v == 0) throw ValidationError("log of zero");
  BigInt a = abs(v);
  RealInterval out(precision);
  Mpfr tmp(precision + 16);
  mpfr_set_z(tmp.get(), a.get_mpz_t(), MPFR_RNDD);
  mpfr_log(out.lo.get(), tmp.get(), MPFR_RNDD);
  mpfr_set_z(tmp.get(), a.get_mpz_t(), MPFR_RNDU);
  mpfr_log(out.hi.get(), tmp.get(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::log() const {
  if (mpfr_sgn(lo.get()) <= 0) throw ValidationError("log of a non-positive interval");
  RealInterval out(precision());
  mpfr_log(out.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(out.hi.get(), hi.get(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::exp() const {
  RealInterval out(precision());
  mpfr_exp(out.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(out.hi.get(), hi.get(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  RealInterval out(std::max(precision(), o.precision()));
  mpfr_add(out.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
  RealInterval out(std::max(precision(), o.precision()));
  mpfr_sub(out.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
  return out;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  const mpfr_prec_t prec = std::max(precision(), o.precision());
  RealInterval out(prec);
  Mpfr down(prec), up(prec);
  bool first = true;
  for (mpfr_srcptr a : {lo.get(), hi.get()}) {
    for (mpfr_srcptr b : {o.lo.get(), o.hi.get()}) {
      mpfr_mul(down.get(), a, b, MPFR_RNDD);
      mpfr_mul(up.get(), a, b, MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), out.lo.get())) mpfr_set(out.lo.get(), down.get(), MPFR_RNDD);
      if (first || mpfr_greater_p(up.get(), out.hi.get())) mpfr_set(out.hi.get(), up.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

RealInterval RealInterval::scaled(const Rational& factor) const {
  return *this * point(factor, precision());
}

double RealInterval::midpoint() const {
  Mpfr sum(precision() + 1);
  mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);
  return mpfr_get_d(sum.get(), MPFR_RNDN) / 2.0;
}

double RealInterval::width() const {
  Mpfr diff(precision());
  mpfr_sub(diff.get(), hi.get(), lo.get(), MPFR_RNDU);
  return mpfr_get_d(diff.get(), MPFR_RNDU);
}

bool RealInterval::certainly_above(const RealInterval& o) const {
  return mpfr_greater_p(lo.get(), o.hi.get());
}

bool RealInterval::certainly_below(const RealInterval& o) const {
  return mpfr_less_p(hi.get(), o.lo.get());
}

}  // namespace lrslab
