#pragma once

#include <complex>
#include <vector>

#include "lrslab/mpfr_real.hpp"
#include "lrslab/poly.hpp"

namespace lrslab::detail {

struct BigComplex {
  Mpfr re;
  Mpfr im;
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

// Simultaneous approximations of all roots of a square-free polynomial with
// positive leading coefficient (Aberth-Ehrlich iteration).
std::vector<std::complex<long double>> aberth_approx(const IntPoly& p);

// Refines approximations at the given binary precision.
std::vector<BigComplex> aberth_refine(const IntPoly& p,
                                      const std::vector<std::complex<long double>>& start,
                                      mpfr_prec_t precision);

}  // namespace lrslab::detail
