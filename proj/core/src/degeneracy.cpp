#include <cmath>

#include "lrslab/errors.hpp"
#include "lrslab/primes.hpp"
#include "lrslab/recurrence.hpp"
#include "root_approx.hpp"

namespace lrslab {

namespace {

bool is_polynomial_type(const IntPoly& p) {
  const int k = p.degree();
  return p == IntPoly::linear_power(1, k) || p == IntPoly::linear_power(-1, k);
}

std::complex<long double> to_cld(const detail::BigComplex& z) {
  return {mpfr_get_ld(z.re.get(), MPFR_RNDN), mpfr_get_ld(z.im.get(), MPFR_RNDN)};
}

bool near_unity_power(std::complex<long double> r, int m) {
  return std::abs(std::pow(r, static_cast<long double>(m)) - std::complex<long double>(1)) < 1e-9L;
}

}  // namespace

DegeneracyReport degeneracy_check(const CharPoly& cp) {
  cp.validate();
  DegeneracyReport report;
  report.polynomial_type = is_polynomial_type(cp.poly);

  const IntPoly sf = squarefree_part(cp.poly);
  const int s = sf.degree();
  std::vector<std::complex<long double>> z;
  for (const auto& b : detail::aberth_refine(sf, detail::aberth_approx(sf), 256)) z.push_back(to_cld(b));
  for (const auto& c : z) {
    report.approx_roots.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
  if (s < 2) return report;

  // R(X) = Res_Y(sf(Y), sf(XY)) vanishes exactly at the ratios alpha_j / alpha_i.
  BivariatePoly g(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) g[static_cast<std::size_t>(j)] = IntPoly::monomial(j, sf[static_cast<std::size_t>(j)]);
  IntPoly ratios = resultant_in_x(sf, g, s * s);
  const IntPoly x_minus_one({BigInt(-1), BigInt(1)});
  for (int i = 0; i < s; ++i) ratios = exact_quotient(ratios, x_minus_one);

  // A root of unity of degree phi(m) <= s^2 has m <= 2 s^4 since phi(m) >= sqrt(m/2).
  const int bound = 2 * s * s * s * s;
  std::vector<int> orders;
  for (int m = 2; m <= bound; ++m) {
    const auto phi = static_cast<int>(euler_phi_u64(static_cast<std::uint64_t>(m)));
    if (phi > ratios.degree()) continue;
    if (divides(cyclotomic(m), ratios)) orders.push_back(m);
  }
  if (orders.empty()) return report;

  report.nondegenerate = false;
  for (int m : orders) {
    for (int i = 0; i < s; ++i) {
      for (int j = i + 1; j < s; ++j) {
        const auto r = z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(j)];
        if (!near_unity_power(r, m)) continue;
        bool primitive = true;
        for (int d = 1; d < m && primitive; ++d) {
          if (m % d == 0 && near_unity_power(r, d)) primitive = false;
        }
        if (primitive) report.witnesses.push_back({i, j, m});
      }
    }
  }
  if (report.witnesses.empty()) {
    throw InvariantViolation("degenerate characteristic polynomial " + cp.poly.to_string() +
                             " but no root pair could be attributed");
  }
  return report;
}

}  // namespace lrslab
