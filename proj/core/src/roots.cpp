// Certified isolation of characteristic root moduli.
//
// Multiplicities come from an exact square-free (Yun) decomposition. Each
// square-free factor g of degree d is approximated numerically and then
// certified exactly: for approximations z_i with Weierstrass corrections
// W_i = g(z_i) / prod_{j != i}(z_i - z_j), the matrix diag(z) - W 1^T has
// characteristic polynomial g, so by Gerschgorin the disks centred at
// z_i - W_i with radius (d - 1)|W_i| each hold exactly one root whenever they
// are pairwise disjoint. All of that is evaluated in exact Gaussian-integer
// arithmetic on dyadic roundings of the z_i.

#include <algorithm>
#include <cmath>
#include <optional>

#include "lrslab/errors.hpp"
#include "lrslab/recurrence.hpp"
#include "root_approx.hpp"

namespace lrslab {

namespace detail {

namespace {

using CLD = std::complex<long double>;

void horner(const std::vector<long double>& c, CLD z, CLD& value, CLD& deriv) {
  value = c.back();
  deriv = 0;
  for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
    deriv = deriv * z + value;
    value = value * z + c[static_cast<std::size_t>(j)];
  }
}

}  // namespace

std::vector<std::complex<long double>> aberth_approx(const IntPoly& p) {
  const int d = p.degree();
  std::vector<CLD> z;
  if (d < 1) return z;
  std::vector<long double> c(static_cast<std::size_t>(d) + 1);
  const long double lead = mpz_get_d(p.leading().get_mpz_t());
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = mpz_get_d(p[static_cast<std::size_t>(i)].get_mpz_t()) / lead;
  if (d == 1) return {CLD(-c[0], 0)};

  long double radius = std::pow(std::max(std::abs(c[0]), 1e-30L), 1.0L / d);
  if (!std::isfinite(radius) || radius <= 0) radius = 1;
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < d; ++k) {
    const long double angle = 2 * pi * k / d + 0.7L;
    z.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int i = 0; i < d; ++i) {
      CLD v, dv;
      horner(c, z[static_cast<std::size_t>(i)], v, dv);
      if (v == CLD(0)) continue;
      if (dv == CLD(0)) {
        z[static_cast<std::size_t>(i)] *= CLD(1.0L + 1e-6L, 1e-6L);
        worst = 1;
        continue;
      }
      const CLD ratio = v / dv;
      CLD sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += CLD(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      const CLD step = ratio / (CLD(1) - ratio * sum);
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

namespace {

struct Ops {
  mpfr_prec_t prec;

  BigComplex make() const { return BigComplex(prec); }

  void set(BigComplex& out, const BigComplex& a) const {
    mpfr_set(out.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_set(out.im.get(), a.im.get(), MPFR_RNDN);
  }
  void add(BigComplex& out, const BigComplex& a, const BigComplex& b) const {
    mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  void sub(BigComplex& out, const BigComplex& a, const BigComplex& b) const {
    mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  }
  void mul(BigComplex& out, const BigComplex& a, const BigComplex& b) const {
    Mpfr t1(prec), t2(prec), re(prec);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_set(out.re.get(), re.get(), MPFR_RNDN);
  }
  void div(BigComplex& out, const BigComplex& a, const BigComplex& b) const {
    Mpfr denom(prec), t1(prec), t2(prec), re(prec);
    mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(denom.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), out.im.get(), denom.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), re.get(), denom.get(), MPFR_RNDN);
  }
  bool is_zero(const BigComplex& a) const { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }
  // Binary exponent of |a| (roughly log2|a|); very negative for zero.
  long magnitude_exp(const BigComplex& a) const {
    long e = -(1L << 40);
    if (!mpfr_zero_p(a.re.get())) e = std::max<long>(e, mpfr_get_exp(a.re.get()));
    if (!mpfr_zero_p(a.im.get())) e = std::max<long>(e, mpfr_get_exp(a.im.get()));
    return e;
  }
};

}  // namespace

std::vector<BigComplex> aberth_refine(const IntPoly& p, const std::vector<std::complex<long double>>& start,
                                      mpfr_prec_t precision) {
  const Ops ops{precision};
  const int d = p.degree();
  std::vector<BigComplex> z;
  for (const auto& s : start) {
    BigComplex c = ops.make();
    mpfr_set_ld(c.re.get(), s.real(), MPFR_RNDN);
    mpfr_set_ld(c.im.get(), s.imag(), MPFR_RNDN);
    z.push_back(std::move(c));
  }
  if (d == 1) {
    mpfr_set_z(z[0].re.get(), p[0].get_mpz_t(), MPFR_RNDN);
    mpfr_neg(z[0].re.get(), z[0].re.get(), MPFR_RNDN);
    mpfr_div_z(z[0].re.get(), z[0].re.get(), p[1].get_mpz_t(), MPFR_RNDN);
    mpfr_set_zero(z[0].im.get(), 1);
    return z;
  }
  std::vector<BigComplex> coeffs;
  for (int j = 0; j <= d; ++j) {
    BigComplex c = ops.make();
    mpfr_set_z(c.re.get(), p[static_cast<std::size_t>(j)].get_mpz_t(), MPFR_RNDN);
    coeffs.push_back(std::move(c));
  }
  BigComplex value = ops.make(), deriv = ops.make(), ratio = ops.make(), sum = ops.make();
  BigComplex tmp = ops.make(), one = ops.make(), step = ops.make();
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  int settled = 0;
  for (int iter = 0; iter < 400 && settled < 2; ++iter) {
    bool converged = true;
    for (int i = 0; i < d; ++i) {
      BigComplex& zi = z[static_cast<std::size_t>(i)];
      ops.set(value, coeffs[static_cast<std::size_t>(d)]);
      mpfr_set_zero(deriv.re.get(), 1);
      mpfr_set_zero(deriv.im.get(), 1);
      for (int j = d - 1; j >= 0; --j) {
        ops.mul(deriv, deriv, zi);
        ops.add(deriv, deriv, value);
        ops.mul(value, value, zi);
        ops.add(value, value, coeffs[static_cast<std::size_t>(j)]);
      }
      if (ops.is_zero(value)) continue;
      if (ops.is_zero(deriv)) {
        converged = false;
        continue;
      }
      ops.div(ratio, value, deriv);
      mpfr_set_zero(sum.re.get(), 1);
      mpfr_set_zero(sum.im.get(), 1);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        ops.sub(tmp, zi, z[static_cast<std::size_t>(j)]);
        if (ops.is_zero(tmp)) continue;
        ops.div(tmp, one, tmp);
        ops.add(sum, sum, tmp);
      }
      ops.mul(tmp, ratio, sum);
      ops.sub(tmp, one, tmp);
      ops.div(step, ratio, tmp);
      ops.sub(zi, zi, step);
      const long scale = std::max<long>(1, ops.magnitude_exp(zi));
      if (!ops.is_zero(step) && ops.magnitude_exp(step) > scale - static_cast<long>(precision) + 8) {
        converged = false;
      }
    }
    settled = converged ? settled + 1 : 0;
  }
  return z;
}

}  // namespace detail

namespace {

struct GaussInt {
  BigInt re;
  BigInt im;
};

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
BigInt norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }
GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }

BigInt ceil_sqrt(const BigInt& v) {
  BigInt r = isqrt(v);
  if (r * r != v) r += 1;
  return r;
}

Rational pow2(long e) {
  Rational out(1);
  if (e > 0) mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  if (e < 0) mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return out;
}

struct Disk {
  Rational cre;
  Rational cim;
  Rational radius_hi;
  ModulusInterval modulus;
  std::complex<double> approx;
};

struct CertifiedRoot {
  Disk disk;
  int factor = 0;
  int multiplicity = 1;
  bool is_real = false;
  int conjugate = -1;  // global index of the certified conjugate, if any
};

Rational dist2(const Rational& ar, const Rational& ai, const Rational& br, const Rational& bi) {
  Rational dr = ar - br;
  Rational di = ai - bi;
  return dr * dr + di * di;
}

bool disks_meet(const Rational& ar, const Rational& ai, const Rational& rr_a, const Disk& b) {
  Rational reach = rr_a + b.radius_hi;
  return dist2(ar, ai, b.cre, b.cim) <= reach * reach;
}

// Certified disks for one monic square-free factor, or nullopt when the
// approximations are not yet good enough.
std::optional<std::vector<Disk>> certify_factor(const IntPoly& g, const std::vector<detail::BigComplex>& z,
                                                long frac_bits) {
  const int d = g.degree();
  std::vector<GaussInt> pts;
  for (const auto& zi : z) {
    GaussInt q;
    Mpfr t(mpfr_get_prec(zi.re.get()) + 8);
    mpfr_mul_2si(t.get(), zi.re.get(), frac_bits, MPFR_RNDN);
    mpfr_get_z(q.re.get_mpz_t(), t.get(), MPFR_RNDN);
    mpfr_mul_2si(t.get(), zi.im.get(), frac_bits, MPFR_RNDN);
    mpfr_get_z(q.im.get_mpz_t(), t.get(), MPFR_RNDN);
    pts.push_back(std::move(q));
  }
  std::vector<Disk> disks;
  for (int i = 0; i < d; ++i) {
    const GaussInt& zi = pts[static_cast<std::size_t>(i)];
    // 2^{P d} g(z_i) by Horner on the scaled point.
    GaussInt value{g.leading(), 0};
    for (int j = d - 1; j >= 0; --j) {
      value = value * zi;
      BigInt term = g[static_cast<std::size_t>(j)];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(frac_bits * (d - j)));
      value.re += term;
    }
    GaussInt prod{1, 0};
    for (int j = 0; j < d; ++j) {
      if (j != i) prod = prod * (zi - pts[static_cast<std::size_t>(j)]);
    }
    const BigInt norm_d = norm(prod);
    if (norm_d == 0) return std::nullopt;
    BigInt den = norm_d;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(frac_bits));
    const GaussInt w_num = value * conj(prod);
    const GaussInt c_num{zi.re * norm_d - w_num.re, zi.im * norm_d - w_num.im};

    Disk disk;
    disk.cre = Rational(c_num.re, den);
    disk.cim = Rational(c_num.im, den);
    disk.cre.canonicalize();
    disk.cim.canonicalize();
    disk.radius_hi = Rational(ceil_sqrt(norm(w_num)) * (d - 1), den);
    disk.radius_hi.canonicalize();

    // |c| bracketed to 2^-(P+16) by integer square roots.
    const long extra = frac_bits + 16;
    BigInt scaled = norm(c_num);
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * extra));
    const BigInt root = isqrt(scaled);
    BigInt scale_den = den;
    mpz_mul_2exp(scale_den.get_mpz_t(), scale_den.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
    Rational abs_lo(root, scale_den), abs_hi(root + 1, scale_den);
    abs_lo.canonicalize();
    abs_hi.canonicalize();
    disk.modulus.lo = abs_lo - disk.radius_hi;
    if (disk.modulus.lo < 0) disk.modulus.lo = 0;
    disk.modulus.hi = abs_hi + disk.radius_hi;
    disk.approx = {disk.cre.get_d(), disk.cim.get_d()};
    disks.push_back(std::move(disk));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Disk& a = disks[static_cast<std::size_t>(i)];
      if (disks_meet(a.cre, a.cim, a.radius_hi, disks[static_cast<std::size_t>(j)])) return std::nullopt;
    }
  }
  return disks;
}

// True when |alpha_a| = |alpha_b| is proven through the polynomial whose
// roots are all pairwise products of roots: both squared moduli are its real
// roots, so a single real root across the union of brackets forces equality.
bool equal_modulus_by_products(const IntPoly& squarefree, const ModulusInterval& a,
                               const ModulusInterval& b, long frac_bits,
                               std::optional<IntPoly>& products) {
  const int s = squarefree.degree();
  if (!products) {
    BivariatePoly g(static_cast<std::size_t>(s) + 1);
    for (int j = 0; j <= s; ++j) {
      g[static_cast<std::size_t>(s - j)] = IntPoly::monomial(j, squarefree[static_cast<std::size_t>(j)]);
    }
    products = resultant_in_x(squarefree, g, s * s);
  }
  Rational lo = std::min(a.lo, b.lo);
  Rational hi = std::max(a.hi, b.hi);
  Rational left = lo > 0 ? Rational(lo * lo * (1 - pow2(-frac_bits))) : Rational(-1);
  return sturm_count(*products, left, hi * hi) == 1;
}

}  // namespace

RootData roots(const CharPoly& cp, int precision_bits, int max_precision_bits) {
  cp.validate();
  if (precision_bits < 1 || precision_bits > max_precision_bits) {
    throw ValidationError("root precision must be in [1, " + std::to_string(max_precision_bits) + "] bits");
  }
  const auto factors = squarefree_decomposition(cp.poly);
  IntPoly squarefree({BigInt(1)});
  for (const auto& [f, mult] : factors) squarefree = squarefree * f;

  std::size_t height_bits = 0;
  for (const auto& c : cp.poly.coeffs()) height_bits = std::max(height_bits, bit_length(c));

  std::vector<std::vector<std::complex<long double>>> starts;
  for (const auto& [f, mult] : factors) starts.push_back(detail::aberth_approx(f));

  std::optional<IntPoly> products;
  for (long work = precision_bits + 32; work <= max_precision_bits + 64; work *= 2) {
    const long frac_bits = work + 16 + static_cast<long>(height_bits);
    const mpfr_prec_t mpfr_bits = frac_bits + static_cast<long>(height_bits) + 32;

    std::vector<CertifiedRoot> all;
    bool ok = true;
    for (std::size_t fi = 0; fi < factors.size() && ok; ++fi) {
      const IntPoly& f = factors[fi].first;
      auto refined = detail::aberth_refine(f, starts[fi], mpfr_bits);
      auto disks = certify_factor(f, refined, frac_bits);
      if (!disks) {
        ok = false;
        break;
      }
      const std::size_t base = all.size();
      for (auto& disk : *disks) {
        CertifiedRoot r;
        r.disk = std::move(disk);
        r.factor = static_cast<int>(fi);
        r.multiplicity = factors[fi].second;
        all.push_back(std::move(r));
      }
      // Realness and conjugate pairing within the factor.
      for (std::size_t i = base; i < all.size() && ok; ++i) {
        const Disk& di = all[i].disk;
        const Rational conj_im = -di.cim;
        std::vector<std::size_t> hits;
        for (std::size_t j = base; j < all.size(); ++j) {
          if (disks_meet(di.cre, conj_im, di.radius_hi, all[j].disk)) hits.push_back(j);
        }
        if (hits.size() != 1) {
          ok = false;
        } else if (hits[0] == i) {
          all[i].is_real = true;
        } else if (abs(di.cim) > di.radius_hi) {
          all[i].conjugate = static_cast<int>(hits[0]);
        } else {
          ok = false;
        }
      }
    }
    if (!ok) continue;

    const Rational scale = pow2(precision_bits);
    for (const auto& r : all) {
      const ModulusInterval& m = r.disk.modulus;
      if ((m.hi - m.lo) * scale > m.midpoint()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::size_t top = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (all[i].disk.modulus.hi > all[top].disk.modulus.hi) top = i;
    }
    std::vector<std::size_t> group{top};
    for (std::size_t j = 0; j < all.size() && ok; ++j) {
      if (j == top) continue;
      const ModulusInterval& mt = all[top].disk.modulus;
      const ModulusInterval& mj = all[j].disk.modulus;
      if (mj.hi < mt.lo) continue;
      const bool paired = all[top].conjugate == static_cast<int>(j);
      if (paired || equal_modulus_by_products(squarefree, mt, mj, frac_bits, products)) {
        group.push_back(j);
      } else {
        ok = false;
      }
    }
    if (!ok) continue;

    RootData out;
    out.precision_bits = precision_bits;
    out.distinct_count = static_cast<int>(all.size());
    ModulusInterval dominant = all[top].disk.modulus;
    for (std::size_t g : group) {
      dominant.lo = std::max(dominant.lo, all[g].disk.modulus.lo);
      dominant.hi = std::min(dominant.hi, all[g].disk.modulus.hi);
    }
    out.dominant_modulus = dominant;

    std::vector<std::size_t> order;
    for (std::size_t g : group) order.push_back(g);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (std::find(group.begin(), group.end(), i) == group.end()) rest.push_back(i);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
      return all[a].disk.modulus.midpoint() > all[b].disk.modulus.midpoint();
    });
    order.insert(order.end(), rest.begin(), rest.end());
    for (std::size_t i : order) {
      RootInfo info;
      info.modulus = all[i].disk.modulus;
      info.is_real = all[i].is_real;
      info.multiplicity = all[i].multiplicity;
      info.approx = all[i].disk.approx;
      out.roots.push_back(std::move(info));
    }
    return out;
  }
  throw PrecisionExhausted("root moduli of " + cp.poly.to_string() + " could not be separated within " +
                           std::to_string(max_precision_bits) + " bits");
}

}  // namespace lrslab
