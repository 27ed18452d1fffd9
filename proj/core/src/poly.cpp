#include "lrslab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lrslab/errors.hpp"

namespace lrslab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const BigInt& coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, BigInt(0));
  c.back() = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::linear_power(const BigInt& root, int power) {
  IntPoly base({BigInt(-root), BigInt(1)});
  IntPoly out({BigInt(1)});
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const BigInt& k) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reflected() const {
  std::vector<BigInt> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvariantViolation("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw InvariantViolation("exact_quotient: divisor does not divide dividend");
  }
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1, BigInt(0));
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw InvariantViolation("exact_quotient: non-integral quotient");
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw InvariantViolation("exact_quotient: nonzero remainder");
  }
  return IntPoly(std::move(q));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    BigInt top = rem[static_cast<std::size_t>(i)];
    for (auto& r : rem) r *= lb;
    if (top == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), top.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return IntPoly(std::move(rem));
}

}  // namespace

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) throw InvariantViolation("divides: zero divisor");
  if (b.degree() == 0) return true;
  return pseudo_remainder(a, b).is_zero();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  const IntPoly p = f.primitive_part();
  const IntPoly dp = p.derivative();
  IntPoly g = gcd(p, dp);
  IntPoly c = exact_quotient(p, g);
  IntPoly d = exact_quotient(dp, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    IntPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - c.derivative();
    ++i;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& f) {
  const IntPoly p = f.primitive_part();
  if (p.degree() < 1) return p;
  return exact_quotient(p, gcd(p, p.derivative())).primitive_part();
}

IntPoly cyclotomic(int m) {
  if (m < 1) throw ValidationError("cyclotomic index must be positive");
  // Phi_m = prod_{d | m} (X^d - 1)^{mu(m/d)}.
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  IntPoly num({BigInt(1)});
  IntPoly den({BigInt(1)});
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(m / d);
    if (mu == 0) continue;
    IntPoly factor = IntPoly::monomial(d) - IntPoly({BigInt(1)});
    if (mu > 0) {
      num = num * factor;
    } else {
      den = den * factor;
    }
  }
  return exact_quotient(num, den);
}

namespace {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  return sign > 0 ? det : BigInt(-det);
}

}  // namespace

BigInt resultant(const IntPoly& a, int da, const IntPoly& b, int db) {
  if (da < a.degree() || db < b.degree()) {
    throw InvariantViolation("resultant: formal degree below actual degree");
  }
  const std::size_t n = static_cast<std::size_t>(da + db);
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
  // Row layout: db shifted copies of a, then da shifted copies of b, highest
  // coefficient first.
  for (int r = 0; r < db; ++r) {
    for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a.coeff(da - j);
  }
  for (int r = 0; r < da; ++r) {
    for (int j = 0; j <= db; ++j) {
      m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + j)] = b.coeff(db - j);
    }
  }
  return bareiss_determinant(std::move(m));
}

IntPoly resultant_in_x(const IntPoly& f, const BivariatePoly& g, int degree_bound) {
  const int df = f.degree();
  const int dg = static_cast<int>(g.size()) - 1;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int x = 0; x <= degree_bound; ++x) {
    std::vector<BigInt> gy;
    gy.reserve(g.size());
    for (const auto& cj : g) gy.push_back(cj.evaluate(BigInt(x)));
    values.emplace_back(resultant(f, df, IntPoly(std::move(gy)), dg));
  }
  // Newton divided differences over the nodes 0..D.
  std::vector<Rational> dd = values;
  const int n = degree_bound + 1;
  for (int level = 1; level < n; ++level) {
    for (int i = n - 1; i >= level; --i) {
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) / Rational(level);
    }
  }
  // Expand Newton form into monomials.
  std::vector<Rational> poly{dd[static_cast<std::size_t>(n - 1)]};
  for (int i = n - 2; i >= 0; --i) {
    // poly = poly * (X - i) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * i;
    }
    next[0] += dd[static_cast<std::size_t>(i)];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw InvariantViolation("resultant interpolation is not integral");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Rational t = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<RatPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw InvariantViolation("sturm_count of the zero polynomial");
  const IntPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  std::vector<RatPoly> seq;
  RatPoly p0(sf.coeffs().begin(), sf.coeffs().end());
  IntPoly d = sf.derivative();
  RatPoly p1(d.coeffs().begin(), d.coeffs().end());
  seq.push_back(p0);
  seq.push_back(p1);
  while (seq.back().size() > 1) {
    RatPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, a) - sign_changes(seq, b);
}

}  // namespace lrslab
