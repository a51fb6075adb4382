#include "occ/symrat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "occ/error.hpp"

namespace occ {

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string LinForm::str() const {
  std::ostringstream os;
  os << a.get_str() << "*u1 + " << b.get_str() << "*s + " << c.get_str() << "*t";
  return os.str();
}

// ---- Poly ------------------------------------------------------------------

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

Poly Poly::var(Var v) {
  Poly p;
  Monomial m{0, 0, 0};
  m[v] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::linear(const Rat& a, const Rat& b, const Rat& c) {
  Poly p;
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return p;
}

Poly Poly::from(const LinForm& l) { return linear(Rat(l.a), Rat(l.b), Rat(l.c)); }

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat& k) const {
  if (k == 0) return {};
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r = constant(Rat(1));
  Poly b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    n >>= 1u;
    if (n) b = b * b;
  }
  return r;
}

static Rat rat_pow(const Rat& x, int e) {
  Rat r(1);
  if (e < 0) {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    Rat inv = 1 / x;
    for (int i = 0; i < -e; ++i) r *= inv;
    return r;
  }
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Rat Poly::eval_at(const Rat& u1, const Rat& s, const Rat& t) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) sum += c * rat_pow(u1, m[0]) * rat_pow(s, m[1]) * rat_pow(t, m[2]);
  return sum;
}

int Poly::var_order(Var v) const {
  if (terms_.empty()) return 0;
  int best = -1;
  for (const auto& [m, c] : terms_)
    if (best < 0 || m[v] < best) best = m[v];
  return best;
}

Poly Poly::divide_out(Var v, int m) const {
  if (m == 0) return *this;
  if (var_order(v) < m)
    throw Error(ErrorKind::OrderTooSmall, "cannot divide " + str() + " by a power " + std::to_string(m));
  Poly r;
  for (const auto& [mono, c] : terms_) {
    Monomial k = mono;
    k[v] -= m;
    r.terms_.emplace(k, c);
  }
  return r;
}

Poly Poly::set_zero(Var v) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m[v] == 0) r.terms_.emplace(m, c);
  return r;
}

bool Poly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = m[0] + m[1] + m[2];
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

int Poly::degree() const {
  if (!is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, str());
  if (terms_.empty()) return 0;
  const auto& m = terms_.begin()->first;
  return m[0] + m[1] + m[2];
}

Rat Poly::make_monic() {
  if (terms_.empty()) return Rat(0);
  Rat lead = terms_.begin()->second;
  if (lead != 1)
    for (auto& [m, c] : terms_) c /= lead;
  return lead;
}

bool Poly::operator<(const Poly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != o.terms_.end();
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"u1", "s", "t"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

// ---- FactoredRat -----------------------------------------------------------

FactoredRat FactoredRat::of(const Poly& p, int exponent) {
  FactoredRat r;
  r.mul(p, exponent);
  return r;
}

FactoredRat FactoredRat::of(const LinForm& l, int exponent) { return of(Poly::from(l), exponent); }

void FactoredRat::mul(const Rat& c) {
  coeff_ *= c;
  if (coeff_ == 0) factors_.clear();
}

void FactoredRat::mul(const Poly& p, int e) {
  if (e == 0) return;
  if (p.is_zero()) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    coeff_ = 0;
    factors_.clear();
    return;
  }
  if (coeff_ == 0) return;
  Poly q = p;
  Rat lead = q.make_monic();
  coeff_ *= rat_pow(lead, e);
  // constants are absorbed into the coefficient
  if (q.terms().size() == 1 && q.terms().begin()->first == Monomial{0, 0, 0}) return;
  auto it = factors_.find(q);
  if (it == factors_.end()) {
    factors_.emplace(std::move(q), e);
    return;
  }
  it->second += e;
  if (it->second == 0) factors_.erase(it);
}

void FactoredRat::mul(const FactoredRat& o) {
  mul(o.coeff_);
  if (coeff_ == 0) return;
  for (const auto& [p, e] : o.factors_) {
    auto it = factors_.find(p);
    if (it == factors_.end()) {
      factors_.emplace(p, e);
    } else {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }
}

FactoredRat FactoredRat::operator*(const FactoredRat& o) const {
  FactoredRat r = *this;
  r.mul(o);
  return r;
}

FactoredRat FactoredRat::inverse() const {
  if (coeff_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FactoredRat r(1 / coeff_);
  for (const auto& [p, e] : factors_) r.factors_.emplace(p, -e);
  return r;
}

Rat FactoredRat::eval_at(const Rat& u1, const Rat& s, const Rat& t) const {
  Rat r = coeff_;
  if (r == 0) return r;
  for (const auto& [p, e] : factors_) r *= rat_pow(p.eval_at(u1, s, t), e);
  return r;
}

std::string FactoredRat::str() const {
  std::ostringstream os;
  os << to_string(coeff_);
  for (const auto& [p, e] : factors_) os << " * (" << p.str() << ")^" << e;
  return os.str();
}

int degree_check(const FactoredRat& fr) {
  int deg = 0;
  for (const auto& [p, e] : fr.factors()) deg += e * p.degree();
  return deg;
}

int net_order(const FactoredRat& fr, Var v) {
  int n = 0;
  for (const auto& [p, e] : fr.factors()) n += e * p.var_order(v);
  return n;
}

FactoredRat restrict_stage(const FactoredRat& fr, Var v) {
  if (fr.is_zero()) return fr;
  for (const auto& [p, e] : fr.factors())
    if (!p.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, p.str());
  int n = net_order(fr, v);
  if (n < 0) throw Error(ErrorKind::PoleAtRestriction, "net order " + std::to_string(n) + " in " + fr.str());
  if (n > 0) return FactoredRat(Rat(0));
  FactoredRat r(fr.coeff());
  for (const auto& [p, e] : fr.factors()) r.mul(p.divide_out(v, p.var_order(v)).set_zero(v), e);
  return r;
}

Rat restrict(const FactoredRat& fr) {
  FactoredRat r = restrict_stage(restrict_stage(fr, T), S);
  if (r.is_zero()) return Rat(0);
  // each factor is now c*u1^k; c was normalized to 1
  return r.eval_at(Rat(1), Rat(0), Rat(0));
}


// ---- summed restriction ----

namespace {

using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// p * (s - root)^k
UPoly times_linear(UPoly p, const Rat& root, int k) {
  for (int i = 0; i < k; ++i) p = upoly_mul(p, UPoly{-root, Rat(1)});
  return p;
}

SFrac sfrac_inverse_linear(const Rat& a, const Rat& b) {
  // 1 / (a + b s)
  if (b == 0) {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return SFrac::constant(Rat(1) / a);
  }
  SFrac r = SFrac::constant(Rat(1) / b);
  r.den[Rat(-a / b)] = 1;
  return r;
}

using TSeries = std::vector<SFrac>;  // coefficients of t^0 .. t^K

TSeries series_mul(const TSeries& a, const TSeries& b, std::size_t len) {
  TSeries r(len, SFrac{});
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

}  // namespace

SFrac SFrac::constant(const Rat& c) {
  SFrac r;
  if (c != 0) r.num.push_back(c);
  return r;
}

bool SFrac::is_zero() const { return num.empty(); }

SFrac SFrac::operator+(const SFrac& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  SFrac r;
  r.den = den;
  for (const auto& [root, k] : o.den) r.den[root] = std::max(r.den[root], k);
  UPoly a = num, b = o.num;
  for (const auto& [root, k] : r.den) {
    auto it = den.find(root);
    a = times_linear(a, root, k - (it == den.end() ? 0 : it->second));
    auto jt = o.den.find(root);
    b = times_linear(b, root, k - (jt == o.den.end() ? 0 : jt->second));
  }
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  r.num = a;
  if (r.num.empty()) r.den.clear();
  return r;
}

SFrac SFrac::operator*(const SFrac& o) const {
  SFrac r;
  r.num = upoly_mul(num, o.num);
  if (r.num.empty()) return r;
  r.den = den;
  for (const auto& [root, k] : o.den) r.den[root] += k;
  return r;
}

Rat SFrac::at_zero() const {
  if (is_zero()) return Rat(0);
  int k = 0;
  Rat rest(1);
  for (const auto& [root, m] : den) {
    if (root == 0) k = m;
    else rest *= rat_pow(Rat(-root), m);
  }
  for (int j = 0; j < k && j < (int)num.size(); ++j)
    if (num[j] != 0) throw Error(ErrorKind::PoleAtRestriction, "pole of order " + std::to_string(k - j) + " in s");
  if (k >= (int)num.size()) return Rat(0);
  return num[k] / rest;
}

void RestrictedSum::add(const FactoredRat& fr) {
  if (fr.is_zero()) return;
  if (degree_check(fr) != 0) throw Error(ErrorKind::NonHomogeneous, "contribution of non-zero degree");
  int nt = net_order(fr, T);
  if (nt > 0) return;
  std::size_t len = (std::size_t)(-nt) + 1;
  TSeries total(len, SFrac{});
  total[0] = SFrac::constant(fr.coeff());
  for (const auto& [p, e] : fr.factors()) {
    // p at u1 = 1 with the t-order removed, as a t-series with polynomial s-coefficients
    Poly q = p.divide_out(T, p.var_order(T));
    std::vector<UPoly> qt(len);
    for (const auto& [m, c] : q.terms()) {
      if ((std::size_t)m[T] >= len) continue;
      UPoly& u = qt[m[T]];
      if (u.size() <= (std::size_t)m[S]) u.resize(m[S] + 1, Rat(0));
      u[m[S]] += c;
    }
    for (auto& u : qt) trim(u);
    TSeries base(len);
    if (e > 0) {
      for (std::size_t j = 0; j < len; ++j) base[j].num = qt[j];
    } else {
      if (qt[0].size() > 2)
        throw Error(ErrorKind::DivisionByZero, "non-linear denominator " + p.str());
      Rat a = qt[0].empty() ? Rat(0) : qt[0][0];
      Rat b = qt[0].size() > 1 ? qt[0][1] : Rat(0);
      SFrac inv0 = sfrac_inverse_linear(a, b);
      base[0] = inv0;
      for (std::size_t n = 1; n < len; ++n) {
        SFrac acc;
        for (std::size_t j = 1; j <= n; ++j) {
          SFrac qj;
          qj.num = qt[j];
          acc = acc + qj * base[n - j];
        }
        base[n] = acc * inv0 * SFrac::constant(Rat(-1));
      }
    }
    for (int i = 0; i < std::abs(e); ++i) total = series_mul(total, base, len);
  }
  for (std::size_t j = 0; j < len; ++j) {
    int order = nt + (int)j;
    by_t_order_[order] = by_t_order_[order] + total[j];
  }
}

Rat RestrictedSum::value() const {
  for (const auto& [order, c] : by_t_order_)
    if (order < 0 && !c.is_zero())
      throw Error(ErrorKind::PoleAtRestriction, "pole of order " + std::to_string(-order) + " in t");
  auto it = by_t_order_.find(0);
  return it == by_t_order_.end() ? Rat(0) : it->second.at_zero();
}

}  // namespace occ
