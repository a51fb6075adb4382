#pragma once

#include <array>
#include <vector>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace occ {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
Rat make_rat(long num, long den = 1);

// Equivariant variables, in this order throughout.
enum Var : int { U1 = 0, S = 1, T = 2 };

// a*u1 + b*s + c*t
struct LinForm {
  Int a, b, c;

  LinForm() : a(0), b(0), c(0) {}
  LinForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  LinForm operator+(const LinForm& o) const { return {a + o.a, b + o.b, c + o.c}; }
  LinForm operator-(const LinForm& o) const { return {a - o.a, b - o.b, c - o.c}; }
  LinForm operator-() const { return {-a, -b, -c}; }
  LinForm operator*(const Int& k) const { return {a * k, b * k, c * k}; }
  bool operator==(const LinForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const LinForm& o) const { return !(*this == o); }
  std::string str() const;
};

using Monomial = std::array<int, 3>;

class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rat& c);
  static Poly var(Var v);
  static Poly linear(const Rat& a, const Rat& b, const Rat& c);
  static Poly from(const LinForm& l);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& k) const;
  Poly pow(unsigned n) const;

  Rat eval_at(const Rat& u1, const Rat& s, const Rat& t) const;
  // Largest m with v^m dividing the polynomial. Zero polynomial has order 0.
  int var_order(Var v) const;
  // Throws OrderTooSmall if var_order(v) < m.
  Poly divide_out(Var v, int m) const;
  Poly set_zero(Var v) const;

  bool is_homogeneous() const;
  // Total degree of a homogeneous polynomial; NonHomogeneous otherwise.
  int degree() const;

  // Scale so the first stored coefficient is 1; returns the removed scalar.
  Rat make_monic();

  bool operator<(const Poly& o) const;
  bool operator==(const Poly& o) const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

// coeff * prod factor^exponent, factors monic and pairwise distinct.
class FactoredRat {
 public:
  FactoredRat() : coeff_(1) {}
  explicit FactoredRat(const Rat& c) : coeff_(c) {}
  static FactoredRat of(const Poly& p, int exponent = 1);
  static FactoredRat of(const LinForm& l, int exponent = 1);

  const Rat& coeff() const { return coeff_; }
  const std::map<Poly, int>& factors() const { return factors_; }
  bool is_zero() const { return coeff_ == 0; }

  // Multiply in p^e. A zero p with e > 0 zeroes the value; with e < 0 it is
  // a division by zero.
  void mul(const Poly& p, int e);
  void mul(const LinForm& l, int e) { mul(Poly::from(l), e); }
  void mul(const Rat& c);
  void mul(const FactoredRat& o);
  FactoredRat operator*(const FactoredRat& o) const;
  FactoredRat inverse() const;

  Rat eval_at(const Rat& u1, const Rat& s, const Rat& t) const;
  std::string str() const;

 private:
  Rat coeff_;
  std::map<Poly, int> factors_;
};

// Sum of exponent * degree over factors; NonHomogeneous if a factor is not.
int degree_check(const FactoredRat& fr);

// Restrict t -> 0, then s -> 0, then evaluate at u1 = 1.
Rat restrict(const FactoredRat& fr);

// Net order of fr along v (sum of exponent * var_order).
int net_order(const FactoredRat& fr, Var v);

// One restriction stage along v. Returns zero when the net order is positive,
// throws PoleAtRestriction when it is negative.
FactoredRat restrict_stage(const FactoredRat& fr, Var v);

}  // namespace occ

namespace occ {

// num(s) / prod (s - r)^k, a rational function in s whose denominator splits
// into linear factors.
struct SFrac {
  std::vector<Rat> num;       // coefficients, lowest degree first
  std::map<Rat, int> den;     // root -> multiplicity

  static SFrac constant(const Rat& c);
  bool is_zero() const;
  SFrac operator+(const SFrac& o) const;
  SFrac operator*(const SFrac& o) const;
  // Value at s = 0; PoleAtRestriction if there is a pole there.
  Rat at_zero() const;
};

// Accumulates the iterated restriction of a sum of contributions. Unlike
// restrict(), poles of single terms are allowed as long as they cancel in the
// total.
class RestrictedSum {
 public:
  void add(const FactoredRat& fr);
  // PoleAtRestriction if the total keeps a pole in t or s.
  Rat value() const;

 private:
  std::map<int, SFrac> by_t_order_;  // only orders <= 0 are kept
};

}  // namespace occ
