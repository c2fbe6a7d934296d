#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kc {

using Int = mpz_class;
using Rat = mpq_class;

// Element of Q[t, t^-1]; integral elements are those with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rat& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rat& c, long e);
  static LaurentPoly t(long e = 1) { return monomial(Rat(1), e); }
  // coeffs[i] multiplies t^(low + i)
  static LaurentPoly from_coeffs(long low, const std::vector<Rat>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_unit() const { return terms_.size() == 1; }
  bool is_integral() const;
  bool is_constant() const;

  long min_exp() const;
  long max_exp() const;
  // max_exp - min_exp; -1 for zero
  long span() const;
  Rat coeff(long e) const;
  Rat lead() const;
  Rat low() const;
  const std::map<long, Rat>& terms() const { return terms_; }

  LaurentPoly involute() const;
  LaurentPoly shift(long k) const;
  LaurentPoly scaled(const Rat& c) const;
  Rat eval(const Rat& x) const;

  std::string str(const char* var = "t") const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(long e, const Rat& c);
  std::map<long, Rat> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_involute(const LaurentPoly& a);

// Unit u = c t^k such that u * a is a monic polynomial with nonzero constant term.
LaurentPoly normalizing_unit(const LaurentPoly& a);
LaurentPoly normalize(const LaurentPoly& a);
LaurentPoly unit_inverse(const LaurentPoly& u);

// Division with remainder in Q[t, t^-1]: a = q b + r with span(r) < span(b).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
// Canonical residue of a modulo p: the polynomial of degree < span(p) congruent to a.
LaurentPoly reduce_mod(const LaurentPoly& a, const LaurentPoly& p);
bool divides(const LaurentPoly& b, const LaurentPoly& a);
// Throws if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b);
// Bezout: returns (g, u, v) with u a + v b = g = gcd(a, b).
struct Bezout {
  LaurentPoly g, u, v;
};
Bezout xgcd(const LaurentPoly& a, const LaurentPoly& b);
// Inverse of a modulo p; throws if not coprime.
LaurentPoly inverse_mod(const LaurentPoly& a, const LaurentPoly& p);

// True if a equals b times a unit c t^k.
bool associates(const LaurentPoly& a, const LaurentPoly& b);

// Factorization over Q into monic irreducible polynomials with nonzero constant
// term, with multiplicities; the unit part is dropped.
std::vector<std::pair<LaurentPoly, int>> factor_rational(const LaurentPoly& a);
bool is_squarefree(const LaurentPoly& a);

std::string rat_str(const Rat& q);

}  // namespace kc
