#pragma once

#include <string>

#include "kc/laurent.hpp"

namespace kc {

// Element of Q(t) as num/den with den monic, den(0) != 0 and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction involute() const { return {num_.involute(), den_.involute()}; }
  RationalFunction inverse() const;
  std::string str() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
    return a.den_ < b.den_ || (a.den_ == b.den_ && a.num_ < b.num_);
  }

 private:
  LaurentPoly num_, den_;
};

// Class in Q(t)/Q[t,t^-1], stored as its strictly proper representative.
class TorsionClass {
 public:
  TorsionClass() = default;
  explicit TorsionClass(const RationalFunction& q);

  const RationalFunction& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  TorsionClass involute() const { return TorsionClass(rep_.involute()); }
  TorsionClass times(const LaurentPoly& a) const { return TorsionClass(rep_ * RationalFunction(a)); }
  std::string str() const { return rep_.str(); }

  friend TorsionClass operator+(const TorsionClass& a, const TorsionClass& b) {
    return TorsionClass(a.rep_ + b.rep_);
  }
  friend TorsionClass operator-(const TorsionClass& a, const TorsionClass& b) {
    return TorsionClass(a.rep_ - b.rep_);
  }
  TorsionClass operator-() const { return TorsionClass(-rep_); }
  friend bool operator==(const TorsionClass& a, const TorsionClass& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const TorsionClass& a, const TorsionClass& b) { return !(a == b); }
  friend bool operator<(const TorsionClass& a, const TorsionClass& b) { return a.rep_ < b.rep_; }

 private:
  RationalFunction rep_;
};

TorsionClass rf_proper_part(const RationalFunction& q);

}  // namespace kc
