#include "kc/rational.hpp"

#include <stdexcept>

namespace kc {

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly u = normalizing_unit(den);
  LaurentPoly d = u * den;
  LaurentPoly n = u * num;
  LaurentPoly g = gcd(n, d);
  num_ = exact_div(n, g);
  den_ = exact_div(d, g);
  LaurentPoly v = normalizing_unit(den_);
  num_ = v * num_;
  den_ = v * den_;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return {den_, num_};
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

TorsionClass::TorsionClass(const RationalFunction& q) {
  if (q.den().span() <= 0) return;
  LaurentPoly r = reduce_mod(q.num(), q.den());
  rep_ = RationalFunction(r, q.den());
}

TorsionClass rf_proper_part(const RationalFunction& q) { return TorsionClass(q); }

}  // namespace kc
