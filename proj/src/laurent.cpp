#include "kc/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = Rat(c);
}

LaurentPoly::LaurentPoly(const Rat& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long low, const std::vector<Rat>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(low + static_cast<long>(i), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(long e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

long LaurentPoly::span() const { return terms_.empty() ? -1 : max_exp() - min_exp(); }

Rat LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::lead() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }
Rat LaurentPoly::low() const { return terms_.empty() ? Rat(0) : terms_.begin()->second; }

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shift(long k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  if (c == 0) return {};
  LaurentPoly p;
  for (const auto& [e, x] : terms_) p.terms_.emplace(e, x * c);
  return p;
}

Rat LaurentPoly::eval(const Rat& x) const {
  if (x == 0 && !terms_.empty() && min_exp() < 0) throw std::domain_error("evaluation at 0 with negative exponents");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat p = 1;
    Rat base = e >= 0 ? x : Rat(1) / x;
    for (long i = 0; i < std::labs(e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string LaurentPoly::str(const char* var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Rat c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_involute(const LaurentPoly& a) { return a.involute(); }

LaurentPoly normalizing_unit(const LaurentPoly& a) {
  if (a.is_zero()) return LaurentPoly(1);
  return LaurentPoly::monomial(Rat(1) / a.lead(), -a.min_exp());
}

LaurentPoly normalize(const LaurentPoly& a) { return normalizing_unit(a) * a; }

LaurentPoly unit_inverse(const LaurentPoly& u) {
  if (!u.is_unit()) throw std::domain_error("not a unit: " + u.str());
  return LaurentPoly::monomial(Rat(1) / u.lead(), -u.min_exp());
}

namespace {

// Long division of polynomials with nonnegative exponents.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a, const LaurentPoly& b) {
  const long db = b.max_exp();
  const Rat lb = b.lead();
  LaurentPoly q;
  while (!a.is_zero() && a.max_exp() >= db) {
    LaurentPoly m = LaurentPoly::monomial(a.lead() / lb, a.max_exp() - db);
    q += m;
    a -= m * b;
  }
  return {q, a};
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  const long alpha = a.min_exp();
  const long beta = b.min_exp();
  auto [q0, r0] = poly_divmod(a.shift(-alpha), b.shift(-beta));
  return {q0.shift(alpha - beta), r0.shift(alpha)};
}

LaurentPoly reduce_mod(const LaurentPoly& a, const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("reduction modulo zero");
  LaurentPoly pn = normalize(p);
  if (pn.span() == 0) return LaurentPoly();
  if (a.is_zero()) return a;
  // a = t^alpha a0 with a0 a polynomial
  const long alpha = a.min_exp();
  LaurentPoly r = poly_divmod(a.shift(-alpha), pn).second;
  if (alpha == 0) return r;
  LaurentPoly step = alpha > 0 ? LaurentPoly::t(1) : inverse_mod(LaurentPoly::t(1), pn);
  for (long i = 0; i < std::labs(alpha); ++i) r = poly_divmod(r * step, pn).second;
  return r;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact division: " + a.str() + " / " + b.str());
  return q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return normalize(x);
}

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  return normalize(exact_div(a * b, gcd(a, b)));
}

Bezout xgcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    LaurentPoly s2 = s0 - q * s1;
    LaurentPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  LaurentPoly u = normalizing_unit(r0);
  return {u * r0, u * s0, u * t0};
}

LaurentPoly inverse_mod(const LaurentPoly& a, const LaurentPoly& p) {
  Bezout bz = xgcd(a, p);
  if (!bz.g.is_one()) throw std::domain_error("not invertible modulo " + p.str());
  LaurentPoly pn = normalize(p);
  // bz.u is already correct; reduce without recursion into reduce_mod's shift path
  LaurentPoly u = bz.u;
  if (u.is_zero()) return u;
  const long alpha = u.min_exp();
  if (alpha >= 0) return poly_divmod(u, pn).second;
  // multiply by t^{-alpha} and by (t^{-1})^{-alpha} computed directly from p
  // t^{-1} = -(p - p(0))/(p(0) t) mod p
  LaurentPoly tinv = (pn - LaurentPoly(pn.coeff(0))).shift(-1).scaled(-Rat(1) / pn.coeff(0));
  LaurentPoly r = poly_divmod(u.shift(-alpha), pn).second;
  for (long i = 0; i < -alpha; ++i) r = poly_divmod(r * tinv, pn).second;
  return r;
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize(a) == normalize(b);
}

namespace {

LaurentPoly derivative(const LaurentPoly& a) {
  LaurentPoly d;
  for (const auto& [e, c] : a.terms()) d += LaurentPoly::monomial(c * Rat(e), e - 1);
  return d;
}

// Primitive integer polynomial associate of a (min exponent 0, positive lead).
std::vector<Int> primitive_integer(const LaurentPoly& a) {
  LaurentPoly p = a.shift(-a.min_exp());
  Int den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm(den, Int(c.get_den()));
  std::vector<Int> coeffs(static_cast<std::size_t>(p.max_exp()) + 1, Int(0));
  Int content = 0;
  for (const auto& [e, c] : p.terms()) {
    Int v = c.get_num() * (den / c.get_den());
    coeffs[static_cast<std::size_t>(e)] = v;
    content = gcd(content, v);
  }
  for (auto& c : coeffs) c /= content;
  if (coeffs.back() < 0)
    for (auto& c : coeffs) c = -c;
  return coeffs;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

LaurentPoly from_int(const std::vector<Int>& f) {
  std::vector<Rat> c(f.begin(), f.end());
  return LaurentPoly::from_coeffs(0, c);
}

// Lagrange interpolation through (xs[i], vs[i]).
LaurentPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& vs) {
  LaurentPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    LaurentPoly term = LaurentPoly(Rat(vs[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term *= (LaurentPoly::t(1) - LaurentPoly(Rat(xs[j]))).scaled(Rat(1) / Rat(xs[i] - xs[j]));
    }
    acc += term;
  }
  return acc;
}

// Finds a nontrivial factor of degree d of the square-free primitive f, if any.
bool kronecker_factor(const std::vector<Int>& f, int d, LaurentPoly& out) {
  LaurentPoly F = from_int(f);
  std::vector<std::pair<std::size_t, Int>> cand;
  for (long x = -24; x <= 24; ++x) {
    Int v = eval_int(f, Int(x));
    if (v == 0) {
      out = LaurentPoly::t(1) - LaurentPoly(x);
      return d == 1;
    }
    cand.emplace_back(divisors(v).size(), Int(x));
  }
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Int> xs;
  std::vector<std::vector<Int>> divs;
  for (int i = 0; i <= d; ++i) {
    xs.push_back(cand[static_cast<std::size_t>(i)].second);
    divs.push_back(divisors(eval_int(f, xs.back())));
  }
  std::vector<std::size_t> idx(xs.size(), 0);
  std::vector<int> sgn(xs.size(), 1);
  while (true) {
    std::vector<Int> vs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = divs[i][idx[i]] * sgn[i];
    LaurentPoly g = interpolate(xs, vs);
    if (!g.is_zero() && g.min_exp() >= 0 && g.max_exp() == d && g.is_integral() && divides(g, F)) {
      out = normalize(g);
      return true;
    }
    // advance odometer; first sign fixed positive
    std::size_t k = 0;
    for (; k < xs.size(); ++k) {
      if (k > 0 && sgn[k] == 1) {
        sgn[k] = -1;
        break;
      }
      sgn[k] = 1;
      if (++idx[k] < divs[k].size()) break;
      idx[k] = 0;
    }
    if (k == xs.size()) return false;
  }
}

void factor_squarefree(const LaurentPoly& a, std::vector<LaurentPoly>& out) {
  LaurentPoly f = normalize(a);
  while (f.span() > 0) {
    std::vector<Int> fi = primitive_integer(f);
    const int n = static_cast<int>(fi.size()) - 1;
    bool found = false;
    for (int d = 1; d <= n / 2 && !found; ++d) {
      LaurentPoly g;
      if (kronecker_factor(fi, d, g)) {
        out.push_back(g);
        f = normalize(exact_div(f, g));
        found = true;
      }
    }
    if (!found) {
      out.push_back(f);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<LaurentPoly, int>> factor_rational(const LaurentPoly& a) {
  if (a.is_zero()) throw std::domain_error("factorization of zero");
  LaurentPoly f = normalize(a);
  std::map<LaurentPoly, int> mult;
  // Yun square-free decomposition
  LaurentPoly df = derivative(f);
  LaurentPoly a0 = gcd(f, df);
  LaurentPoly b = exact_div(f, a0);
  LaurentPoly c = exact_div(df, a0);
  LaurentPoly dd = c - derivative(b);
  int i = 1;
  while (b.span() > 0) {
    LaurentPoly ai = gcd(b, dd);
    b = exact_div(b, ai);
    LaurentPoly ci = exact_div(dd, ai);
    dd = ci - derivative(b);
    if (ai.span() > 0) {
      std::vector<LaurentPoly> irr;
      factor_squarefree(ai, irr);
      for (auto& g : irr) mult[g] += i;
    }
    ++i;
  }
  std::vector<std::pair<LaurentPoly, int>> out(mult.begin(), mult.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.span() != y.first.span()) return x.first.span() < y.first.span();
    return x.first < y.first;
  });
  return out;
}

bool is_squarefree(const LaurentPoly& a) {
  LaurentPoly f = normalize(a);
  if (f.span() <= 0) return true;
  LaurentPoly f0 = f.shift(-f.min_exp());
  return gcd(f0, derivative(f0)).span() == 0;
}

}  // namespace kc
