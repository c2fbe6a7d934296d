#include "kc/metabelian.hpp"

#include <sstream>

namespace kc {

bool ModuleElement::is_zero() const {
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

AlexanderModule::AlexanderModule(std::vector<LaurentPoly> factors, Coefficients c)
    : factors_(std::move(factors)), coeffs_(c) {
  for (const auto& p : factors_) normalized_.push_back(normalize(p));
}

ModulePtr AlexanderModule::validate(const std::vector<LaurentPoly>& factors, Coefficients c) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const LaurentPoly& p = factors[i];
    if (p.is_zero()) throw TypeKViolation(i, "factor " + std::to_string(i) + " is zero");
    if (c == Coefficients::Z && !p.is_integral())
      throw TypeKViolation(i, "factor " + std::to_string(i) + " is not integral: " + p.str());
    Rat v = p.eval(Rat(1));
    bool ok = c == Coefficients::Z ? (v == 1 || v == -1) : v != 0;
    if (!ok)
      throw TypeKViolation(i, "factor " + std::to_string(i) + " = " + p.str() + " has p(1) = " + v.get_str());
  }
  return ModulePtr(new AlexanderModule(factors, c));
}

ModulePtr AlexanderModule::trivial(Coefficients c) { return ModulePtr(new AlexanderModule({}, c)); }

ModulePtr AlexanderModule::direct_sum(const AlexanderModule& a, const AlexanderModule& b) {
  std::vector<LaurentPoly> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  Coefficients c = (a.coeffs_ == Coefficients::Z && b.coeffs_ == Coefficients::Z) ? Coefficients::Z : Coefficients::Q;
  return ModulePtr(new AlexanderModule(f, c));
}

LaurentPoly AlexanderModule::order() const {
  LaurentPoly o(1);
  for (const auto& p : normalized_) o *= p;
  return o;
}

std::size_t AlexanderModule::q_dimension() const {
  std::size_t d = 0;
  for (const auto& p : normalized_) d += static_cast<std::size_t>(p.span());
  return d;
}

ModuleElement AlexanderModule::zero() const { return ModuleElement{std::vector<LaurentPoly>(size())}; }

ModuleElement AlexanderModule::gen(std::size_t i) const {
  ModuleElement x = zero();
  x.r.at(i) = reduce_mod(LaurentPoly(1), normalized_[i]);
  return x;
}

ModuleElement AlexanderModule::element(const std::vector<LaurentPoly>& residues) const {
  if (residues.size() != size()) throw std::invalid_argument("module element: wrong number of residues");
  ModuleElement x;
  for (std::size_t i = 0; i < size(); ++i) x.r.push_back(reduce_mod(residues[i], normalized_[i]));
  return x;
}

ModuleElement AlexanderModule::add(const ModuleElement& a, const ModuleElement& b) const {
  ModuleElement x = a;
  for (std::size_t i = 0; i < size(); ++i) x.r[i] += b.r[i];
  return x;
}

ModuleElement AlexanderModule::sub(const ModuleElement& a, const ModuleElement& b) const {
  ModuleElement x = a;
  for (std::size_t i = 0; i < size(); ++i) x.r[i] -= b.r[i];
  return x;
}

ModuleElement AlexanderModule::neg(const ModuleElement& a) const {
  ModuleElement x = a;
  for (auto& p : x.r) p = -p;
  return x;
}

ModuleElement AlexanderModule::act(const LaurentPoly& a, const ModuleElement& x) const {
  ModuleElement y;
  for (std::size_t i = 0; i < size(); ++i)
    y.r.push_back(x.r[i].is_zero() ? LaurentPoly() : reduce_mod(a * x.r[i], normalized_[i]));
  return y;
}

ModuleElement AlexanderModule::one_minus_t_inverse(const ModuleElement& v) const {
  ModuleElement u;
  const LaurentPoly omt = LaurentPoly(1) - LaurentPoly::t(1);
  for (std::size_t i = 0; i < size(); ++i) {
    if (v.r[i].is_zero()) {
      u.r.emplace_back();
      continue;
    }
    LaurentPoly inv = inverse_mod(omt, normalized_[i]);
    u.r.push_back(reduce_mod(inv * v.r[i], normalized_[i]));
  }
  return u;
}

std::vector<Rat> AlexanderModule::q_coords(const ModuleElement& x) const {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < size(); ++i)
    for (long k = 0; k < normalized_[i].span(); ++k) c.push_back(x.r[i].coeff(k));
  return c;
}

ModuleElement AlexanderModule::from_q_coords(const std::vector<Rat>& c) const {
  if (c.size() != q_dimension()) throw std::invalid_argument("module element: wrong coordinate count");
  ModuleElement x;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const long d = normalized_[i].span();
    std::vector<Rat> part(c.begin() + static_cast<std::ptrdiff_t>(pos), c.begin() + static_cast<std::ptrdiff_t>(pos + d));
    x.r.push_back(LaurentPoly::from_coeffs(0, part));
    pos += static_cast<std::size_t>(d);
  }
  return x;
}

std::string AlexanderModule::str(const ModuleElement& x) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.r.size(); ++i) os << (i ? ", " : "") << x.r[i].str();
  os << ")";
  return os.str();
}

ModulePtr validate_module(const std::vector<LaurentPoly>& factors, Coefficients c) {
  return AlexanderModule::validate(factors, c);
}

ModuleElement one_minus_t_inverse(const AlexanderModule& m, const ModuleElement& v) {
  return m.one_minus_t_inverse(v);
}

GroupElement group_identity(const AlexanderModule& m) { return {0, m.zero()}; }

GroupElement group_mul(const AlexanderModule& m, const GroupElement& a, const GroupElement& b) {
  return {a.n + b.n, m.add(a.h, m.act(LaurentPoly::t(a.n), b.h))};
}

GroupElement group_inv(const AlexanderModule& m, const GroupElement& a) {
  return {-a.n, m.neg(m.act(LaurentPoly::t(-a.n), a.h))};
}

GroupElement meridian(const AlexanderModule& m, long n) { return {n, m.zero()}; }

std::string group_str(const AlexanderModule& m, const GroupElement& g) {
  return "(" + std::to_string(g.n) + ", " + m.str(g.h) + ")";
}

GroupRingElement::GroupRingElement(ModulePtr m, const Rat& c) : mod_(std::move(m)) {
  if (c != 0) terms_.emplace(group_identity(*mod_), c);
}

GroupRingElement GroupRingElement::group(ModulePtr m, const GroupElement& g, const Rat& c) {
  GroupRingElement x(std::move(m));
  x.add_term(g, c);
  return x;
}

GroupRingElement GroupRingElement::from_laurent(ModulePtr m, const LaurentPoly& p) {
  GroupRingElement x(m);
  for (const auto& [e, c] : p.terms()) x.add_term(meridian(*m, e), c);
  return x;
}

void GroupRingElement::add_term(const GroupElement& g, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool GroupRingElement::is_integral() const {
  for (const auto& [g, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

GroupRingElement GroupRingElement::involute() const {
  GroupRingElement x(mod_);
  for (const auto& [g, c] : terms_) x.add_term(group_inv(*mod_, g), c);
  return x;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    if (c != 1) os << c.get_str() << "*";
    os << group_str(*mod_, g);
    first = false;
  }
  return os.str();
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (!mod_) mod_ = o.mod_;
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  if (!mod_) mod_ = o.mod_;
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement x(a.mod_ ? a.mod_ : b.mod_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) x.add_term(group_mul(*x.mod_, ga, gb), ca * cb);
  return x;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement x(mod_);
  for (const auto& [g, c] : terms_) x.terms_.emplace(g, -c);
  return x;
}

GRE ring_involution(const GRE& x) { return x.involute(); }

LaurentPoly augment_QZ(const GRE& x) {
  LaurentPoly p;
  for (const auto& [g, c] : x.terms()) p += LaurentPoly::monomial(c, g.n);
  return p;
}

Rat augment_Q(const GRE& x) {
  Rat s = 0;
  for (const auto& [g, c] : x.terms()) s += c;
  return s;
}

std::optional<LaurentPoly> augment_ZZ(const GRE& x) {
  LaurentPoly p = augment_QZ(x);
  if (!p.is_integral()) return std::nullopt;
  return p;
}

std::optional<Int> augment_Z(const GRE& x) {
  Rat s = augment_Q(x);
  if (s.get_den() != 1) return std::nullopt;
  return Int(s.get_num());
}

ModuleHom ModuleHom::from_images(ModulePtr src, ModulePtr dst, std::vector<ModuleElement> images) {
  if (images.size() != src->size()) throw std::invalid_argument("module hom: wrong number of images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].r.size() != dst->size()) throw std::invalid_argument("module hom: image has wrong shape");
    if (!dst->act(src->factor(i), images[i]).is_zero())
      throw NotEquivariant("module hom: relation " + src->factor(i).str() + " not respected by image of generator " +
                           std::to_string(i));
  }
  return ModuleHom{std::move(src), std::move(dst), std::move(images)};
}

ModuleHom ModuleHom::from_q_matrix(ModulePtr src, ModulePtr dst, const Matrix<Rat>& m) {
  if (m.rows() != src->q_dimension() || m.cols() != dst->q_dimension())
    throw std::invalid_argument("module hom: Q-matrix has wrong shape");
  auto row_image = [&](std::size_t k) { return dst->from_q_coords(m.row(k)); };
  std::vector<ModuleElement> images;
  std::size_t base = 0;
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto d = static_cast<std::size_t>(src->factor(i).span());
    for (std::size_t k = 0; k < d; ++k) {
      ModuleElement tb = src->act(LaurentPoly::t(1), src->act(LaurentPoly::t(static_cast<long>(k)), src->gen(i)));
      std::vector<Rat> c = src->q_coords(tb);
      std::vector<Rat> img(dst->q_dimension(), Rat(0));
      for (std::size_t r = 0; r < c.size(); ++r)
        if (c[r] != 0)
          for (std::size_t j = 0; j < img.size(); ++j) img[j] += c[r] * m(r, j);
      if (dst->from_q_coords(img) != dst->act(LaurentPoly::t(1), row_image(base + k)))
        throw NotEquivariant("module hom: matrix does not commute with t");
    }
    images.push_back(d > 0 ? row_image(base) : dst->zero());
    base += d;
  }
  return from_images(std::move(src), std::move(dst), std::move(images));
}

ModuleHom ModuleHom::identity(ModulePtr m) {
  std::vector<ModuleElement> img;
  for (std::size_t i = 0; i < m->size(); ++i) img.push_back(m->gen(i));
  return ModuleHom{m, m, img};
}

ModuleHom ModuleHom::zero(ModulePtr src, ModulePtr dst) {
  std::vector<ModuleElement> img(src->size(), dst->zero());
  return ModuleHom{std::move(src), std::move(dst), img};
}

ModuleHom ModuleHom::inclusion_first(ModulePtr a, ModulePtr sum) {
  std::vector<ModuleElement> img;
  for (std::size_t i = 0; i < a->size(); ++i) img.push_back(sum->gen(i));
  return from_images(std::move(a), std::move(sum), img);
}

ModuleHom ModuleHom::inclusion_second(ModulePtr b, ModulePtr sum) {
  std::vector<ModuleElement> img;
  const std::size_t off = sum->size() - b->size();
  for (std::size_t i = 0; i < b->size(); ++i) img.push_back(sum->gen(off + i));
  return from_images(std::move(b), std::move(sum), img);
}

ModuleElement ModuleHom::apply(const ModuleElement& x) const {
  ModuleElement y = dst->zero();
  for (std::size_t i = 0; i < x.r.size(); ++i)
    if (!x.r[i].is_zero()) y = dst->add(y, dst->act(x.r[i], images[i]));
  return y;
}

ModuleHom ModuleHom::then(const ModuleHom& g) const {
  std::vector<ModuleElement> img;
  for (const auto& x : images) img.push_back(g.apply(x));
  return ModuleHom{src, g.dst, img};
}

Matrix<Rat> ModuleHom::q_matrix() const {
  Matrix<Rat> m(src->q_dimension(), dst->q_dimension(), Rat(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < src->size(); ++i)
    for (long k = 0; k < src->factor(i).span(); ++k) {
      std::vector<Rat> c = dst->q_coords(apply(src->act(LaurentPoly::t(k), src->gen(i))));
      for (std::size_t j = 0; j < c.size(); ++j) m(row, j) = c[j];
      ++row;
    }
  return m;
}

RingMap RingMap::identity(ModulePtr m) {
  RingMap r;
  r.kind_ = Kind::Identity;
  r.src_ = r.dst_ = std::move(m);
  return r;
}

RingMap RingMap::induced(const ModuleHom& f) {
  RingMap r;
  r.kind_ = Kind::ModuleHomInduced;
  r.src_ = f.src;
  r.dst_ = f.dst;
  r.hom_ = f;
  return r;
}

RingMap RingMap::inner(ModulePtr m, const GroupElement& c) {
  RingMap r;
  r.kind_ = Kind::InnerAutomorphism;
  r.src_ = r.dst_ = m;
  r.c_ = c;
  r.c_inv_ = group_inv(*m, c);
  return r;
}

GroupElement RingMap::apply(const GroupElement& g) const {
  switch (kind_) {
    case Kind::Identity:
      return g;
    case Kind::ModuleHomInduced:
      return {g.n, hom_->apply(g.h)};
    case Kind::InnerAutomorphism:
      return group_mul(*src_, group_mul(*src_, c_inv_, g), c_);
  }
  return g;
}

GRE RingMap::apply(const GRE& x) const {
  if (kind_ == Kind::Identity) return x;
  GRE y(dst_);
  for (const auto& [g, c] : x.terms()) y += GRE::group(dst_, apply(g), c);
  return y;
}

RingMap induce_hom(const ModuleHom& f) { return RingMap::induced(f); }
RingMap inner_auto(ModulePtr m, const GroupElement& c) { return RingMap::inner(std::move(m), c); }

}  // namespace kc
