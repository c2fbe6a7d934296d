#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kc/laurent.hpp"
#include "kc/matrix.hpp"

namespace kc {

class TypeKViolation : public std::runtime_error {
 public:
  TypeKViolation(std::size_t index, const std::string& what) : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class NotEquivariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Residues, one per cyclic factor, each of degree < deg p_i.
struct ModuleElement {
  std::vector<LaurentPoly> r;
  bool is_zero() const;
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.r == b.r; }
  friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return a.r != b.r; }
  friend bool operator<(const ModuleElement& a, const ModuleElement& b) { return a.r < b.r; }
};

enum class Coefficients { Z, Q };

class AlexanderModule;
using ModulePtr = std::shared_ptr<const AlexanderModule>;

// Direct sum of cyclic modules Q[t,t^-1]/(p_i); residues are kept over Q.
class AlexanderModule {
 public:
  // Accepts iff every p_i(1) = +-1 (Z) or p_i(1) != 0 (Q); throws TypeKViolation.
  static ModulePtr validate(const std::vector<LaurentPoly>& factors, Coefficients c = Coefficients::Z);
  static ModulePtr trivial(Coefficients c = Coefficients::Z);
  static ModulePtr direct_sum(const AlexanderModule& a, const AlexanderModule& b);

  std::size_t size() const { return factors_.size(); }
  const LaurentPoly& factor(std::size_t i) const { return normalized_[i]; }
  const LaurentPoly& given_factor(std::size_t i) const { return factors_[i]; }
  const std::vector<LaurentPoly>& factors() const { return factors_; }
  Coefficients coefficients() const { return coeffs_; }
  // product of the normalized factors
  LaurentPoly order() const;
  std::size_t q_dimension() const;

  ModuleElement zero() const;
  ModuleElement gen(std::size_t i) const;
  ModuleElement element(const std::vector<LaurentPoly>& residues) const;
  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement sub(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement neg(const ModuleElement& a) const;
  ModuleElement act(const LaurentPoly& a, const ModuleElement& x) const;
  ModuleElement one_minus_t_inverse(const ModuleElement& v) const;

  std::vector<Rat> q_coords(const ModuleElement& x) const;
  ModuleElement from_q_coords(const std::vector<Rat>& c) const;
  std::string str(const ModuleElement& x) const;

  bool same_as(const AlexanderModule& o) const { return normalized_ == o.normalized_ && coeffs_ == o.coeffs_; }

 private:
  AlexanderModule(std::vector<LaurentPoly> factors, Coefficients c);
  std::vector<LaurentPoly> factors_, normalized_;
  Coefficients coeffs_;
};

ModulePtr validate_module(const std::vector<LaurentPoly>& factors, Coefficients c = Coefficients::Z);
ModuleElement one_minus_t_inverse(const AlexanderModule& m, const ModuleElement& v);

// Element (n, h) of Z x| H.
struct GroupElement {
  long n = 0;
  ModuleElement h;
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.n == b.n && a.h == b.h; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.n < b.n || (a.n == b.n && a.h < b.h);
  }
};

GroupElement group_identity(const AlexanderModule& m);
// (m, a)(n, b) = (m + n, a + t^m b)
GroupElement group_mul(const AlexanderModule& m, const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const AlexanderModule& m, const GroupElement& a);
GroupElement meridian(const AlexanderModule& m, long n = 1);
std::string group_str(const AlexanderModule& m, const GroupElement& g);

// Finite Q-linear combination of group elements; integral when all coefficients are.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(ModulePtr m) : mod_(std::move(m)) {}
  GroupRingElement(ModulePtr m, const Rat& c);
  static GroupRingElement group(ModulePtr m, const GroupElement& g, const Rat& c = Rat(1));
  // sum_k c_k (k, 0) from a Laurent polynomial in the meridian
  static GroupRingElement from_laurent(ModulePtr m, const LaurentPoly& p);

  const ModulePtr& module() const { return mod_; }
  const std::map<GroupElement, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  GroupRingElement involute() const;
  std::string str() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement operator-() const;
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }
  friend bool operator<(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(const GroupElement& g, const Rat& c);
  ModulePtr mod_;
  std::map<GroupElement, Rat> terms_;
};

using GRE = GroupRingElement;

inline GRE ring_one_like(const GRE& z) {
  if (!z.module()) throw std::logic_error("group ring element without module");
  return GRE(z.module(), Rat(1));
}
inline GRE ring_zero_like(const GRE& z) { return GRE(z.module()); }
inline bool ring_is_zero(const GRE& a) { return a.is_zero(); }
inline GRE ring_conj(const GRE& a) { return a.involute(); }
inline std::string ring_str(const GRE& a) { return a.str(); }

GRE ring_involution(const GRE& x);

// Augmentations: (n, h) -> t^n, resp. 1.
LaurentPoly augment_QZ(const GRE& x);
Rat augment_Q(const GRE& x);
std::optional<LaurentPoly> augment_ZZ(const GRE& x);
std::optional<Int> augment_Z(const GRE& x);

// Z[t,t^-1]-module map given by images of generators.
struct ModuleHom {
  ModulePtr src, dst;
  std::vector<ModuleElement> images;

  // Throws NotEquivariant if p_i * images[i] != 0.
  static ModuleHom from_images(ModulePtr src, ModulePtr dst, std::vector<ModuleElement> images);
  // From a Q-linear matrix on Q-bases (rows = source basis); checks t-equivariance.
  static ModuleHom from_q_matrix(ModulePtr src, ModulePtr dst, const Matrix<Rat>& m);
  static ModuleHom identity(ModulePtr m);
  static ModuleHom zero(ModulePtr src, ModulePtr dst);
  // inclusions of the summands of a direct sum built by AlexanderModule::direct_sum
  static ModuleHom inclusion_first(ModulePtr a, ModulePtr sum);
  static ModuleHom inclusion_second(ModulePtr b, ModulePtr sum);

  ModuleElement apply(const ModuleElement& x) const;
  ModuleHom then(const ModuleHom& g) const;
  Matrix<Rat> q_matrix() const;
};

// Ring map Z[Z x| H] -> Z[Z x| H'] induced by a module map or by conjugation.
class RingMap {
 public:
  enum class Kind { Identity, ModuleHomInduced, InnerAutomorphism };
  static RingMap identity(ModulePtr m);
  static RingMap induced(const ModuleHom& f);
  // x -> c^-1 x c
  static RingMap inner(ModulePtr m, const GroupElement& c);

  Kind kind() const { return kind_; }
  const ModulePtr& source() const { return src_; }
  const ModulePtr& target() const { return dst_; }
  GroupElement apply(const GroupElement& g) const;
  GRE apply(const GRE& x) const;
  GRE operator()(const GRE& x) const { return apply(x); }

 private:
  Kind kind_ = Kind::Identity;
  ModulePtr src_, dst_;
  std::optional<ModuleHom> hom_;
  GroupElement c_, c_inv_;
};

RingMap induce_hom(const ModuleHom& f);
RingMap inner_auto(ModulePtr m, const GroupElement& c);

}  // namespace kc
