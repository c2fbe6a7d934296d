#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kc/blanchfield.hpp"

namespace kc {

// (n, a) in Z x| Q(t)/Q[t,t^-1].
struct GammaElement {
  long n = 0;
  TorsionClass a;
  friend bool operator==(const GammaElement& x, const GammaElement& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator!=(const GammaElement& x, const GammaElement& y) { return !(x == y); }
  friend bool operator<(const GammaElement& x, const GammaElement& y) {
    return x.n < y.n || (x.n == y.n && x.a < y.a);
  }
};

GammaElement gamma_identity();
GammaElement gamma_mul(const GammaElement& x, const GammaElement& y);
GammaElement gamma_inv(const GammaElement& x);
std::string gamma_str(const GammaElement& x);

// Element of Q Gamma.
class GammaRingElement {
 public:
  GammaRingElement() = default;
  GammaRingElement(const Rat& c);  // NOLINT(google-explicit-constructor)
  static GammaRingElement group(const GammaElement& g, const Rat& c = Rat(1));
  // sum c_k (k, 0)
  static GammaRingElement from_laurent(const LaurentPoly& p);

  const std::map<GammaElement, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool in_meridian_subring() const;
  GammaRingElement involute() const;
  std::string str() const;

  GammaRingElement& operator+=(const GammaRingElement& o);
  GammaRingElement& operator-=(const GammaRingElement& o);
  friend GammaRingElement operator+(GammaRingElement a, const GammaRingElement& b) { return a += b; }
  friend GammaRingElement operator-(GammaRingElement a, const GammaRingElement& b) { return a -= b; }
  friend GammaRingElement operator*(const GammaRingElement& a, const GammaRingElement& b);
  GammaRingElement operator-() const;
  friend bool operator==(const GammaRingElement& a, const GammaRingElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GammaRingElement& a, const GammaRingElement& b) { return !(a == b); }
  friend bool operator<(const GammaRingElement& a, const GammaRingElement& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(const GammaElement& g, const Rat& c);
  std::map<GammaElement, Rat> terms_;
};

using QGamma = GammaRingElement;

inline QGamma ring_one_like(const QGamma&) { return QGamma(Rat(1)); }
inline QGamma ring_zero_like(const QGamma&) { return QGamma(); }
inline bool ring_is_zero(const QGamma& a) { return a.is_zero(); }
inline QGamma ring_conj(const QGamma& a) { return a.involute(); }
inline std::string ring_str(const QGamma& a) { return a.str(); }

// Augmentations Gamma -> Z -> 1.
LaurentPoly gamma_to_QZ(const QGamma& x);
Rat gamma_to_Q(const QGamma& x);
std::optional<Int> level_Z(const QGamma& x);
inline Rat level_Q(const QGamma& x) { return gamma_to_Q(x); }
inline std::optional<LaurentPoly> level_QZ(const QGamma& x) { return gamma_to_QZ(x); }

using GammaComplex = SymmetricComplex<QGamma>;
using GammaMap = ChainMap<QGamma>;

// rho(n, h) = (n, Bl(h, p)).
struct Representation {
  ModulePtr H;
  ModuleElement p;
  BlanchfieldForm form;

  GammaElement operator()(const GroupElement& g) const;
  QGamma operator()(const GRE& x) const;
};

Representation rho_from_form(ModulePtr H, const BlanchfieldForm& F, const ModuleElement& p);
Representation rho_from_p(const KnotTriple& T, const ModuleElement& p);

ChainComplex<QGamma> induce_over_gamma(const ChainComplex<GRE>& C, const Representation& rho);
GammaMap induce_over_gamma(const GMap& f, const Representation& rho);
GammaComplex induce_over_gamma(const ZeroSurgeryComplex& Z, const Representation& rho);
ChainComplex<LaurentPoly> augment_to_QZ(const ChainComplex<QGamma>& C);

class CertificateUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContractibilityCertificate {
  HomologyReport cone_Q;  // degrees 0 and 1 are zero
  std::string meridian_image;
};

// Rational criterion: H_0, H_1 of Q (x) cone(1 (x) f-) vanish and the circle generator
// maps to a nontrivial element. Throws CertificateUnavailable otherwise.
ContractibilityCertificate certify_contractible_over_K(const ChainComplex<QGamma>& N, const GammaMap& f_minus);

struct OneSolution {
  ChainComplex<QGamma> V;
  GammaMap j;               // N_p -> V
  SymmetricStructure<QGamma> Theta;  // dimension 4
  Metaboliser P;
};

// Product solution V = induced meridian circle; needs N_p inside the meridian subring.
OneSolution product_solution(const KnotTriple& T, const Representation& rho);

Report validate_algebraic_one_solution(const KnotTriple& T, const Representation& rho, const OneSolution& S);

struct CotEntry {
  ModuleElement p;
  GammaComplex N;
  std::optional<ContractibilityCertificate> certificate;
  std::string refusal;
  std::vector<bool> in_metaboliser;  // one flag per metaboliser found
};

struct CotFamily {
  std::string label;
  BlanchfieldForm form;
  MetabolicDecision decision;
  std::vector<Metaboliser> metabolisers;
  std::vector<CotEntry> entries;
  bool no_metaboliser = false;
  bool p0_compatible = false;  // p = 0 entry augments to the rationalized N
};

CotFamily assemble_cot_family(const KnotTriple& T, long scalar_bound = 1);

}  // namespace kc
