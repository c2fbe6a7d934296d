#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kc/concordance.hpp"
#include "kc/rational.hpp"
#include "kc/symmetric.hpp"

namespace kc {

class NoHomotopyInverse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotTorsion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSeifert : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pairing on the generators of a rational Alexander module; Bl(a x, b y) = a Bl(x, y) conj(b).
struct BlanchfieldForm {
  ModulePtr module;
  std::vector<std::vector<TorsionClass>> pairing;

  static BlanchfieldForm trivial();
  TorsionClass operator()(const ModuleElement& x, const ModuleElement& y) const;
  BlanchfieldForm negated() const;
  std::size_t size() const { return pairing.size(); }
};

Report validate_blanchfield(const BlanchfieldForm& F);

// Chain-level pairing on H_r of an odd-dimensional complex over Q[t,t^-1], r = (n - 1) / 2.
class ChainPairing {
 public:
  explicit ChainPairing(SymmetricComplex<LaurentPoly> N);
  int degree() const { return r_; }
  const SymmetricComplex<LaurentPoly>& complex() const { return N_; }
  // cochain a in C^{n-r} with a phi_0 homologous to y, and a cocycle
  std::vector<LaurentPoly> dual_cocycle(const std::vector<LaurentPoly>& y) const;
  TorsionClass operator()(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const;

 private:
  SymmetricComplex<LaurentPoly> N_;
  int r_ = 1;
};

// Generators from the homology presentation of H_r.
BlanchfieldForm chain_blanchfield(const SymmetricComplex<LaurentPoly>& N);
// Generators given by cycles representing the generators of the module H (over Q).
BlanchfieldForm chain_blanchfield(const SymmetricComplex<LaurentPoly>& N, const ModulePtr& H,
                                  const std::vector<std::vector<LaurentPoly>>& cycles);
SymmetricComplex<LaurentPoly> rationalize(const SymmetricComplex<GRE>& X);
BlanchfieldForm chain_blanchfield(const ZeroSurgeryComplex& Z);

BlanchfieldForm blanchfield_from_seifert(const Matrix<Int>& V);

struct Metaboliser {
  std::vector<ModuleElement> generators;
};

Report verify_metaboliser(const BlanchfieldForm& F, const Metaboliser& P);
// Q-dimension of the Q[t,t^-1]-span of the given elements
std::size_t span_dimension(const AlexanderModule& M, const std::vector<ModuleElement>& gens);

struct MetabolicDecision {
  enum class Kind { Yes, No, Undecided };
  Kind kind = Kind::Undecided;
  std::optional<Metaboliser> metaboliser;
  std::string reason;  // certificate for No, reason for Undecided
  std::size_t candidates_tried = 0;
};
std::string decision_name(MetabolicDecision::Kind k);

MetabolicDecision is_metabolic(const BlanchfieldForm& F);

class WittClass {
 public:
  explicit WittClass(BlanchfieldForm F) : form_(std::move(F)) {}
  const BlanchfieldForm& form() const { return form_; }
  const MetabolicDecision& decision() const;

 private:
  BlanchfieldForm form_;
  mutable std::optional<MetabolicDecision> decision_;
};

BlanchfieldForm direct_sum(const BlanchfieldForm& A, const BlanchfieldForm& B);
WittClass witt_sum(const WittClass& A, const WittClass& B);
WittClass witt_negate(const WittClass& A);

// R = {h | (h, q) in P for some q in Q}; P in H + H', Q in H'.
Metaboliser metaboliser_transfer(const BlanchfieldForm& H, const BlanchfieldForm& Hp, const Metaboliser& P,
                                 const Metaboliser& Q);

WittClass ac1_image(const KnotTriple& T);

}  // namespace kc
