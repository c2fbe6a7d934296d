#pragma once

#include <string>
#include <vector>

#include "kc/symmetric.hpp"

namespace kc {

using GComplex = ChainComplex<GRE>;
using GMap = ChainMap<GRE>;
using GStructure = SymmetricStructure<GRE>;
using GTriad = SymmetricTriad<GRE>;
using QZVector = std::vector<LaurentPoly>;

// Model boundary pieces determined by the meridian g1 = (1, h1) and the half longitude l_a.
struct ModelBoundary {
  ModulePtr H;
  GroupElement g1, la, gq;
  GComplex C, Dm, Dp;
  GStructure phi;  // phi + (-phi) on C, dimension 1
  GMap im, ip;
  GMap varpi;     // D- -> D+, multiplication by l_a
  GMap varsigma;  // C -> C, swaps the two circles
};

ModelBoundary model_boundary(ModulePtr H, const GroupElement& g1, const GroupElement& la);
// circle complex R --(g - 1)--> R in degrees 1, 0
GComplex circle_complex(ModulePtr H, const GroupElement& g);

struct KnotTriple {
  ModulePtr H;
  GroupElement g1, la;
  GTriad triad;
  GMap mu;                 // homotopy f+ varpi ~ f-
  std::vector<QZVector> xi;  // one degree-1 cycle of Q[Z] (x) Y per generator of H
  std::string label;

  ModelBoundary model() const { return model_boundary(H, g1, la); }
};

KnotTriple unknot_triple();
// Unknot triple over Z[Z x| H] with the given meridian and l_a = 1.
KnotTriple unknot_triple_over(ModulePtr H, const GroupElement& g1);

// Triple realizing the cyclic-sum module with factors deltas: Y = D- + dX, where dX is
// the boundary of the rank-one degree-2 complex with phi_0 the symmetrized factor.
// h1 and la_h place the meridian and half longitude inside Z x| H.
KnotTriple split_triple(const std::vector<LaurentPoly>& deltas, const std::vector<LaurentPoly>& h1 = {},
                        const std::vector<LaurentPoly>& la_h = {}, const std::string& label = {});

// symmetric representative of p: t^k p with p(t^-1) = p(t); throws if none exists
LaurentPoly symmetrize(const LaurentPoly& p);

KnotTriple induce_triple(const KnotTriple& T, const RingMap& m);
KnotTriple conjugate_triple(const KnotTriple& T, const GroupElement& c);
KnotTriple normalize_meridian(const KnotTriple& T);
KnotTriple connected_sum(const KnotTriple& A, const KnotTriple& B);
KnotTriple invert_triple(const KnotTriple& T);

struct BoundaryTorus {
  SymmetricComplex<GRE> E;
  GMap eta;  // E -> Y
  SymmetricPair<GRE> pair() const;
  GStructure Phi;
};
BoundaryTorus boundary_torus(const KnotTriple& T);
// Torus complex E built from (g1, la) via the union of the model pairs.
SymmetricComplex<GRE> model_torus(const ModelBoundary& m);
// Chain isomorphism E(g1, la) -> E(g1, la2) with diagonal blocks 1 and la^-1 la2.
GMap varpi_E(const SymmetricComplex<GRE>& E, const SymmetricComplex<GRE>& E2, const GroupElement& la,
             const GroupElement& la2);

// Every explicit model matrix for (g1, l_a), plus the torus E, its copy E2 for l_a2 and varpi_E: E -> E2.
struct ModelMatrices {
  ModelBoundary m;
  SymmetricComplex<GRE> E, E2;
  GMap wE;
};

ModelMatrices model_matrices(ModulePtr H, const GroupElement& g1, const GroupElement& la, const GroupElement& la2);
Report validate_model_matrices(const ModelMatrices& M);
// Names of all stored entries, in the order used by mutate_model_entry.
std::vector<std::string> model_entry_names(const ModelMatrices& M);
// Adds delta to the k-th stored entry.
ModelMatrices mutate_model_entry(const ModelMatrices& M, std::size_t k, const GRE& delta);

struct ZeroSurgeryComplex {
  ModulePtr H;
  SymmetricComplex<GRE> N;
  std::vector<QZVector> xi;  // the triple's cycles placed in N_1
  GMap f_minus;              // D- -> N
};
ZeroSurgeryComplex zero_surgery(const KnotTriple& T);

Report validate_triple(const KnotTriple& T);

// Rational check that cycles represent a basis of H_1(Q[Z] (x) Y) matching the module.
Report check_consistency(const ModulePtr& H, const ChainComplex<LaurentPoly>& Y, const std::vector<QZVector>& xi);

// Z-homology isomorphism test for a chain map (cone acyclic over Z).
Report check_Z_equivalence(const GMap& f, const std::string& name);

}  // namespace kc
