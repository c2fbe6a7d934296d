#pragma once

#include <string>
#include <vector>

#include "kc/concordance.hpp"

namespace kc {

// Data exhibiting T ~ T^dag over Z[Z x| H'].
struct ConcordanceWitness {
  ModulePtr Hp;
  ModuleHom jflat, jflat_dag;  // H -> H', H^dag -> H'
  GComplex V;
  GStructure Theta;             // dimension 4
  GMap j, j_dag;                // Y -> V, Y^dag -> V (induced over H')
  GMap delta;                   // E -> V
  GMap gamma, gamma_dag;        // delta (1, varpi) ~ (j eta, j^dag eta^dag)
  std::vector<QZVector> xi;     // consistency cycles in Q[Z] (x) V
};

// The 4-dimensional triad of a witness (boundary complexes induced over H').
GTriad witness_triad(const KnotTriple& T, const KnotTriple& Tdag, const ConcordanceWitness& W);

Report validate_concordance_witness(const KnotTriple& T, const KnotTriple& Tdag, const ConcordanceWitness& W);

// V = Y, Theta = 0, H' = H.
ConcordanceWitness reflexive_witness(const KnotTriple& T);

// Cokernel of (a, -b): H -> A + B, with the induced maps A -> coker and B -> coker.
struct ModuleCokernel {
  ModulePtr M;
  ModuleHom from_a, from_b;
};
ModuleCokernel module_cokernel(const ModuleHom& a, const ModuleHom& b);

// Glue W1: T ~ T^dag and W2: T^dag ~ T^ddag into a witness for T ~ T^ddag.
ConcordanceWitness glue_witnesses(const KnotTriple& T, const KnotTriple& Tdag, const KnotTriple& Tddag,
                                  const ConcordanceWitness& W1, const ConcordanceWitness& W2);

enum class WitnessCorruption { ExtraFreeSummand, BrokenHomotopy, ZeroConsistency, NegatedDelta, ScaledModuleMap };
inline constexpr WitnessCorruption kAllCorruptions[] = {
    WitnessCorruption::ExtraFreeSummand, WitnessCorruption::BrokenHomotopy, WitnessCorruption::ZeroConsistency,
    WitnessCorruption::NegatedDelta, WitnessCorruption::ScaledModuleMap};
ConcordanceWitness corrupt_witness(const ConcordanceWitness& W, WitnessCorruption c);
std::string corruption_name(WitnessCorruption c);

}  // namespace kc
