#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kc/concordance.hpp"

namespace kc {

LaurentPoly poly(const std::vector<long>& coeffs, long lowest = 0);

LaurentPoly trefoil_polynomial();     // t^2 - t + 1
LaurentPoly figure_eight_polynomial();  // t^2 - 3t + 1
LaurentPoly stevedore_polynomial();   // 2t^2 - 5t + 2

// Rank-one complex in degree 2, n = 4, phi_0 = symmetrized delta.
SymmetricComplex<LaurentPoly> rank_one_complex(const LaurentPoly& delta);

// Named triples: unknot, trefoil, figure-eight (twisted meridian), stevedore, trefoil+stevedore.
std::vector<std::string> corpus_names();
KnotTriple corpus_triple(const std::string& name);
std::vector<KnotTriple> corpus_triples();

struct SeifertExample {
  std::string name;
  Matrix<Int> V;
};
std::vector<SeifertExample> seifert_corpus();
Matrix<Int> seifert_matrix(const std::string& name);

// A corpus triple, possibly conjugated by a random group element.
KnotTriple random_corpus_triple(std::mt19937_64& rng);
ModuleElement random_element(const AlexanderModule& H, std::mt19937_64& rng, long bound = 2);

}  // namespace kc
