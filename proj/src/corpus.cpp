#include "kc/corpus.hpp"

#include <stdexcept>

namespace kc {

LaurentPoly poly(const std::vector<long>& coeffs, long lowest) {
  std::vector<Rat> q;
  for (long c : coeffs) q.push_back(Rat(c));
  return LaurentPoly::from_coeffs(lowest, q);
}

LaurentPoly trefoil_polynomial() { return poly({1, -1, 1}); }
LaurentPoly figure_eight_polynomial() { return poly({1, -3, 1}); }
LaurentPoly stevedore_polynomial() { return poly({2, -5, 2}); }

SymmetricComplex<LaurentPoly> rank_one_complex(const LaurentPoly& delta) {
  SymmetricComplex<LaurentPoly> X;
  X.C = ChainComplex<LaurentPoly>(LaurentPoly());
  X.C.set_rank(2, 1);
  X.phi = SymmetricStructure<LaurentPoly>(4);
  X.phi.set(X.C, 0, 2, Matrix<LaurentPoly>::diagonal({symmetrize(delta)}, LaurentPoly()));
  return X;
}

std::vector<std::string> corpus_names() {
  return {"unknot", "trefoil", "figure-eight", "stevedore", "trefoil+stevedore"};
}

KnotTriple corpus_triple(const std::string& name) {
  if (name == "unknot") return unknot_triple();
  if (name == "trefoil") return split_triple({trefoil_polynomial()}, {}, {}, name);
  if (name == "figure-eight")
    return split_triple({figure_eight_polynomial()}, {LaurentPoly(1)}, {LaurentPoly::t(1)}, name);
  if (name == "stevedore") return split_triple({stevedore_polynomial()}, {}, {}, name);
  if (name == "trefoil+stevedore")
    return split_triple({trefoil_polynomial(), stevedore_polynomial()}, {}, {}, name);
  throw std::invalid_argument("unknown corpus triple '" + name + "'");
}

std::vector<KnotTriple> corpus_triples() {
  std::vector<KnotTriple> out;
  for (const auto& n : corpus_names()) out.push_back(corpus_triple(n));
  return out;
}

std::vector<SeifertExample> seifert_corpus() {
  auto m2 = [](long a, long b, long c, long d) {
    Matrix<Int> V(2, 2, Int(0));
    V(0, 0) = a;
    V(0, 1) = b;
    V(1, 0) = c;
    V(1, 1) = d;
    return V;
  };
  return {{"unknot", Matrix<Int>(0, 0, Int(0))},
          {"trefoil", m2(-1, 1, 0, -1)},
          {"figure-eight", m2(-1, 1, 0, 1)},
          {"stevedore", m2(1, 1, 0, -2)}};
}

Matrix<Int> seifert_matrix(const std::string& name) {
  for (const auto& e : seifert_corpus())
    if (e.name == name) return e.V;
  throw std::invalid_argument("unknown Seifert example '" + name + "'");
}

ModuleElement random_element(const AlexanderModule& H, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Rat> c(H.q_dimension());
  for (auto& x : c) x = Rat(d(rng));
  return H.from_q_coords(c);
}

KnotTriple random_corpus_triple(std::mt19937_64& rng) {
  const auto names = corpus_names();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  KnotTriple T = corpus_triple(names[pick(rng)]);
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) && T.H->size() > 0) {
    std::uniform_int_distribution<long> n(-1, 1);
    T = conjugate_triple(T, GroupElement{n(rng), random_element(*T.H, rng, 1)});
  }
  return T;
}

}  // namespace kc
