#include "kc/surgery.hpp"

namespace kc {

SymmetricComplex<Rat> hyperbolic_example(int eps) {
  SymmetricComplex<Rat> X;
  X.C = ChainComplex<Rat>(Rat(0));
  X.C.set_rank(2, 2);
  X.phi = SymmetricStructure<Rat>(4, eps);
  Matrix<Rat> h(2, 2, Rat(0));
  h(0, 1) = 1;
  h(1, 0) = eps;
  X.phi.set(X.C, 0, 2, h);
  return X;
}

}  // namespace kc
