#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kc/symmetric.hpp"

namespace kc {

class NotCocycle : public std::runtime_error {
 public:
  NotCocycle(std::size_t i, const std::string& what) : std::runtime_error(what), index(i) {}
  std::size_t index;
};

class CupProductNonzero : public std::runtime_error {
 public:
  CupProductNonzero(std::size_t i_, std::size_t j_, std::string v, const std::string& what)
      : std::runtime_error(what), i(i_), j(j_), value(std::move(v)) {}
  std::size_t i, j;
  std::string value;
};

// Data for surgery: a pair (f: C -> D, (dphi, phi)).
template <class R>
using SurgeryData = SymmetricPair<R>;

// Pair (f = (l_1 .. l_k): X -> B, (0, phi)) with B free of rank k in the given degree.
// Each l_i is a column over X_degree.
template <class R>
SurgeryData<R> surgery_data_from_cocycles(const SymmetricComplex<R>& X, const std::vector<std::vector<R>>& l,
                                          int degree = 2) {
  const auto& C = X.C;
  const std::size_t m = C.rank(degree);
  Matrix<R> F(m, l.size(), C.zero());
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].size() != m) throw std::invalid_argument("cocycle " + std::to_string(i) + " has wrong length");
    for (std::size_t a = 0; a < m; ++a) F(a, i) = l[i][a];
  }
  Matrix<R> dl = C.d(degree + 1) * F;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t a = 0; a < dl.rows(); ++a)
      if (!ring_is_zero(dl(a, i))) throw NotCocycle(i, "l_" + std::to_string(i) + " d != 0");
  // l_i phi_0 l_j^* at the middle degree; the structure is only defined there when n = 2 degree
  const int n = X.phi.n();
  if (n - degree == degree) {
    Matrix<R> cup = F.adjoint() * X.phi.at(C, 0, degree) * F;
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j)
        if (!ring_is_zero(cup(i, j)))
          throw CupProductNonzero(i, j, ring_str(cup(i, j)),
                                  "cup product of l_" + std::to_string(i) + " and l_" + std::to_string(j) + " is " +
                                      ring_str(cup(i, j)));
  }
  ChainComplex<R> B(C.zero());
  if (!l.empty()) B.set_rank(degree, l.size());
  SurgeryData<R> P;
  P.f = ChainMap<R>(C, B);
  if (!l.empty()) P.f.set(degree, F);
  P.dphi = SymmetricStructure<R>(n + 1, X.phi.eps());
  P.phi = X.phi;
  return P;
}

// Effect of algebraic surgery: C'_r = C_r + D_{r+1} + D^{n-r+1}.
template <class R>
SymmetricComplex<R> algebraic_surgery(const SymmetricComplex<R>& X, const SurgeryData<R>& P) {
  if (!(P.C() == X.C) || !(P.phi == X.phi)) throw BoundaryMismatch("surgery data is not a pair on the given complex");
  if (!is_connected(X).connected()) throw NotConnected("surgery input is not connected");
  if (!P.D().is_zero() && !is_connected(P).connected()) throw NotConnected("surgery data is not connected");
  const auto& C = X.C;
  const auto& D = P.D();
  const auto& phi = X.phi;
  const auto& dphi = P.dphi;
  const auto& f = P.f;
  const int n = phi.n();
  const int eps = phi.eps();
  if (D.is_zero()) return X;
  auto layout = [&](int r) { return BlockLayout({C.rank(r), D.rank(r + 1), D.rank(n - r + 1)}); };
  const int lo = std::min({C.lo(), D.lo() - 1, n + 1 - D.hi()});
  const int hi = std::max({C.hi(), D.hi() - 1, n + 1 - D.lo()});
  SymmetricComplex<R> Y;
  Y.C = ChainComplex<R>(C.zero());
  for (int r = lo; r <= hi; ++r) Y.C.set_rank(r, layout(r).total());
  for (int r = lo; r <= hi + 1; ++r) {
    BlockMatrix<R> b(layout(r), layout(r - 1), C.zero());
    b.set(0, 0, C.d(r));
    b.set(0, 1, f.at(r).signed_by(sign_pow(r)));
    b.set(1, 1, D.d(r + 1));
    b.set(2, 0, (f.at(n - r + 1).adjoint() * phi.at(C, 0, r - 1)).signed_by(sign_pow(n + 1)));
    b.set(2, 1, dphi.at(D, 0, r).signed_by(sign_pow(r)));
    b.set(2, 2, D.d(n - r + 2).adjoint().signed_by(sign_pow(r)));
    Y.C.set_d(r, b.matrix());
  }
  Y.phi = SymmetricStructure<R>(n, eps);
  const int smax = std::max(phi.max_s(), dphi.max_s());
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : Y.C.ranks()) {
      (void)k;
      // source C'^{n-r+s} = C^{n-r+s} + D^{n-r+s+1} + D_{r-s+1}
      BlockMatrix<R> b(layout(n - r + s), layout(r), C.zero());
      b.set(0, 0, phi.at(C, s, r));
      b.set(0, 1, (phi.T_at(C, s + 1, r + 1) * f.at(r + 1)).signed_by(sign_pow(n - r)));
      b.set(1, 1, dphi.T_at(D, s + 1, r + 1).signed_by(sign_pow(n - r)));
      if (s == 0) {
        b.set(2, 1, D.id(r + 1).signed_by(eps * sign_pow(static_cast<long>(r) * (n - r))));
        b.set(1, 2, Matrix<R>::identity(D.rank(n - r + 1), C.zero()));
      }
      Y.phi.set(Y.C, s, r, b.matrix());
    }
  return Y;
}

// Rank-two complex in degree 2 over Q, n = 4, phi_0 = [[0, 1], [eps, 0]].
SymmetricComplex<Rat> hyperbolic_example(int eps = 1);

}  // namespace kc
