#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kc/matrix.hpp"

namespace kc {

// Euclidean structure hooks: Z (absolute value), Q (field), Q[t,t^-1] (span).
inline bool euclid_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
inline std::pair<Int, Int> euclid_divmod(const Int& a, const Int& b) {
  Int q = a / b;
  return {q, a - q * b};
}
inline Int euclid_normalizer(const Int& a) { return a < 0 ? Int(-1) : Int(1); }
inline Int euclid_unit_inverse(const Int& u) { return u; }

inline bool euclid_less(const Rat&, const Rat&) { return false; }
inline std::pair<Rat, Rat> euclid_divmod(const Rat& a, const Rat& b) { return {a / b, Rat(0)}; }
inline Rat euclid_normalizer(const Rat& a) { return a == 0 ? Rat(1) : Rat(1) / a; }
inline Rat euclid_unit_inverse(const Rat& u) { return Rat(1) / u; }

inline bool euclid_less(const LaurentPoly& a, const LaurentPoly& b) { return a.span() < b.span(); }
inline std::pair<LaurentPoly, LaurentPoly> euclid_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  return divmod(a, b);
}
inline LaurentPoly euclid_normalizer(const LaurentPoly& a) { return normalizing_unit(a); }
inline LaurentPoly euclid_unit_inverse(const LaurentPoly& u) { return unit_inverse(u); }

template <class R>
bool euclid_divides(const R& a, const R& b) {
  if (ring_is_zero(a)) return ring_is_zero(b);
  return ring_is_zero(euclid_divmod(b, a).second);
}

template <class R>
struct SnfResult {
  Matrix<R> U, Uinv, V, Vinv, D;
  // normalized nonzero diagonal entries, each dividing the next
  std::vector<R> factors;
  std::size_t rank = 0;
};

// U * A * V = D with D diagonal.
template <class R>
SnfResult<R> snf(const Matrix<R>& A) {
  const std::size_t m = A.rows(), n = A.cols();
  const R zero = A.zero();
  SnfResult<R> res;
  Matrix<R>& D = res.D;
  D = A;
  res.U = res.Uinv = Matrix<R>::identity(m, zero);
  res.V = res.Vinv = Matrix<R>::identity(n, zero);
  Matrix<R>&U = res.U, &Ui = res.Uinv, &V = res.V, &Vi = res.Vinv;

  auto row_add = [&](std::size_t i, std::size_t k, const R& c) {  // row_i += c row_k
    D.add_row_multiple(i, k, c);
    U.add_row_multiple(i, k, c);
    Ui.add_col_multiple(k, i, -c);
  };
  auto col_add = [&](std::size_t j, std::size_t k, const R& c) {  // col_j += col_k c
    D.add_col_multiple(j, k, c);
    V.add_col_multiple(j, k, c);
    Vi.add_row_multiple(k, j, -c);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found_any = false;
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (ring_is_zero(D(i, j))) continue;
          if (pi == m || euclid_less(D(i, j), D(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;
      found_any = true;
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      Ui.swap_cols(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);
      Vi.swap_rows(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (ring_is_zero(D(i, t))) continue;
        auto [q, r] = euclid_divmod(D(i, t), D(t, t));
        row_add(i, t, -q);
        if (!ring_is_zero(r)) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ring_is_zero(D(t, j))) continue;
        auto [q, r] = euclid_divmod(D(t, j), D(t, t));
        col_add(j, t, -q);
        if (!ring_is_zero(r)) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!euclid_divides(D(t, t), D(i, j))) {
            row_add(t, i, ring_one_like(zero));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_any) break;
    R u = euclid_normalizer(D(t, t));
    D.scale_row(t, u);
    U.scale_row(t, u);
    Ui.scale_col(t, euclid_unit_inverse(u));
    res.factors.push_back(D(t, t));
  }
  res.rank = res.factors.size();
  return res;
}

// Solves u * M = b over the ring exactly; nullopt if no solution.
template <class R>
std::optional<std::vector<R>> solve_row(const Matrix<R>& M, const std::vector<R>& b) {
  SnfResult<R> s = snf(M);
  std::vector<R> c = vec_mat(b, s.V);
  std::vector<R> v(M.rows(), M.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      auto [q, r] = euclid_divmod(c[i], s.factors[i]);
      if (!ring_is_zero(r)) return std::nullopt;
      v[i] = q;
    } else if (!ring_is_zero(c[i])) {
      return std::nullopt;
    }
  }
  return vec_mat(v, s.U);
}

// Rows spanning the left kernel {u : u M = 0}.
template <class R>
Matrix<R> left_kernel(const Matrix<R>& M) {
  SnfResult<R> s = snf(M);
  return s.U.block(s.rank, 0, M.rows() - s.rank, M.rows());
}

// Solution of u * M = s * b over Q[t,t^-1] with s != 0 minimal; nullopt if b is
// outside the Q(t)-row space of M.
std::optional<std::pair<std::vector<LaurentPoly>, LaurentPoly>> solve_row_fraction(
    const Matrix<LaurentPoly>& M, const std::vector<LaurentPoly>& b);

// Column form: A x = s b.
std::optional<std::pair<std::vector<LaurentPoly>, LaurentPoly>> solve_linear(const Matrix<LaurentPoly>& A,
                                                                            const std::vector<LaurentPoly>& b);

}  // namespace kc
