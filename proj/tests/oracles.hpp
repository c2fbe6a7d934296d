#pragma once

// Test-side reference computations, written independently of the library algorithms.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kc/matrix.hpp"
#include "kc/laurent.hpp"

namespace oracle {

using kc::Int;
using kc::Rat;

// Cofactor expansion along the first row.
template <class R>
R det(const kc::Matrix<R>& A) {
  const std::size_t n = A.rows();
  if (n == 0) return kc::ring_one_like(A.zero());
  if (n == 1) return A(0, 0);
  R out = A.zero();
  for (std::size_t j = 0; j < n; ++j) {
    kc::Matrix<R> M(n - 1, n - 1, A.zero());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) M(i - 1, c++) = A(i, k);
    R term = A(0, j) * det(M);
    if (j % 2) out -= term; else out += term;
  }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline Int determinantal_divisor(const kc::Matrix<Int>& A, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(A.rows(), k, 0, cur, rs);
  subsets(A.cols(), k, 0, cur, cs);
  Int g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      kc::Matrix<Int> M(k, k, Int(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) M(i, j) = A(r[i], c[j]);
      Int d = det(M);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Invariant factors from determinantal divisors.
inline std::vector<Int> invariant_factors(const kc::Matrix<Int>& A) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
    Int dk = determinantal_divisor(A, k);
    if (dk == 0) break;
    out.push_back(Int(dk / prev));
    prev = dk;
  }
  return out;
}

// Rank over Q by plain row reduction on a copy.
inline std::size_t q_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rank && a[i][c] != 0) {
        Rat f = a[i][c] / a[rank][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
      }
    ++rank;
  }
  return rank;
}

template <class R>
std::vector<std::vector<Rat>> to_rows(const kc::Matrix<R>& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m(i, j));
  return a;
}

// Evaluate term by term.
inline Rat eval(const kc::LaurentPoly& p, const Rat& x) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat xe = 1;
    for (long k = 0; k < std::labs(e); ++k) xe *= x;
    s += e >= 0 ? Rat(c * xe) : Rat(c / xe);
  }
  return s;
}

inline kc::LaurentPoly random_poly(std::mt19937_64& rng, long lo = -2, long hi = 2, long bound = 4) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<Rat> q;
  for (long e = lo; e <= hi; ++e) q.push_back(Rat(c(rng)));
  return kc::LaurentPoly::from_coeffs(lo, q);
}

inline kc::Matrix<Int> random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound = 6) {
  std::uniform_int_distribution<long> d(-bound, bound);
  kc::Matrix<Int> m(r, c, Int(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
