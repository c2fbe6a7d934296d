#include "kc/snf.hpp"

namespace kc {

std::optional<std::pair<std::vector<LaurentPoly>, LaurentPoly>> solve_row_fraction(
    const Matrix<LaurentPoly>& M, const std::vector<LaurentPoly>& b) {
  if (b.size() != M.cols()) throw std::invalid_argument("solve: shape mismatch");
  SnfResult<LaurentPoly> s = snf(M);
  std::vector<LaurentPoly> c = vec_mat(b, s.V);
  for (std::size_t i = s.rank; i < c.size(); ++i)
    if (!c[i].is_zero()) return std::nullopt;
  LaurentPoly scale(1);
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (c[i].is_zero()) continue;
    scale = lcm(scale, exact_div(s.factors[i], gcd(s.factors[i], c[i])));
  }
  std::vector<LaurentPoly> v(M.rows());
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!c[i].is_zero()) v[i] = exact_div(scale * c[i], s.factors[i]);
  return std::make_pair(vec_mat(v, s.U), scale);
}

std::optional<std::pair<std::vector<LaurentPoly>, LaurentPoly>> solve_linear(const Matrix<LaurentPoly>& A,
                                                                            const std::vector<LaurentPoly>& b) {
  return solve_row_fraction(A.transpose(), b);
}

}  // namespace kc
