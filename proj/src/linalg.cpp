#include "ogradlab/linalg.hpp"

namespace ogradlab {

Rational parse_rational(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string body(s.substr(b, e - b + 1));
  Rational r;
  if (r.set_str(body, 10) != 0)
    throw std::invalid_argument("bad rational: '" + body + "'");
  r.canonicalize();
  return r;
}

int rref_in_place(MatQ& a, std::vector<int>* pivot_cols) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index pr = 0;
  for (Eigen::Index c = 0; c < cols && pr < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = pr; r < rows; ++r)
      if (!is_zero(a(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr) a.row(piv).swap(a.row(pr));
    Rational inv = a(pr, c);
    for (Eigen::Index j = c; j < cols; ++j) a(pr, j) /= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pr || is_zero(a(r, c))) continue;
      Rational f = a(r, c);
      for (Eigen::Index j = c; j < cols; ++j) a(r, j) -= f * a(pr, j);
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++pr;
  }
  return static_cast<int>(pr);
}

int rank_of(MatQ a) { return rref_in_place(a); }

MatQ kernel_basis(const MatQ& a) {
  MatQ r = a;
  std::vector<int> pivots;
  int rk = rref_in_place(r, &pivots);
  const Eigen::Index cols = a.cols();
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  MatQ ker = matq_zero(cols, cols - rk);
  Eigen::Index k = 0;
  for (Eigen::Index free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    ker(free_c, k) = 1;
    for (int i = 0; i < rk; ++i) ker(pivots[i], k) = -r(i, free_c);
    ++k;
  }
  return ker;
}

std::optional<MatQ> solve_linear(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  MatQ aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  MatQ x = matq_zero(a.cols(), b.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      x(pivots[i], j) = aug(static_cast<Eigen::Index>(i), a.cols() + j);
  return x;
}

std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b) {
  auto m = solve_linear(a, MatQ(b));
  if (!m) return std::nullopt;
  return VecQ(m->col(0));
}

bool in_column_span(const MatQ& a, const VecQ& v) {
  return solve_linear(a, v).has_value();
}

}  // namespace ogradlab
