#pragma once

#include <optional>
#include <vector>

#include "ogradlab/rational.hpp"

namespace ogradlab {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline MatQ matq_zero(Eigen::Index rows, Eigen::Index cols) {
  MatQ m(rows, cols);
  m.setConstant(Rational(0));
  return m;
}

inline MatQ matq_identity(Eigen::Index n) {
  MatQ m = matq_zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline VecQ vecq_zero(Eigen::Index n) {
  VecQ v(n);
  v.setConstant(Rational(0));
  return v;
}

// Gauss-Jordan to reduced row echelon form. Pivot rule: leftmost column,
// topmost nonzero entry, so results are deterministic. Returns the rank and
// appends pivot column indices.
int rref_in_place(MatQ& a, std::vector<int>* pivot_cols = nullptr);

int rank_of(MatQ a);

// Columns span the right kernel {x : a x = 0}.
MatQ kernel_basis(const MatQ& a);

// One exact solution of a x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b);

// Solutions for several right-hand sides at once; nullopt if any column of b
// is outside the column span of a.
std::optional<MatQ> solve_linear(const MatQ& a, const MatQ& b);

bool in_column_span(const MatQ& a, const VecQ& v);

}  // namespace ogradlab
