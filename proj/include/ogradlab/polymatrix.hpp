#pragma once

#include "ogradlab/polynomial.hpp"

namespace ogradlab {

// Rectangular grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);

  static PolyMatrix identity(const RingPtr& ring, int n);
  static PolyMatrix from_rational(const RingPtr& ring, const MatQ& m);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int r, int c);
  const Polynomial& at(int r, int c) const;

  PolyMatrix transposed() const;
  bool is_zero() const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix scaled(const Polynomial& p) const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix anticommutator(const PolyMatrix& a, const PolyMatrix& b);
Polynomial trace(const PolyMatrix& m);
Polynomial det(const PolyMatrix& m);
// Transpose of the cofactor matrix, so adjugate(m) * m == det(m) * id.
PolyMatrix adjugate(const PolyMatrix& m);
Polynomial minor2x2(const PolyMatrix& m, int r0, int r1, int c0, int c1);

// Entry-wise evaluation at a rational point.
MatQ eval(const PolyMatrix& m, const std::vector<Rational>& point);
// Entry-wise substitution of ring variables.
PolyMatrix substitute(const PolyMatrix& m, const std::vector<Polynomial>& imgs);

}  // namespace ogradlab
