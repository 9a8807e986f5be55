#include "ogradlab/polymatrix.hpp"

namespace ogradlab {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols, Polynomial(ring_));
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, int n) {
  PolyMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RingPtr& ring, const MatQ& q) {
  PolyMatrix m(ring, static_cast<int>(q.rows()), static_cast<int>(q.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      m.at(r, c) = Polynomial::constant(ring, q(r, c));
  return m;
}

Polynomial& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("PolyMatrix::at");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

const Polynomial& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("PolyMatrix::at");
  return a_[static_cast<size_t>(r) * cols_ + c];
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
  PolyMatrix r = *this;
  for (auto& q : r.a_) q = q * p;
  return r;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
  return a * b - b * a;
}

PolyMatrix anticommutator(const PolyMatrix& a, const PolyMatrix& b) {
  return a * b + b * a;
}

Polynomial trace(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square");
  Polynomial t(m.ring());
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

namespace {

Polynomial det_expand(const PolyMatrix& m, std::vector<int>& rows,
                      std::vector<int>& cols) {
  const size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  Polynomial acc(m.ring());
  int r0 = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < n; ++j) {
    const Polynomial& piv = m.at(r0, cols[j]);
    if (piv.is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Polynomial sub = det_expand(m, sub_rows, sub_cols);
    Polynomial contrib = piv * sub;
    if (j % 2) contrib = -contrib;
    acc += contrib;
  }
  return acc;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  std::vector<int> rows(m.rows()), cols(m.cols());
  for (int i = 0; i < m.rows(); ++i) rows[i] = cols[i] = i;
  return det_expand(m, rows, cols);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square");
  const int n = m.rows();
  PolyMatrix adj(m.ring(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      Polynomial cof = n == 1 ? Polynomial::constant(m.ring(), 1)
                              : det_expand(m, rows, cols);
      if ((i + j) % 2) cof = -cof;
      adj.at(j, i) = std::move(cof);
    }
  return adj;
}

Polynomial minor2x2(const PolyMatrix& m, int r0, int r1, int c0, int c1) {
  return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
}

MatQ eval(const PolyMatrix& m, const std::vector<Rational>& point) {
  MatQ q = matq_zero(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) q(r, c) = eval(m.at(r, c), point);
  return q;
}

PolyMatrix substitute(const PolyMatrix& m, const std::vector<Polynomial>& imgs) {
  RingPtr target = imgs.empty() ? m.ring() : imgs.front().ring();
  PolyMatrix r(target, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = substitute(m.at(i, j), imgs);
  return r;
}

}  // namespace ogradlab
