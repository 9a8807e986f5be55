#include "ogradlab/dgalgebra.hpp"

#include <json.hpp>

namespace ogradlab {

VecQ DGAlgebra::mul(int da, const VecQ& a, int db, const VecQ& b) const {
  if (da + db > 3) return vecq_zero(0);
  VecQ out = vecq_zero(dims[da + db]);
  for (const auto& e : product[da][db]) {
    if (is_zero(a(e.i)) || is_zero(b(e.j))) continue;
    out(e.k) += e.c * a(e.i) * b(e.j);
  }
  return out;
}

VecQ DGAlgebra::apply_d(int k, const VecQ& v) const {
  if (k >= 3 || dims[k + 1] == 0) return vecq_zero(dim(k + 1));
  return diff[k] * v;
}

namespace {

// basis-pair product lookup: (i, j) -> list of (k, c)
using PairTable = std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>;

PairTable pair_table(const DGAlgebra& g, int a, int b) {
  PairTable t;
  if (a < 0 || b < 0 || a + b > 3) return t;
  for (const auto& e : g.product[a][b]) t[{e.i, e.j}].push_back({e.k, e.c});
  return t;
}

}  // namespace

AxiomReport verify_axioms(const DGAlgebra& g) {
  AxiomReport rep;
  rep.d_squared_zero = true;
  for (int k = 0; k + 2 <= 3; ++k) {
    if (g.dims[k] == 0 || g.dims[k + 2] == 0) continue;
    MatQ comp = g.diff[k + 1] * g.diff[k];
    if (comp != matq_zero(g.dims[k + 2], g.dims[k])) rep.d_squared_zero = false;
  }

  // sparse accumulation of structure-constant contractions
  using Key = std::array<int, 3>;
  rep.leibniz = true;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 2; ++b) {
      if (g.dims[a] == 0 || g.dims[b] == 0) continue;
      std::map<Key, Rational> acc;  // (i, j, target) -> coefficient
      // d(e_i e_j): product then differential
      for (const auto& e : g.product[a][b])
        for (int r = 0; r < g.dims[a + b + 1]; ++r)
          if (!is_zero(g.diff[a + b](r, e.k)))
            acc[{e.i, e.j, r}] += e.c * g.diff[a + b](r, e.k);
      // minus d(e_i) e_j
      for (const auto& e : g.product[a + 1][b])
        for (int i = 0; i < g.dims[a]; ++i)
          if (!is_zero(g.diff[a](e.i, i))) acc[{i, e.j, e.k}] -= g.diff[a](e.i, i) * e.c;
      // minus (-1)^a e_i d(e_j)
      Rational sign = a % 2 ? Rational(-1) : Rational(1);
      for (const auto& e : g.product[a][b + 1])
        for (int j = 0; j < g.dims[b]; ++j)
          if (!is_zero(g.diff[b](e.j, j)))
            acc[{e.i, j, e.k}] -= sign * g.diff[b](e.j, j) * e.c;
      for (const auto& [key, val] : acc)
        if (!is_zero(val)) rep.leibniz = false;
    }

  rep.associative = true;
  using Key4 = std::array<int, 4>;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) {
        if (g.dims[a] == 0 || g.dims[b] == 0 || g.dims[c] == 0) continue;
        std::map<Key4, Rational> acc;  // (i, j, l, target)
        PairTable right = pair_table(g, a + b, c);
        for (const auto& e : g.product[a][b]) {
          for (int l = 0; l < g.dims[c]; ++l) {
            auto it = right.find({e.k, l});
            if (it == right.end()) continue;
            for (const auto& [tgt, coef] : it->second)
              acc[{e.i, e.j, l, tgt}] += e.c * coef;
          }
        }
        PairTable left = pair_table(g, a, b + c);
        for (const auto& e : g.product[b][c]) {
          for (int i = 0; i < g.dims[a]; ++i) {
            auto it = left.find({i, e.k});
            if (it == left.end()) continue;
            for (const auto& [tgt, coef] : it->second)
              acc[{i, e.i, e.j, tgt}] -= e.c * coef;
          }
        }
        for (const auto& [key, val] : acc)
          if (!is_zero(val)) rep.associative = false;
      }
  return rep;
}

DGAlgebra end_algebra_of_complex(const std::vector<MatQ>& differentials,
                                 const std::vector<int>& cdims) {
  const int len = static_cast<int>(cdims.size());  // components C^0..C^{len-1}
  if (len < 1 || len > 4) throw std::invalid_argument("complex length must be 1..4");
  if (static_cast<int>(differentials.size()) != len - 1)
    throw std::invalid_argument("need one differential per adjacent pair");
  for (int i = 0; i + 1 < len; ++i)
    if (differentials[i].rows() != cdims[i + 1] ||
        differentials[i].cols() != cdims[i])
      throw std::invalid_argument("differential shape mismatch");
  for (int i = 0; i + 2 < len; ++i) {
    MatQ comp = differentials[i + 1] * differentials[i];
    if (comp != matq_zero(cdims[i + 2], cdims[i]))
      throw std::invalid_argument("complex differentials do not compose to zero");
  }

  DGAlgebra g;
  // block offsets: degree k holds Hom(C^j, C^{j+k}) for j = 0..len-1-k
  auto block_offset = [&](int k, int j) {
    int off = 0;
    for (int jj = 0; jj < j; ++jj)
      if (jj + k < len) off += cdims[jj + k] * cdims[jj];
    return off;
  };
  auto index_of = [&](int k, int j, int p, int q) {
    // entry (p, q) of Hom(C^j, C^{j+k}), p < cdims[j+k], q < cdims[j]
    return block_offset(k, j) + p * cdims[j] + q;
  };
  for (int k = 0; k <= 3; ++k) {
    int total = 0;
    for (int j = 0; j + k < len; ++j) total += cdims[j + k] * cdims[j];
    g.dims[k] = total;
  }

  // composition: f in Hom(C^{j+b}, C^{j+b+a}), h in Hom(C^j, C^{j+b})
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int j = 0; j + a + b < len; ++j)
        for (int p = 0; p < cdims[j + a + b]; ++p)
          for (int q = 0; q < cdims[j + b]; ++q)
            for (int s = 0; s < cdims[j]; ++s)
              g.product[a][b].push_back(
                  {index_of(a, j + b, p, q), index_of(b, j, q, s),
                   index_of(a + b, j, p, s), Rational(1)});

  // d(f) = d_C f - (-1)^{|f|} f d_C
  for (int k = 0; k <= 2; ++k) {
    g.diff[k] = matq_zero(g.dims[k + 1], g.dims[k]);
    for (int j = 0; j + k < len; ++j)
      for (int p = 0; p < cdims[j + k]; ++p)
        for (int q = 0; q < cdims[j]; ++q) {
          int src = index_of(k, j, p, q);
          if (j + k + 1 < len) {
            const MatQ& d = differentials[j + k];
            for (int r = 0; r < cdims[j + k + 1]; ++r)
              if (!is_zero(d(r, p)))
                g.diff[k](index_of(k + 1, j, r, q), src) += d(r, p);
          }
          if (j - 1 >= 0) {
            const MatQ& d = differentials[j - 1];
            Rational sign = k % 2 ? Rational(1) : Rational(-1);
            for (int r = 0; r < cdims[j - 1]; ++r)
              if (!is_zero(d(q, r)))
                g.diff[k](index_of(k + 1, j - 1, p, r), src) += sign * d(q, r);
          }
        }
  }
  return g;
}

DGAlgebra tensor_glr(const DGAlgebra& h, int r) {
  if (r < 1) throw std::invalid_argument("tensor_glr: r must be positive");
  DGAlgebra g;
  for (int k = 0; k <= 3; ++k) g.dims[k] = r * r * h.dims[k];
  auto idx = [&](int k, int p, int q, int i) {
    return (p * r + q) * h.dims[k] + i;
  };
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (const auto& e : h.product[a][b])
        for (int p = 0; p < r; ++p)
          for (int q = 0; q < r; ++q)
            for (int q2 = 0; q2 < r; ++q2)
              g.product[a][b].push_back({idx(a, p, q, e.i), idx(b, q, q2, e.j),
                                         idx(a + b, p, q2, e.k), e.c});
  for (int k = 0; k <= 2; ++k) {
    g.diff[k] = matq_zero(g.dims[k + 1], g.dims[k]);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        for (int col = 0; col < h.dims[k]; ++col)
          for (int row = 0; row < h.dims[k + 1]; ++row)
            if (h.dims[k + 1] > 0 && !is_zero(h.diff[k](row, col)))
              g.diff[k](idx(k + 1, p, q, row), idx(k, p, q, col)) =
                  h.diff[k](row, col);
  }
  return g;
}

namespace {

// columns of `cands` that extend the column span of `base`
MatQ extend_basis(const MatQ& base, const MatQ& cands) {
  MatQ cur = base;
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index c = 0; c < cands.cols(); ++c) {
    MatQ trial(cands.rows(), cur.cols() + 1);
    trial << cur, cands.col(c);
    if (rank_of(trial) > rank_of(cur)) {
      cur = trial;
      chosen.push_back(c);
    }
  }
  MatQ out(cands.rows(), static_cast<Eigen::Index>(chosen.size()));
  for (size_t k = 0; k < chosen.size(); ++k) out.col(k) = cands.col(chosen[k]);
  return out;
}

MatQ column_space_basis(const MatQ& m) {
  MatQ r = m;
  std::vector<int> pivots;
  rref_in_place(r, &pivots);
  MatQ out(m.rows(), static_cast<Eigen::Index>(pivots.size()));
  for (size_t k = 0; k < pivots.size(); ++k) out.col(k) = m.col(pivots[k]);
  return out;
}

}  // namespace

Cohomology cohomology(const DGAlgebra& g) {
  for (int k = 0; k + 2 <= 3; ++k) {
    if (g.dims[k] == 0 || g.dims[k + 2] == 0) continue;
    MatQ comp = g.diff[k + 1] * g.diff[k];
    if (comp != matq_zero(g.dims[k + 2], g.dims[k]))
      throw std::invalid_argument("d^2 != 0");
  }
  Cohomology coh;
  for (int k = 0; k <= 3; ++k) {
    const int n = g.dims[k];
    // cocycles
    if (k < 3 && g.dims[k + 1] > 0 && n > 0) {
      coh.cocycles[k] = kernel_basis(g.diff[k]);
    } else {
      coh.cocycles[k] = matq_identity(n);
    }
    // boundaries
    if (k > 0 && g.dims[k - 1] > 0 && n > 0) {
      coh.boundaries[k] = column_space_basis(g.diff[k - 1]);
    } else {
      coh.boundaries[k] = MatQ(n, 0);
    }
    coh.h_reps[k] = extend_basis(coh.boundaries[k], coh.cocycles[k]);
    coh.h_dims[k] = static_cast<int>(coh.h_reps[k].cols());
    // t: preimages of the boundary basis, free coordinates zero
    if (coh.boundaries[k].cols() > 0) {
      auto pre = solve_linear(g.diff[k - 1], coh.boundaries[k]);
      if (!pre) throw std::logic_error("boundary basis has no preimage");
      coh.t_pre[k] = *pre;
    } else {
      coh.t_pre[k] = MatQ(g.dim(k - 1), 0);
    }
  }
  return coh;
}

Cohomology tensor_splittings(const DGAlgebra& h, const Cohomology& ch, int r) {
  Cohomology coh;
  for (int k = 0; k <= 3; ++k) {
    auto lift = [&](const MatQ& m, int rows_k) {
      MatQ out = matq_zero(static_cast<Eigen::Index>(r) * r * rows_k,
                           static_cast<Eigen::Index>(r) * r * m.cols());
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) {
          int blk = p * r + q;
          for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index rr = 0; rr < m.rows(); ++rr)
              out(blk * rows_k + rr, blk * m.cols() + c) = m(rr, c);
        }
      return out;
    };
    coh.cocycles[k] = lift(ch.cocycles[k], h.dims[k]);
    coh.boundaries[k] = lift(ch.boundaries[k], h.dims[k]);
    coh.h_reps[k] = lift(ch.h_reps[k], h.dims[k]);
    coh.t_pre[k] = lift(ch.t_pre[k], h.dim(k - 1));
    coh.h_dims[k] = r * r * ch.h_dims[k];
  }
  return coh;
}

VecQ h_class(const DGAlgebra& g, const Cohomology& coh, int k, const VecQ& v) {
  VecQ dv = g.apply_d(k, v);
  for (Eigen::Index i = 0; i < dv.size(); ++i)
    if (!is_zero(dv(i))) throw std::invalid_argument("h_class: not a cocycle");
  const MatQ& b = coh.boundaries[k];
  const MatQ& s = coh.h_reps[k];
  MatQ combined(v.size(), b.cols() + s.cols());
  if (combined.cols() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i)))
        throw std::logic_error("nonzero cocycle with empty Z decomposition");
    return vecq_zero(0);
  }
  combined << b, s;
  auto sol = solve_linear(combined, v);
  if (!sol) throw std::logic_error("cocycle outside Z decomposition");
  VecQ h = vecq_zero(s.cols());
  for (Eigen::Index i = 0; i < s.cols(); ++i) h(i) = (*sol)(b.cols() + i);
  return h;
}

VecQ s_of(const Cohomology& coh, int k, const VecQ& h) {
  if (coh.h_reps[k].cols() == 0)
    return vecq_zero(coh.h_reps[k].rows());
  return coh.h_reps[k] * h;
}

VecQ t_of(const Cohomology& coh, int k, const VecQ& b) {
  if (coh.boundaries[k].cols() == 0) {
    for (Eigen::Index i = 0; i < b.size(); ++i)
      if (!is_zero(b(i))) throw std::invalid_argument("t_of: not a boundary");
    return vecq_zero(coh.t_pre[k].rows());
  }
  auto u = solve_linear(coh.boundaries[k], b);
  if (!u) throw std::invalid_argument("t_of: not a boundary");
  return coh.t_pre[k] * *u;
}

DGAlgebra model_abelian() {
  DGAlgebra g;
  g.dims = {0, 2, 1, 0};
  g.diff[0] = MatQ(2, 0);
  g.diff[1] = matq_zero(1, 2);
  g.diff[2] = MatQ(0, 1);
  return g;
}

DGAlgebra model_cup() {
  // zero differentials: End of C^0 = Q, C^1 = Q^2, C^2 = Q
  std::vector<int> dims = {1, 2, 1};
  std::vector<MatQ> diffs = {matq_zero(2, 1), matq_zero(1, 2)};
  return end_algebra_of_complex(diffs, dims);
}

DGAlgebra model_unobstructed() {
  // C^0 = Q^3 -> C^1 = Q^4 -> C^2 = Q: H^0 = 2, H^1 = 2, H^2 = 0,
  // so the endomorphism algebra has H^1 of dimension 4 and H^2 = 0.
  MatQ d0 = matq_zero(4, 3);
  VecQ u = vecq_zero(4);
  u(0) = 1;
  u(1) = 2;
  u(3) = 1;
  VecQ w = vecq_zero(3);
  w(0) = 1;
  w(1) = 1;
  w(2) = 2;
  d0 = u * w.transpose();
  MatQ d1 = matq_zero(1, 4);
  d1(0, 0) = 2;
  d1(0, 1) = -1;
  d1(0, 2) = 3;  // d1 u = 0
  return end_algebra_of_complex({d0, d1}, {3, 4, 1});
}

DGAlgebra model_obstructed() {
  // C^0 = Q^2 -> C^1 = Q^4 -> C^2 = Q^2 with one-dimensional ranks:
  // H(End) has dimensions (1, 4, 1) in degrees 0..2 over the cohomology
  // of the complex (1, 2, 1).
  VecQ uu = vecq_zero(4);
  uu(0) = 1;
  uu(1) = 1;
  VecQ ww = vecq_zero(2);
  ww(0) = 1;
  ww(1) = 2;
  MatQ d0 = uu * ww.transpose();
  VecQ v = vecq_zero(2);
  v(0) = 1;
  v(1) = 3;
  VecQ z = vecq_zero(4);
  z(0) = 1;
  z(1) = -1;
  z(2) = 1;
  z(3) = 2;  // z . uu = 0
  MatQ d1 = v * z.transpose();
  return end_algebra_of_complex({d0, d1}, {2, 4, 2});
}

std::string dgalgebra_to_json(const DGAlgebra& g) {
  nlohmann::ordered_json j;
  j["dims"] = g.dims;
  auto diffs = nlohmann::ordered_json::array();
  for (int k = 0; k <= 2; ++k) {
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < g.diff[k].rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < g.diff[k].cols(); ++c)
        row.push_back(to_string(g.diff[k](r, c)));
      rows.push_back(row);
    }
    diffs.push_back(rows);
  }
  j["differentials"] = diffs;
  auto prods = nlohmann::ordered_json::array();
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (const auto& e : g.product[a][b])
        prods.push_back(nlohmann::ordered_json::array(
            {a, b, e.i, e.j, e.k, to_string(e.c)}));
  j["products"] = prods;
  return j.dump(2);
}

DGAlgebra dgalgebra_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  DGAlgebra g;
  auto dims = j.at("dims");
  if (dims.size() != 4) throw std::invalid_argument("model needs 4 graded dims");
  for (int k = 0; k <= 3; ++k) g.dims[k] = dims.at(k).get<int>();
  auto diffs = j.at("differentials");
  for (int k = 0; k <= 2; ++k) {
    g.diff[k] = matq_zero(g.dims[k + 1], g.dims[k]);
    auto rows = diffs.at(k);
    if (static_cast<int>(rows.size()) != g.dims[k + 1])
      throw std::invalid_argument("differential row count mismatch");
    for (int r = 0; r < g.dims[k + 1]; ++r) {
      auto row = rows.at(r);
      if (static_cast<int>(row.size()) != g.dims[k])
        throw std::invalid_argument("differential column count mismatch");
      for (int c = 0; c < g.dims[k]; ++c)
        g.diff[k](r, c) = parse_rational(row.at(c).get<std::string>());
    }
  }
  for (const auto& e : j.at("products")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a + b > 3)
      throw std::invalid_argument("product entry out of degree range");
    DGAlgebra::ProductEntry pe{e.at(2).get<int>(), e.at(3).get<int>(),
                               e.at(4).get<int>(),
                               parse_rational(e.at(5).get<std::string>())};
    if (pe.i >= g.dims[a] || pe.j >= g.dims[b] || pe.k >= g.dims[a + b])
      throw std::invalid_argument("product entry index out of range");
    g.product[a][b].push_back(pe);
  }
  auto ax = verify_axioms(g);
  if (!ax.ok())
    throw std::invalid_argument(
        "model violates the DG algebra axioms (d^2, Leibniz, associativity)");
  return g;
}

}  // namespace ogradlab
