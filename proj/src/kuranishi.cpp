#include "ogradlab/kuranishi.hpp"

#include "ogradlab/model.hpp"

namespace ogradlab {

namespace {

RingPtr coordinate_ring(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  return make_ring(names);
}

PolyVec zero_vec(const RingPtr& ring, int n) {
  return PolyVec(n, Polynomial(ring));
}

bool vec_is_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec add(const PolyVec& a, const PolyVec& b) {
  PolyVec out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// graded product through the structure constants
PolyVec mul_polyvec(const DGAlgebra& g, int da, const PolyVec& a, int db,
                    const PolyVec& b, const RingPtr& ring) {
  PolyVec out = zero_vec(ring, g.dim(da + db));
  for (const auto& e : g.product[da][db]) {
    if (a[e.i].is_zero() || b[e.j].is_zero()) continue;
    out[e.k] += (a[e.i] * b[e.j]).scaled(e.c);
  }
  return out;
}

PolyVec apply_d(const DGAlgebra& g, int k, const PolyVec& v, const RingPtr& ring) {
  PolyVec out = zero_vec(ring, g.dim(k + 1));
  if (k >= 3 || g.dims[k + 1] == 0) return out;
  for (int r = 0; r < g.dims[k + 1]; ++r)
    for (int c = 0; c < g.dims[k]; ++c)
      if (!is_zero(g.diff[k](r, c)) && !v[c].is_zero())
        out[r] += v[c].scaled(g.diff[k](r, c));
  return out;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(ring->nvars());
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (left == 0) {
      out.push_back(m);
      return;
    }
    for (int v = var; v < ring->nvars(); ++v) {
      m.e[v] += 1;
      m.deg += 1;
      rec(v, left - 1);
      m.e[v] -= 1;
      m.deg -= 1;
    }
  };
  rec(0, d);
  return out;
}

// span of the degree-n piece of a*m, expressed in the monomial list; returns
// a row-reduced matrix (rows indexed by the monomial list).
struct GradedIdealPiece {
  std::vector<Monomial> monomials;
  MatQ reduced;               // rref'd spanning set, rows = monomial index
  std::vector<int> pivot_rows;

  bool contains(const Polynomial& p) const;
  Polynomial reduce(const Polynomial& p) const;
};

bool GradedIdealPiece::contains(const Polynomial& p) const {
  return reduce(p).is_zero();
}

Polynomial GradedIdealPiece::reduce(const Polynomial& p) const {
  if (p.is_zero() || reduced.cols() == 0) return p;
  VecQ v = coefficient_vector(p, monomials);
  for (Eigen::Index c = 0; c < reduced.cols(); ++c) {
    int row = pivot_rows[c];
    if (is_zero(v(row))) continue;
    Rational f = v(row);
    v -= f * reduced.col(c);
  }
  std::vector<Term> terms;
  for (size_t i = 0; i < monomials.size(); ++i)
    if (!is_zero(v(static_cast<Eigen::Index>(i))))
      terms.push_back({monomials[i], v(static_cast<Eigen::Index>(i))});
  return Polynomial(p.ring(), std::move(terms));
}

GradedIdealPiece ideal_piece(const RingPtr& ring,
                             const std::vector<PolyVec>& f, int n) {
  GradedIdealPiece piece;
  piece.monomials = monomials_of_degree(ring, n);
  std::vector<VecQ> span;
  for (size_t k = 2; k < f.size() && static_cast<int>(k) < n; ++k) {
    for (const auto& comp : f[k]) {
      if (comp.is_zero()) continue;
      for (const auto& m : monomials_of_degree(ring, n - static_cast<int>(k))) {
        Polynomial prod = comp * Polynomial::monomial(ring, m, Rational(1));
        span.push_back(coefficient_vector(prod, piece.monomials));
      }
    }
  }
  // column-wise Gauss: keep an rref'd independent subset
  piece.reduced = MatQ(static_cast<Eigen::Index>(piece.monomials.size()), 0);
  for (auto& v : span) {
    // reduce against current columns
    for (Eigen::Index c = 0; c < piece.reduced.cols(); ++c) {
      int row = piece.pivot_rows[c];
      if (!is_zero(v(row))) v -= v(row) * piece.reduced.col(c);
    }
    int pivot = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) continue;
    v /= v(pivot);
    // back-substitute into existing columns
    for (Eigen::Index c = 0; c < piece.reduced.cols(); ++c) {
      if (!is_zero(piece.reduced(pivot, c))) {
        piece.reduced.col(c) -= piece.reduced(pivot, c) * v;
      }
    }
    MatQ wider(piece.reduced.rows(), piece.reduced.cols() + 1);
    wider << piece.reduced, v;
    piece.reduced = wider;
    piece.pivot_rows.push_back(pivot);
  }
  return piece;
}

}  // namespace

KuranishiOutput kuranishi_recursion(const DGAlgebra& g, const Cohomology& coh,
                                    int N) {
  if (N < 2) throw std::invalid_argument("kuranishi_recursion: need N >= 2");
  const int m = coh.h_dims[1];
  KuranishiOutput out;
  out.ring = coordinate_ring(m);
  out.truncation = N;
  out.gamma.assign(N + 1, PolyVec());
  out.f.assign(N + 1, PolyVec());

  // tautological cocycle: gamma_1(e) = s(e)
  out.gamma[1] = zero_vec(out.ring, g.dims[1]);
  for (int i = 0; i < m; ++i) {
    VecQ si = s_of(coh, 1, [&] {
      VecQ h = vecq_zero(m);
      h(i) = 1;
      return h;
    }());
    for (int r = 0; r < g.dims[1]; ++r)
      if (!is_zero(si(r)))
        out.gamma[1][r] += Polynomial::variable(out.ring, i).scaled(si(r));
  }
  for (int n = 2; n <= N; ++n) out.f[n] = zero_vec(out.ring, coh.h_dims[2]);

  for (int n = 2; n <= N; ++n) {
    // degree-n part of (d + gamma)^2 - s(f): only the products contribute
    PolyVec xn = zero_vec(out.ring, g.dims[2]);
    for (int i = 1; i < n; ++i)
      xn = add(xn, mul_polyvec(g, 1, out.gamma[i], 1, out.gamma[n - i], out.ring));

    // reduce coefficients modulo the degree-n piece of a*m
    GradedIdealPiece piece = ideal_piece(out.ring, out.f, n);
    PolyVec z(g.dims[2], Polynomial(out.ring));
    for (int r = 0; r < g.dims[2]; ++r) z[r] = piece.reduce(xn[r]);

    // z must be an exact cocycle; otherwise a splitting is broken
    PolyVec dz = apply_d(g, 2, z, out.ring);
    if (!vec_is_zero(dz))
      throw std::logic_error(
          "kuranishi_recursion: residual class is not a cocycle (splitting "
          "inconsistency)");

    // decompose every monomial coefficient of z as boundary + s(H)
    std::vector<Monomial> support;
    for (const auto& p : z)
      for (const auto& t : p.terms()) {
        bool seen = false;
        for (const auto& mm : support)
          if (mm == t.m) {
            seen = true;
            break;
          }
        if (!seen) support.push_back(t.m);
      }
    PolyVec fn = zero_vec(out.ring, coh.h_dims[2]);
    PolyVec gamma_n = zero_vec(out.ring, g.dims[1]);
    for (const auto& mono : support) {
      VecQ v = vecq_zero(g.dims[2]);
      for (int r = 0; r < g.dims[2]; ++r)
        for (const auto& t : z[r].terms())
          if (t.m == mono) v(r) = t.c;
      VecQ hc = h_class(g, coh, 2, v);
      for (int r = 0; r < coh.h_dims[2]; ++r)
        if (!is_zero(hc(r)))
          fn[r] += Polynomial::monomial(out.ring, mono, hc(r));
      VecQ boundary_part = s_of(coh, 2, hc) - v;  // s(f_n) - z, a boundary
      VecQ pre = t_of(coh, 2, boundary_part);
      for (int r = 0; r < g.dims[1]; ++r)
        if (!is_zero(pre(r)))
          gamma_n[r] += Polynomial::monomial(out.ring, mono, pre(r));
    }
    out.f[n] = fn;
    out.gamma[n] = gamma_n;
  }
  return out;
}

PolyVec gamma_total(const KuranishiOutput& out, int dim_g1) {
  PolyVec total = zero_vec(out.ring, dim_g1);
  for (size_t n = 1; n < out.gamma.size(); ++n)
    if (!out.gamma[n].empty()) total = add(total, out.gamma[n]);
  return total;
}

std::vector<PolyVec> mc_defect(const DGAlgebra& g, const Cohomology& coh,
                               const KuranishiOutput& out) {
  const int N = out.truncation;
  std::vector<PolyVec> defect(N + 1);
  for (int n = 2; n <= N; ++n) {
    PolyVec dn = apply_d(g, 1, out.gamma[n], out.ring);
    for (int i = 1; i < n; ++i)
      dn = add(dn, mul_polyvec(g, 1, out.gamma[i], 1, out.gamma[n - i], out.ring));
    if (coh.h_dims[2] > 0) {
      PolyVec sf = zero_vec(out.ring, g.dims[2]);
      for (int r = 0; r < coh.h_dims[2]; ++r) {
        if (out.f[n][r].is_zero()) continue;
        for (int rr = 0; rr < g.dims[2]; ++rr)
          if (!is_zero(coh.h_reps[2](rr, r)))
            sf[rr] += out.f[n][r].scaled(coh.h_reps[2](rr, r));
      }
      for (int rr = 0; rr < g.dims[2]; ++rr) dn[rr] -= sf[rr];
    }
    defect[n] = dn;
  }
  return defect;
}

DefectReport verify_mc_defect(const DGAlgebra& g, const Cohomology& coh,
                              const KuranishiOutput& out) {
  DefectReport rep;
  rep.contained = true;
  auto defect = mc_defect(g, coh, out);
  bool f_zero = true;
  for (const auto& fn : out.f)
    if (!fn.empty() && !vec_is_zero(fn)) f_zero = false;
  bool all_exact_zero = true;
  for (int n = 2; n <= out.truncation; ++n) {
    if (defect[n].empty()) continue;
    if (!vec_is_zero(defect[n])) all_exact_zero = false;
    GradedIdealPiece piece = ideal_piece(out.ring, out.f, n);
    for (const auto& comp : defect[n])
      if (!piece.contains(comp)) {
        rep.contained = false;
        if (rep.first_failure < 0) rep.first_failure = n;
      }
  }
  rep.exact_when_unobstructed = !f_zero || all_exact_zero;
  return rep;
}

bool f2_is_cup_product(const DGAlgebra& g, const Cohomology& coh,
                       const KuranishiOutput& out) {
  const int m = coh.h_dims[1];
  if (coh.h_dims[2] == 0) return vec_is_zero(out.f[2]) || out.f[2].empty();
  PolyVec expected = zero_vec(out.ring, coh.h_dims[2]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      VecQ ei = vecq_zero(m), ej = vecq_zero(m);
      ei(i) = 1;
      ej(j) = 1;
      VecQ prod = g.mul(1, s_of(coh, 1, ei), 1, s_of(coh, 1, ej));
      VecQ cls = h_class(g, coh, 2, prod);
      Monomial mono = Monomial::one(m);
      mono.e[i] += 1;
      mono.e[j] += 1;
      mono.deg = 2;
      for (int r = 0; r < coh.h_dims[2]; ++r)
        if (!is_zero(cls(r)))
          expected[r] += Polynomial::monomial(out.ring, mono, cls(r));
    }
  for (int r = 0; r < coh.h_dims[2]; ++r)
    if (!(expected[r] == out.f[2][r])) return false;
  return true;
}

DiagonalVanishingReport verify_diagonal_vanishing(const DGAlgebra& h, int r,
                                                  int N) {
  DiagonalVanishingReport rep;
  Cohomology ch = cohomology(h);
  rep.h2_vanishes = ch.h_dims[2] == 0;
  if (!rep.h2_vanishes)
    throw std::invalid_argument(
        "verify_diagonal_vanishing: the factor must have H^2 = 0");

  DGAlgebra g = tensor_glr(h, r);
  Cohomology cg = tensor_splittings(h, ch, r);
  KuranishiOutput big = kuranishi_recursion(g, cg, N);
  KuranishiOutput base = kuranishi_recursion(h, ch, N);

  const int mh = ch.h_dims[1];
  const int mg = cg.h_dims[1];

  // kill off-diagonal coordinates: u_{(p,q),i} -> 0 for p != q
  std::vector<Polynomial> restrict_imgs;
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int i = 0; i < mh; ++i)
        restrict_imgs.push_back(p == q
                                    ? Polynomial::variable(big.ring, (p * r + q) * mh + i)
                                    : Polynomial(big.ring));

  rep.f_vanishes_on_diagonal = true;
  for (int n = 2; n <= N; ++n)
    for (const auto& comp : big.f[n])
      if (!substitute(comp, restrict_imgs).is_zero())
        rep.f_vanishes_on_diagonal = false;

  // block structure of the restricted gamma
  rep.gamma_is_block_diagonal = true;
  rep.blocks_match_base_run = true;
  for (int n = 1; n <= N; ++n) {
    PolyVec restricted(big.gamma[n].size(), Polynomial(big.ring));
    for (size_t k = 0; k < big.gamma[n].size(); ++k)
      restricted[k] = substitute(big.gamma[n][k], restrict_imgs);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        for (int i = 0; i < h.dims[1]; ++i) {
          const Polynomial& coord = restricted[(p * r + q) * h.dims[1] + i];
          if (p != q) {
            if (!coord.is_zero()) rep.gamma_is_block_diagonal = false;
            continue;
          }
          // block (p, p): must equal the base-run gamma in the block's vars
          std::vector<int> var_map(mh);
          for (int v = 0; v < mh; ++v) var_map[v] = (p * r + p) * mh + v;
          Polynomial expect = map_into(base.gamma[n][i], big.ring, var_map);
          if (!(coord == expect)) rep.blocks_match_base_run = false;
        }
  }

  // the base gamma solves Maurer-Cartan exactly through degree N
  {
    auto defect = mc_defect(h, ch, base);
    rep.base_solves_mc = true;
    for (int n = 2; n <= N; ++n)
      if (!defect[n].empty() && !vec_is_zero(defect[n]))
        rep.base_solves_mc = false;
  }

  // swapping two diagonal blocks fixes the restricted gamma
  if (r >= 2) {
    std::vector<Polynomial> swap_imgs;
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q)
        for (int i = 0; i < mh; ++i) {
          int sp = p == 0 ? 1 : (p == 1 ? 0 : p);
          int sq = q == 0 ? 1 : (q == 1 ? 0 : q);
          swap_imgs.push_back(
              Polynomial::variable(big.ring, (sp * r + sq) * mh + i));
        }
    rep.swap_equivariant = true;
    for (int n = 1; n <= N; ++n) {
      PolyVec restricted(big.gamma[n].size(), Polynomial(big.ring));
      for (size_t k = 0; k < big.gamma[n].size(); ++k)
        restricted[k] = substitute(big.gamma[n][k], restrict_imgs);
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q)
          for (int i = 0; i < h.dims[1]; ++i) {
            int sp = p == 0 ? 1 : (p == 1 ? 0 : p);
            int sq = q == 0 ? 1 : (q == 1 ? 0 : q);
            const Polynomial& lhs = restricted[(p * r + q) * h.dims[1] + i];
            Polynomial rhs =
                substitute(restricted[(sp * r + sq) * h.dims[1] + i], swap_imgs);
            if (!(lhs == rhs)) rep.swap_equivariant = false;
          }
    }
  } else {
    rep.swap_equivariant = true;
  }
  (void)mg;
  return rep;
}

}  // namespace ogradlab
