#include "ogradlab/modulegb.hpp"

#include <algorithm>
#include <functional>

namespace ogradlab {

VecPoly::VecPoly(RingPtr r, int rank) : ring(std::move(r)) {
  comps.assign(rank, Polynomial(ring));
}

bool VecPoly::is_zero() const {
  for (const auto& p : comps)
    if (!p.is_zero()) return false;
  return true;
}

VecPoly column_of(const PolyMatrix& m, int c) {
  VecPoly v(m.ring(), m.rows());
  for (int r = 0; r < m.rows(); ++r) v.comps[r] = m.at(r, c);
  return v;
}

PolyMatrix columns_to_matrix(const RingPtr& ring, int rank,
                             const std::vector<VecPoly>& cols) {
  PolyMatrix m(ring, rank, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rank; ++r) m.at(r, static_cast<int>(c)) = cols[c].comps[r];
  return m;
}

namespace {

struct ModOrder {
  TermOrder ring_order;
  int elim_split = -1;  // components < split dominate; -1 means plain TOP

  // compare module terms (c1, m1) vs (c2, m2)
  int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
    if (elim_split >= 0) {
      int cl1 = c1 < elim_split ? 0 : 1;
      int cl2 = c2 < elim_split ? 0 : 1;
      if (cl1 != cl2) return cl1 < cl2 ? 1 : -1;
    }
    int c = mono_cmp(ring_order, m1, m2);
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
  }
};

struct ModTerm {
  int comp;
  Monomial m;
  Rational c;
};

ModTerm leading_mod_term(const VecPoly& v, const ModOrder& ord) {
  int best = -1;
  for (size_t i = 0; i < v.comps.size(); ++i) {
    if (v.comps[i].is_zero()) continue;
    if (best < 0 ||
        ord.cmp(static_cast<int>(i), v.comps[i].leading_monomial(), best,
                v.comps[best].leading_monomial()) > 0)
      best = static_cast<int>(i);
  }
  if (best < 0) throw std::domain_error("leading term of zero module element");
  return {best, v.comps[best].leading_monomial(), v.comps[best].leading_coeff()};
}

VecPoly scaled(const VecPoly& v, const Rational& c) {
  VecPoly r = v;
  for (auto& p : r.comps) p = p.scaled(c);
  return r;
}

// v - c * mono * g
VecPoly reduce_step(const VecPoly& v, const Rational& c, const Monomial& mono,
                    const VecPoly& g) {
  VecPoly r = v;
  for (size_t i = 0; i < r.comps.size(); ++i)
    if (!g.comps[i].is_zero()) r.comps[i] = r.comps[i].reduce_step(c, mono, g.comps[i]);
  return r;
}

VecPoly reduce_full(const VecPoly& v, const std::vector<VecPoly>& basis,
                    const ModOrder& ord, const std::vector<char>& alive) {
  VecPoly work = v;
  VecPoly rem(v.ring, static_cast<int>(v.comps.size()));
  while (!work.is_zero()) {
    ModTerm t = leading_mod_term(work, ord);
    int reducer = -1;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!alive.empty() && !alive[k]) continue;
      ModTerm lt = leading_mod_term(basis[k], ord);
      if (lt.comp == t.comp && mono_divides(lt.m, t.m)) {
        reducer = static_cast<int>(k);
        break;
      }
    }
    if (reducer < 0) {
      rem.comps[t.comp] += Polynomial::monomial(v.ring, t.m, t.c);
      work.comps[t.comp] -= Polynomial::monomial(v.ring, t.m, t.c);
      continue;
    }
    ModTerm lt = leading_mod_term(basis[reducer], ord);
    work = reduce_step(work, t.c / lt.c, mono_div(t.m, lt.m), basis[reducer]);
  }
  return rem;
}

std::vector<VecPoly> module_gb_engine(const RingPtr& ring, int rank,
                                      const std::vector<VecPoly>& gens,
                                      const ModOrder& ord) {
  std::vector<VecPoly> g;
  std::vector<char> none;
  auto append = [&](const VecPoly& cand) {
    VecPoly red = reduce_full(cand, g, ord, none);
    if (red.is_zero()) return false;
    ModTerm lt = leading_mod_term(red, ord);
    g.push_back(scaled(red, Rational(1) / lt.c));
    return true;
  };

  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](int t) {
    ModTerm lt_t = leading_mod_term(g[t], ord);
    for (int i = 0; i < t; ++i) {
      ModTerm lt_i = leading_mod_term(g[i], ord);
      if (lt_i.comp != lt_t.comp) continue;
      pairs.push_back({i, t, mono_lcm(lt_i.m, lt_t.m)});
    }
  };

  for (const auto& v : gens) {
    require_same_ring(ring, v.ring);
    if (static_cast<int>(v.comps.size()) != rank)
      throw std::invalid_argument("module generator rank mismatch");
    if (v.is_zero()) continue;
    if (append(v)) add_pairs_for(static_cast<int>(g.size()) - 1);
  }

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int c = mono_cmp(ord.ring_order, pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j &&
                                pairs[k].i < pairs[best].i))))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    ModTerm li = leading_mod_term(g[pr.i], ord);
    ModTerm lj = leading_mod_term(g[pr.j], ord);
    Monomial l = mono_lcm(li.m, lj.m);
    VecPoly s(ring, rank);
    {
      Monomial si = mono_div(l, li.m), sj = mono_div(l, lj.m);
      for (int c = 0; c < rank; ++c) {
        Polynomial a = Polynomial::monomial(ring, si, Rational(1)) * g[pr.i].comps[c];
        Polynomial b = Polynomial::monomial(ring, sj, Rational(1)) * g[pr.j].comps[c];
        s.comps[c] = a - b;
      }
    }
    if (s.is_zero()) continue;
    if (append(s)) add_pairs_for(static_cast<int>(g.size()) - 1);
  }

  // interreduce
  std::vector<char> alive(g.size(), 1);
  for (size_t a = 0; a < g.size(); ++a) {
    ModTerm la = leading_mod_term(g[a], ord);
    for (size_t b = 0; b < g.size(); ++b) {
      if (a == b || !alive[a] || !alive[b]) continue;
      ModTerm lb = leading_mod_term(g[b], ord);
      if (lb.comp == la.comp && mono_divides(lb.m, la.m)) {
        if (lb.m == la.m && b > a) continue;
        alive[a] = 0;
        break;
      }
    }
  }
  std::vector<VecPoly> minimal;
  for (size_t a = 0; a < g.size(); ++a)
    if (alive[a]) minimal.push_back(g[a]);

  std::vector<VecPoly> reduced;
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<char> mask(minimal.size(), 1);
    mask[a] = 0;
    VecPoly r = reduce_full(minimal[a], minimal, ord, mask);
    if (r.is_zero()) continue;
    ModTerm lt = leading_mod_term(r, ord);
    reduced.push_back(scaled(r, Rational(1) / lt.c));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const VecPoly& x, const VecPoly& y) {
    ModTerm lx = leading_mod_term(x, ord), ly = leading_mod_term(y, ord);
    return ord.cmp(lx.comp, lx.m, ly.comp, ly.m) > 0;
  });
  return reduced;
}

}  // namespace

ModuleGB module_buchberger(const RingPtr& ring, int rank,
                           const std::vector<VecPoly>& gens) {
  ModOrder ord{ring->order(), -1};
  return {ring, rank, module_gb_engine(ring, rank, gens, ord)};
}

VecPoly module_normal_form(const VecPoly& v, const ModuleGB& gb) {
  require_same_ring(v.ring, gb.ring);
  ModOrder ord{gb.ring->order(), -1};
  std::vector<char> none;
  return reduce_full(v, gb.gens, ord, none);
}

bool module_member(const VecPoly& v, const ModuleGB& gb) {
  return module_normal_form(v, gb).is_zero();
}

PolyMatrix syzygy_basis(const PolyMatrix& m) {
  const RingPtr& ring = m.ring();
  const int r = m.rows(), c = m.cols();
  std::vector<VecPoly> ext;
  for (int j = 0; j < c; ++j) {
    VecPoly w(ring, r + c);
    for (int i = 0; i < r; ++i) w.comps[i] = m.at(i, j);
    w.comps[r + j] = Polynomial::constant(ring, 1);
    ext.push_back(std::move(w));
  }
  ModOrder ord{ring->order(), r};
  auto gb = module_gb_engine(ring, r + c, ext, ord);

  std::vector<VecPoly> syz;
  for (const auto& g : gb) {
    bool clear = true;
    for (int i = 0; i < r; ++i)
      if (!g.comps[i].is_zero()) {
        clear = false;
        break;
      }
    if (!clear) continue;
    VecPoly s(ring, c);
    for (int j = 0; j < c; ++j) s.comps[j] = g.comps[r + j];
    syz.push_back(std::move(s));
  }
  PolyMatrix out = columns_to_matrix(ring, c, syz);
  // certify: m * (each syzygy column) == 0
  if (!(m * out).is_zero())
    throw std::logic_error("syzygy_basis: output fails m*S == 0");
  return out;
}

ModulePresentation quotient_presentation(const PolyMatrix& ker_gens,
                                         const PolyMatrix& im_gens) {
  require_same_ring(ker_gens.ring(), im_gens.ring());
  if (ker_gens.rows() != im_gens.rows())
    throw std::invalid_argument("quotient_presentation: ambient rank mismatch");
  const RingPtr& ring = ker_gens.ring();
  const int r = ker_gens.rows(), s = ker_gens.cols(), u = im_gens.cols();

  // containment: every image column must lie in the span of the generators
  {
    std::vector<VecPoly> kcols;
    for (int j = 0; j < s; ++j) kcols.push_back(column_of(ker_gens, j));
    ModuleGB kgb = module_buchberger(ring, r, kcols);
    for (int j = 0; j < u; ++j)
      if (!module_member(column_of(im_gens, j), kgb))
        throw std::invalid_argument(
            "quotient_presentation: image not contained in kernel span "
            "(composition is not zero upstream)");
  }

  PolyMatrix combined(ring, r, s + u);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) combined.at(i, j) = ker_gens.at(i, j);
    for (int j = 0; j < u; ++j) combined.at(i, s + j) = im_gens.at(i, j);
  }
  PolyMatrix syz = syzygy_basis(combined);
  PolyMatrix rel(ring, s, syz.cols());
  for (int j = 0; j < syz.cols(); ++j)
    for (int i = 0; i < s; ++i) rel.at(i, j) = syz.at(i, j);
  // drop zero relation columns for a tidy presentation
  std::vector<VecPoly> cols;
  for (int j = 0; j < rel.cols(); ++j) {
    VecPoly v = column_of(rel, j);
    if (!v.is_zero()) cols.push_back(std::move(v));
  }
  return {ring, r, ker_gens, columns_to_matrix(ring, s, cols)};
}

std::vector<long> submodule_graded_dims(const PolyMatrix& cols, int up_to) {
  const RingPtr& ring = cols.ring();
  const int rank = cols.rows();
  std::vector<VecPoly> cs;
  for (int j = 0; j < cols.cols(); ++j) {
    VecPoly v = column_of(cols, j);
    if (v.is_zero()) continue;
    int deg = -1;
    for (const auto& p : v.comps) {
      if (p.is_zero()) continue;
      if (!is_homogeneous(p)) throw std::invalid_argument("non-homogeneous column");
      if (deg < 0) deg = p.total_degree();
      if (deg != p.total_degree())
        throw std::invalid_argument("column entries of mixed degree");
    }
    cs.push_back(std::move(v));
  }
  ModuleGB gb = module_buchberger(ring, rank, cs);
  ModOrder ord{ring->order(), -1};
  std::vector<std::pair<int, Monomial>> leads;
  for (const auto& g : gb.gens) {
    ModTerm lt = leading_mod_term(g, ord);
    leads.push_back({lt.comp, lt.m});
  }
  // dim (span)_d = #{x^a e_i of degree d divisible by some lead}
  std::vector<long> dims(up_to + 1, 0);
  const int n = ring->nvars();
  Monomial m = Monomial::one(n);
  std::function<void(int, int)> walk = [&](int var, int left) {
    std::vector<char> covered(rank, 0);
    for (const auto& [comp, lead] : leads)
      if (!covered[comp] && mono_divides(lead, m)) covered[comp] = 1;
    long hit = 0;
    for (int i = 0; i < rank; ++i) hit += covered[i];
    dims[m.deg] += hit;
    if (left == 0) return;
    for (int v = var; v < n; ++v) {
      m.e[v] += 1;
      m.deg += 1;
      walk(v, left - 1);
      m.e[v] -= 1;
      m.deg -= 1;
    }
  };
  walk(0, up_to);
  return dims;
}

std::vector<long> subquotient_hilbert(const ModulePresentation& pres, int up_to) {
  // span(generators)/span(image); the image is recovered as generators*relations
  std::vector<long> k = submodule_graded_dims(pres.generators, up_to);
  PolyMatrix img = pres.generators * pres.relations;
  std::vector<long> i = submodule_graded_dims(img, up_to);
  std::vector<long> out(up_to + 1);
  for (int d = 0; d <= up_to; ++d) out[d] = k[d] - i[d];
  return out;
}

int minimal_generator_count(const ModulePresentation& pres) {
  const RingPtr& ring = pres.ring;
  const int r = pres.ambient_rank;
  // M/mM = K / (mK + I); compare graded dimensions of K and mK + I
  int maxdeg = 0;
  std::vector<VecPoly> kcols;
  for (int j = 0; j < pres.generators.cols(); ++j) {
    VecPoly v = column_of(pres.generators, j);
    if (v.is_zero()) continue;
    for (const auto& p : v.comps)
      if (!p.is_zero()) maxdeg = std::max(maxdeg, p.total_degree());
    kcols.push_back(std::move(v));
  }
  PolyMatrix img = pres.generators * pres.relations;
  std::vector<VecPoly> dcols;
  for (int j = 0; j < img.cols(); ++j) {
    VecPoly v = column_of(img, j);
    if (!v.is_zero()) dcols.push_back(std::move(v));
  }
  for (const auto& kc : kcols)
    for (int var = 0; var < ring->nvars(); ++var) {
      VecPoly v(ring, r);
      Polynomial x = Polynomial::variable(ring, var);
      for (int i = 0; i < r; ++i) v.comps[i] = x * kc.comps[i];
      dcols.push_back(std::move(v));
    }
  std::vector<long> dk =
      submodule_graded_dims(columns_to_matrix(ring, r, kcols), maxdeg);
  std::vector<long> dd =
      submodule_graded_dims(columns_to_matrix(ring, r, dcols), maxdeg);
  long total = 0;
  for (int d = 0; d <= maxdeg; ++d) total += dk[d] - dd[d];
  return static_cast<int>(total);
}

std::vector<Polynomial> submodule_quotient_ideal(const PolyMatrix& sub,
                                                 const VecPoly& elem) {
  const RingPtr& ring = sub.ring();
  PolyMatrix aug(ring, sub.rows(), 1 + sub.cols());
  for (int i = 0; i < sub.rows(); ++i) {
    aug.at(i, 0) = elem.comps[i];
    for (int j = 0; j < sub.cols(); ++j) aug.at(i, 1 + j) = sub.at(i, j);
  }
  PolyMatrix syz = syzygy_basis(aug);
  std::vector<Polynomial> firsts;
  for (int j = 0; j < syz.cols(); ++j)
    if (!syz.at(0, j).is_zero()) firsts.push_back(syz.at(0, j));
  if (firsts.empty()) return {};
  return buchberger(IdealBasis(ring, firsts)).gens;
}

std::vector<Polynomial> ideal_intersection(const RingPtr& ring,
                                           const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b) {
  PolyMatrix m(ring, 2, 1 + static_cast<int>(a.size() + b.size()));
  m.at(0, 0) = Polynomial::constant(ring, 1);
  m.at(1, 0) = Polynomial::constant(ring, 1);
  for (size_t j = 0; j < a.size(); ++j) m.at(0, 1 + static_cast<int>(j)) = a[j];
  for (size_t j = 0; j < b.size(); ++j)
    m.at(1, 1 + static_cast<int>(a.size() + j)) = b[j];
  PolyMatrix syz = syzygy_basis(m);
  std::vector<Polynomial> firsts;
  for (int j = 0; j < syz.cols(); ++j)
    if (!syz.at(0, j).is_zero()) firsts.push_back(syz.at(0, j));
  if (firsts.empty()) return {};
  return buchberger(IdealBasis(ring, firsts)).gens;
}

IdealBasis annihilator(const ModulePresentation& pres) {
  const RingPtr& ring = pres.ring;
  PolyMatrix img = pres.generators * pres.relations;
  bool have = false;
  std::vector<Polynomial> acc;
  for (int j = 0; j < pres.generators.cols(); ++j) {
    VecPoly g = column_of(pres.generators, j);
    if (g.is_zero()) continue;
    std::vector<Polynomial> q = submodule_quotient_ideal(img, g);
    if (!have) {
      acc = q;
      have = true;
    } else {
      acc = ideal_intersection(ring, acc, q);
    }
  }
  if (!have) return IdealBasis(ring, {Polynomial::constant(ring, 1)});
  return IdealBasis(ring, acc);
}

bool equal_ideals(const IdealBasis& a, const IdealBasis& b) {
  auto ga = buchberger(a);
  auto gb = buchberger(b);
  return contained_in(a, gb) && contained_in(b, ga);
}

}  // namespace ogradlab
