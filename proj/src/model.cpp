#include "ogradlab/model.hpp"

namespace ogradlab {

namespace {

const std::vector<std::string> kSpVars = {"y11", "y12", "y13", "y14", "y22",
                                          "y23", "y24", "y33", "y34", "y44"};

// (i, j) pairs indexing the symmetric coordinates, lexicographic.
const std::vector<std::pair<int, int>> kSymPairs = {
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
    {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

const std::vector<std::pair<int, int>> kAltPairs = {{0, 1}, {0, 2}, {0, 3},
                                                    {1, 2}, {1, 3}, {2, 3}};

PolyMatrix symmetric_matrix(const RingPtr& ring, int first_var) {
  PolyMatrix y(ring, 4, 4);
  for (size_t k = 0; k < kSymPairs.size(); ++k) {
    auto [i, j] = kSymPairs[k];
    Polynomial v = Polynomial::variable(ring, first_var + static_cast<int>(k));
    y.at(i, j) = v;
    y.at(j, i) = v;
  }
  return y;
}

}  // namespace

SymplecticSpace make_symplectic_space() {
  SymplecticSpace sp;
  sp.J = matq_zero(4, 4);
  sp.J(0, 1) = 1;
  sp.J(1, 0) = -1;
  sp.J(2, 3) = 1;
  sp.J(3, 2) = -1;
  sp.J_alt = matq_zero(4, 4);
  sp.J_alt(0, 2) = 1;
  sp.J_alt(1, 3) = 1;
  sp.J_alt(2, 0) = -1;
  sp.J_alt(3, 1) = -1;
  // new basis (e1, e3, e2, e4)
  sp.basis_change = matq_zero(4, 4);
  sp.basis_change(0, 0) = 1;
  sp.basis_change(2, 1) = 1;
  sp.basis_change(1, 2) = 1;
  sp.basis_change(3, 3) = 1;
  MatQ check = sp.basis_change.transpose() * sp.J * sp.basis_change;
  if (check != sp.J_alt)
    throw std::logic_error("convention change-of-basis is inconsistent");
  MatQ j2 = sp.J * sp.J;
  if (j2 != MatQ(-matq_identity(4)))
    throw std::logic_error("J^2 != -Id");
  return sp;
}

GenericSpElement build_generic_B(const SymplecticSpace& sp) {
  RingPtr ring = make_ring(kSpVars);
  GenericSpElement g;
  g.ring = ring;
  g.Y = symmetric_matrix(ring, 0);
  g.B = g.Y * PolyMatrix::from_rational(ring, sp.J);
  // defining constraint J B + B^T J = 0
  PolyMatrix jp = PolyMatrix::from_rational(ring, sp.J);
  if (!(jp * g.B + g.B.transposed() * jp).is_zero())
    throw std::logic_error("generic B violates J B + B^T J = 0");
  return g;
}

std::vector<MatQ> eplus_basis(const SymplecticSpace& sp) {
  std::vector<MatQ> basis;
  for (auto [i, j] : kAltPairs) {
    MatQ a = matq_zero(4, 4);
    a(i, j) = 1;
    a(j, i) = -1;
    basis.push_back(a * sp.J);
  }
  return basis;
}

std::vector<Polynomial> eplus_coordinates(const SymplecticSpace& sp,
                                          const PolyMatrix& m) {
  const RingPtr& ring = m.ring();
  PolyMatrix jp = PolyMatrix::from_rational(ring, sp.J);
  // N = -M J is antisymmetric exactly when M is E_+-valued
  PolyMatrix n = (m * jp).scaled(Polynomial::constant(ring, -1));
  if (!(n + n.transposed()).is_zero())
    throw std::invalid_argument("matrix has a component outside E_+");
  std::vector<Polynomial> coords;
  for (auto [i, j] : kAltPairs) coords.push_back(n.at(i, j));
  // reconstruction certificate
  auto basis = eplus_basis(sp);
  PolyMatrix recon(ring, 4, 4);
  for (size_t k = 0; k < coords.size(); ++k)
    recon = recon + PolyMatrix::from_rational(ring, basis[k]).scaled(coords[k]);
  if (!(recon == m))
    throw std::logic_error("E_+ coordinates fail to reconstruct the matrix");
  return coords;
}

IdealBasis ideal_I0(const SymplecticSpace& sp, const GenericSpElement& g) {
  PolyMatrix b2 = g.B * g.B;
  std::vector<Polynomial> quadrics = eplus_coordinates(sp, b2);
  for (const auto& q : quadrics)
    if (q.is_zero() || !is_homogeneous(q) || q.total_degree() != 2)
      throw std::logic_error("I0 generator is not a nonzero quadric");
  return IdealBasis(g.ring, quadrics);
}

IdealBasis ideal_L0(const GenericSpElement& g) {
  std::vector<Polynomial> kept;
  for (int r0 = 0; r0 < 4; ++r0)
    for (int r1 = r0 + 1; r1 < 4; ++r1)
      for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
          Polynomial m = minor2x2(g.B, r0, r1, c0, c1);
          if (m.is_zero()) continue;
          std::vector<Polynomial> trial = kept;
          trial.push_back(m);
          auto monos = merge_monomial_support(trial);
          MatQ mat = matq_zero(static_cast<Eigen::Index>(monos.size()),
                               static_cast<Eigen::Index>(trial.size()));
          for (size_t c = 0; c < trial.size(); ++c)
            mat.col(static_cast<Eigen::Index>(c)) =
                coefficient_vector(trial[c], monos);
          if (rank_of(mat) == static_cast<int>(trial.size())) kept.push_back(m);
        }
  return IdealBasis(g.ring, kept);
}

Polynomial map_into(const Polynomial& p, const RingPtr& target,
                    const std::vector<int>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(target->nvars());
    for (int i = 0; i < t.m.n; ++i) {
      if (t.m.e[i] == 0) continue;
      m.e[var_map[i]] = static_cast<int16_t>(m.e[var_map[i]] + t.m.e[i]);
      m.deg += t.m.e[i];
    }
    terms.push_back({m, t.c});
  }
  return Polynomial(target, std::move(terms));
}

IdealBasis ideal_I0_extended(const SymplecticSpace& sp, const GenericSpElement& g) {
  std::vector<std::string> names = {"X1", "X2", "X3", "X4"};
  for (const auto& v : kSpVars) names.push_back(v);
  RingPtr ext = make_ring(names);
  std::vector<int> var_map;
  for (int i = 0; i < 10; ++i) var_map.push_back(4 + i);
  std::vector<Polynomial> gens;
  for (const auto& q : ideal_I0(sp, g).gens)
    gens.push_back(map_into(q, ext, var_map));
  return IdealBasis(ext, gens);
}

ChartPoint build_chart() {
  RingPtr ring = make_ring({"S11", "S12", "S22", "x", "y", "z"});
  ChartPoint chart;
  chart.ring = ring;
  PolyMatrix bbar(ring, 2, 2);
  bbar.at(0, 0) = Polynomial::variable(ring, 3);
  bbar.at(0, 1) = Polynomial::variable(ring, 4);
  bbar.at(1, 0) = Polynomial::variable(ring, 4);
  bbar.at(1, 1) = Polynomial::variable(ring, 5);
  chart.Bbar = bbar;
  PolyMatrix s(ring, 2, 2);
  s.at(0, 0) = Polynomial::variable(ring, 0);
  s.at(0, 1) = Polynomial::variable(ring, 1);
  s.at(1, 0) = Polynomial::variable(ring, 1);
  s.at(1, 1) = Polynomial::variable(ring, 2);
  // conjugate [[0, Bbar], [0, 0]] by the shear fixing U_S = graph(S):
  // B = [[-Bbar S, Bbar], [-S Bbar S, S Bbar]]
  PolyMatrix b(ring, 4, 4);
  PolyMatrix bs = bbar * s, sb = s * bbar, sbs = s * bbar * s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b.at(i, j) = Polynomial(ring) - bs.at(i, j);
      b.at(i, 2 + j) = bbar.at(i, j);
      b.at(2 + i, j) = Polynomial(ring) - sbs.at(i, j);
      b.at(2 + i, 2 + j) = sb.at(i, j);
    }
  chart.B = b;
  if (!(chart.B * chart.B).is_zero())
    throw std::logic_error("chart element does not square to zero");
  // annihilates the tautological plane (v, S v)
  PolyMatrix plane(ring, 4, 2);
  plane.at(0, 0) = Polynomial::constant(ring, 1);
  plane.at(1, 1) = Polynomial::constant(ring, 1);
  plane.at(2, 0) = s.at(0, 0);
  plane.at(2, 1) = s.at(0, 1);
  plane.at(3, 0) = s.at(1, 0);
  plane.at(3, 1) = s.at(1, 1);
  if (!(chart.B * plane).is_zero())
    throw std::logic_error("chart element does not kill the chart plane");
  return chart;
}

MatQ chart_point_matrix(const SymplecticSpace& sp, const ChartPoint& chart,
                        const std::vector<Rational>& values) {
  MatQ alt = eval(chart.B, values);
  const MatQ& c = sp.basis_change;
  return c * alt * c.transpose();  // C is a permutation, C^{-1} = C^T
}

IdealBasis grassmannian_ideal(const SymplecticSpace& sp) {
  RingPtr ring = make_ring({"p12", "p13", "p14", "p23", "p24", "p34"});
  auto pvar = [&](int i, int j) {
    for (size_t k = 0; k < kAltPairs.size(); ++k)
      if (kAltPairs[k] == std::make_pair(i, j))
        return Polynomial::variable(ring, static_cast<int>(k));
    throw std::logic_error("bad plucker index");
  };
  Polynomial quadric =
      pvar(0, 1) * pvar(2, 3) - pvar(0, 2) * pvar(1, 3) + pvar(0, 3) * pvar(1, 2);
  Polynomial linear(ring);
  for (size_t k = 0; k < kAltPairs.size(); ++k) {
    auto [i, j] = kAltPairs[k];
    if (!is_zero(sp.J(i, j)))
      linear += Polynomial::variable(ring, static_cast<int>(k)).scaled(sp.J(i, j));
  }
  return IdealBasis(ring, {quadric, linear});
}

VecQ plucker_of_plane(const VecQ& u, const VecQ& v) {
  VecQ p = vecq_zero(6);
  for (size_t k = 0; k < kAltPairs.size(); ++k) {
    auto [i, j] = kAltPairs[k];
    p(static_cast<Eigen::Index>(k)) = u(i) * v(j) - u(j) * v(i);
  }
  return p;
}

int fiber_dimension(const SymplecticSpace& sp, const MatQ& point) {
  MatQ sq = point * point;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      if (!is_zero(sq(i, j)))
        throw std::invalid_argument("fiber_dimension: point is not square-zero");
  IdealBasis grass = grassmannian_ideal(sp);
  const RingPtr& ring = grass.ring;
  std::vector<Polynomial> gens = grass.gens;
  // phi as an antisymmetric matrix of variables
  PolyMatrix phi(ring, 4, 4);
  for (size_t k = 0; k < kAltPairs.size(); ++k) {
    auto [i, j] = kAltPairs[k];
    phi.at(i, j) = Polynomial::variable(ring, static_cast<int>(k));
    phi.at(j, i) = -Polynomial::variable(ring, static_cast<int>(k));
  }
  // U <= ker(B): every row functional of B contracts phi to zero
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 4; ++j) {
      Polynomial form(ring);
      for (int i = 0; i < 4; ++i)
        if (!is_zero(point(r, i))) form += phi.at(i, j).scaled(point(r, i));
      if (!form.is_zero()) gens.push_back(form);
    }
  auto gb = buchberger(IdealBasis(ring, gens));
  int cone = krull_dimension(gb);
  return cone - 1;
}

MatQ rank1_point(const SymplecticSpace& sp, Sampler& sampler) {
  while (true) {
    VecQ v = vecq_zero(4);
    bool nonzero = false;
    for (int i = 0; i < 4; ++i) {
      v(i) = sampler.rational(5, 2);
      if (!is_zero(v(i))) nonzero = true;
    }
    if (!nonzero) continue;
    MatQ b = v * (v.transpose() * sp.J);
    MatQ sq = b * b;
    bool zero = true;
    for (Eigen::Index i = 0; i < 4 && zero; ++i)
      for (Eigen::Index j = 0; j < 4; ++j)
        if (!is_zero(sq(i, j))) {
          zero = false;
          break;
        }
    if (!zero) continue;  // cannot happen: v^T J v = 0 identically
    if (rank_of(b) != 1) continue;
    return b;
  }
}

MatQ rank2_point(const SymplecticSpace& sp) {
  VecQ e1 = vecq_zero(4), e3 = vecq_zero(4);
  e1(0) = 1;
  e3(2) = 1;
  MatQ b = e1 * (e1.transpose() * sp.J) + e3 * (e3.transpose() * sp.J);
  if (rank_of(b) != 2) throw std::logic_error("rank-2 sample has wrong rank");
  return b;
}

BlowupChartResult blowup_chart_check(const ChartPoint& chart) {
  const RingPtr& ring = chart.ring;
  BlowupChartResult res;
  Polynomial exceptional = parse_poly(ring, "x*z - y^2");
  std::vector<Polynomial> minors, quotients;
  res.every_minor_divisible = true;
  res.quotients_free_of_fiber_vars = true;
  for (int r0 = 0; r0 < 4; ++r0)
    for (int r1 = r0 + 1; r1 < 4; ++r1)
      for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
          Polynomial m = minor2x2(chart.B, r0, r1, c0, c1);
          ++res.minor_count;
          if (m.is_zero()) continue;
          minors.push_back(m);
          auto q = divide_exact(m, exceptional);
          if (!q) {
            res.every_minor_divisible = false;
            continue;
          }
          for (const auto& t : q->terms())
            if (t.m.e[3] || t.m.e[4] || t.m.e[5]) {
              res.quotients_free_of_fiber_vars = false;
              break;
            }
          quotients.push_back(*q);
        }
  if (!quotients.empty()) {
    auto gbq = buchberger(IdealBasis(ring, quotients));
    res.quotients_generate_unit = is_unit_ideal(gbq);
  }
  if (!minors.empty() && res.every_minor_divisible) {
    auto gb_minors = buchberger(IdealBasis(ring, minors));
    auto gb_exc = buchberger(IdealBasis(ring, {exceptional}));
    bool fwd = contained_in(IdealBasis(ring, minors), gb_exc);
    bool bwd = normal_form(exceptional, gb_minors).is_zero();
    res.minor_ideal_is_exceptional = fwd && bwd;
  }
  // exceptional locus x = y = z = 0 kills every minor
  std::vector<Polynomial> down = {
      Polynomial::variable(ring, 0), Polynomial::variable(ring, 1),
      Polynomial::variable(ring, 2), Polynomial(ring), Polynomial(ring),
      Polynomial(ring)};
  res.zero_on_exceptional_locus = true;
  for (const auto& m : minors)
    if (!substitute(m, down).is_zero()) res.zero_on_exceptional_locus = false;
  return res;
}

PresentationComplexResult presentation_complex_check(const SymplecticSpace& sp,
                                                     const GenericSpElement& g) {
  PresentationComplexResult res;
  auto quadrics = ideal_I0(sp, g).gens;
  auto basis = eplus_basis(sp);
  res.tautological_relations_compose_to_zero = true;
  for (size_t a = 0; a < quadrics.size(); ++a)
    for (size_t b = a + 1; b < quadrics.size(); ++b) {
      Polynomial comp = quadrics[a] * quadrics[b] - quadrics[b] * quadrics[a];
      ++res.relations_checked;
      if (!comp.is_zero()) res.tautological_relations_compose_to_zero = false;
    }
  res.ad_relations_compose_to_zero = true;
  for (size_t a = 0; a < basis.size(); ++a) {
    // r(lambda_a) has coefficient lambda_a([B, m_c]) on lambda_c
    Polynomial comp(g.ring);
    for (size_t c = 0; c < basis.size(); ++c) {
      PolyMatrix bracket =
          commutator(g.B, PolyMatrix::from_rational(g.ring, basis[c]));
      std::vector<Polynomial> coords = eplus_coordinates(sp, bracket);
      comp += coords[a] * quadrics[c];
    }
    ++res.relations_checked;
    if (!comp.is_zero()) res.ad_relations_compose_to_zero = false;
  }
  return res;
}

D0D1Result d0_d1_check(const SymplecticSpace& sp) {
  D0D1Result res;
  // ring with generic B (y..) and generic E_- element b (b..)
  std::vector<std::string> names = kSpVars;
  for (const auto& v : kSpVars) names.push_back("b" + v.substr(1));
  RingPtr ring20 = make_ring(names);
  PolyMatrix jp = PolyMatrix::from_rational(ring20, sp.J);
  PolyMatrix yb = symmetric_matrix(ring20, 0) * jp;   // B
  PolyMatrix bb = symmetric_matrix(ring20, 10) * jp;  // b in E_-
  PolyMatrix d0 = anticommutator(bb, yb);
  res.d0_lands_in_eplus = (jp * d0 - d0.transposed() * jp).is_zero();

  // d1 on a generic E_+ element stays in E_+
  {
    std::vector<std::string> names16 = kSpVars;
    for (auto [i, j] : kAltPairs)
      names16.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    RingPtr ring16 = make_ring(names16);
    PolyMatrix j16 = PolyMatrix::from_rational(ring16, sp.J);
    PolyMatrix b16 = symmetric_matrix(ring16, 0) * j16;
    PolyMatrix anti(ring16, 4, 4);
    for (size_t k = 0; k < kAltPairs.size(); ++k) {
      auto [i, j] = kAltPairs[k];
      anti.at(i, j) = Polynomial::variable(ring16, 10 + static_cast<int>(k));
      anti.at(j, i) = -Polynomial::variable(ring16, 10 + static_cast<int>(k));
    }
    PolyMatrix eplus = anti * j16;
    PolyMatrix d1 = commutator(eplus, b16);
    res.d1_preserves_eplus = (j16 * d1 - d1.transposed() * j16).is_zero();
  }

  PolyMatrix comp = commutator(d0, yb);  // d1(d0(b)) = (bB+Bb)B - B(bB+Bb)
  PolyMatrix bsq = yb * yb;
  PolyMatrix expected = bb * bsq - bsq * bb;
  res.composition_is_commutator_with_bsquared = (comp == expected);

  // reduce entries modulo I0 inside the 20-variable ring
  auto generic = build_generic_B(sp);
  std::vector<int> var_map;
  for (int i = 0; i < 10; ++i) var_map.push_back(i);
  std::vector<Polynomial> gens;
  for (const auto& q : ideal_I0(sp, generic).gens)
    gens.push_back(map_into(q, ring20, var_map));
  auto gb = buchberger(IdealBasis(ring20, gens));
  res.composition_vanishes_mod_I0 = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!normal_form(comp.at(i, j), gb).is_zero())
        res.composition_vanishes_mod_I0 = false;
  return res;
}

}  // namespace ogradlab
