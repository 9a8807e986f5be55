#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogradlab/model.hpp"

using namespace ogradlab;

namespace {

struct Fixture {
  SymplecticSpace sp = make_symplectic_space();
  GenericSpElement g = build_generic_B(sp);
};

MatQ coeff_matrix(const std::vector<Polynomial>& ps) {
  auto monos = merge_monomial_support(ps);
  MatQ m = matq_zero(static_cast<Eigen::Index>(monos.size()),
                     static_cast<Eigen::Index>(ps.size()));
  for (size_t c = 0; c < ps.size(); ++c)
    m.col(static_cast<Eigen::Index>(c)) = coefficient_vector(ps[c], monos);
  return m;
}

}  // namespace

TEST_CASE("generic sp4 element") {
  Fixture f;
  PolyMatrix jp = PolyMatrix::from_rational(f.g.ring, f.sp.J);
  CHECK((jp * f.g.B + f.g.B.transposed() * jp).is_zero());
  // the 16 entries span a 10-dimensional space of linear forms
  std::vector<Polynomial> entries;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) entries.push_back(f.g.B.at(i, j));
  CHECK(rank_of(coeff_matrix(entries)) == 10);
  // Y -> Y J sends the symmetric basis into sp4
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      MatQ y = matq_zero(4, 4);
      y(i, j) = 1;
      y(j, i) = 1;
      MatQ b = y * f.sp.J;
      MatQ zero = f.sp.J * b + b.transpose() * f.sp.J;
      CHECK(zero == matq_zero(4, 4));
    }
}

TEST_CASE("chart specialization embeds with square zero") {
  Fixture f;
  ChartPoint chart = build_chart();
  // Bbar = (1 0 / 0 0) at S = 0
  MatQ b = chart_point_matrix(f.sp, chart,
                              {rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)});
  CHECK(b * b == matq_zero(4, 4));
  MatQ constraint = f.sp.J * b + b.transpose() * f.sp.J;
  CHECK(constraint == matq_zero(4, 4));
  CHECK(rank_of(b) == 1);
}

TEST_CASE("the ideal of the square-zero locus has exactly six quadrics") {
  Fixture f;
  auto i0 = ideal_I0(f.sp, f.g);
  CHECK(i0.gens.size() == 6);
  for (const auto& q : i0.gens) {
    CHECK(is_homogeneous(q));
    CHECK(q.total_degree() == 2);
    // vanishes at B = 0
    CHECK(is_zero(eval(q, std::vector<Rational>(10, rat(0)))));
  }
  // all 16 entries of B^2 lie in the span of the six quadrics
  std::vector<Polynomial> entries;
  PolyMatrix b2 = f.g.B * f.g.B;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!b2.at(i, j).is_zero()) entries.push_back(b2.at(i, j));
  CHECK(rank_of(coeff_matrix(entries)) == 6);
  auto combined = entries;
  combined.insert(combined.end(), i0.gens.begin(), i0.gens.end());
  CHECK(rank_of(coeff_matrix(combined)) == 6);
}

TEST_CASE("quadrics vanish along the chart") {
  Fixture f;
  ChartPoint chart = build_chart();
  Sampler s(kDefaultSeed);
  auto i0 = ideal_I0(f.sp, f.g);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Rational> values;
    for (int k = 0; k < 6; ++k) values.push_back(s.rational(4, 2));
    MatQ b = chart_point_matrix(f.sp, chart, values);
    // substitute the entries of b (as the 10 symmetric coordinates)
    std::vector<Rational> ys;
    // recover Y = B J^{-1} = -B J
    MatQ y = MatQ(-(b * f.sp.J));
    ys = {y(0, 0), y(0, 1), y(0, 2), y(0, 3), y(1, 1),
          y(1, 2), y(1, 3), y(2, 2), y(2, 3), y(3, 3)};
    for (const auto& q : i0.gens) CHECK(is_zero(eval(q, ys)));
  }
}

TEST_CASE("minor ideal of the singular locus") {
  Fixture f;
  auto l0 = ideal_L0(f.g);
  CHECK(l0.gens.size() == 20);  // independent quadrics among the 36 minors
  // vanish at zero and at rank-1 samples
  Sampler s(kDefaultSeed + 1);
  for (int rep = 0; rep < 5; ++rep) {
    MatQ b = rank1_point(f.sp, s);
    MatQ y = MatQ(-(b * f.sp.J));
    std::vector<Rational> ys = {y(0, 0), y(0, 1), y(0, 2), y(0, 3), y(1, 1),
                                y(1, 2), y(1, 3), y(2, 2), y(2, 3), y(3, 3)};
    for (const auto& m : l0.gens) CHECK(is_zero(eval(m, ys)));
  }
  // containment: every quadric of I0 reduces to zero modulo GB(L0)
  auto gb_l0 = buchberger(l0);
  CHECK(contained_in(ideal_I0(f.sp, f.g), gb_l0));
}

TEST_CASE("dimension census") {
  Fixture f;
  auto gb_i0 = buchberger(ideal_I0(f.sp, f.g));
  CHECK(all_s_polynomials_reduce_to_zero(gb_i0));
  CHECK(krull_dimension(gb_i0) == 6);
  auto gb_ext = buchberger(ideal_I0_extended(f.sp, f.g));
  CHECK(krull_dimension(gb_ext) == 10);
  auto gb_l0 = buchberger(ideal_L0(f.g));
  CHECK(krull_dimension(gb_l0) == 4);
  CHECK(krull_dimension(buchberger(IdealBasis(
            f.g.ring, {Polynomial::constant(f.g.ring, 1)}))) == -1);
}

TEST_CASE("lagrangian grassmannian ideal") {
  Fixture f;
  auto grass = grassmannian_ideal(f.sp);
  REQUIRE(grass.gens.size() == 2);
  std::vector<int> degs = {grass.gens[0].total_degree(),
                           grass.gens[1].total_degree()};
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>({1, 2}));
  auto gb = buchberger(grass);
  CHECK(krull_dimension(gb) - 1 == 3);
  // span(e1, e3) is isotropic: its plucker vector satisfies both equations
  VecQ e1 = vecq_zero(4), e2 = vecq_zero(4), e3 = vecq_zero(4);
  e1(0) = 1;
  e2(1) = 1;
  e3(2) = 1;
  VecQ good = plucker_of_plane(e1, e3);
  std::vector<Rational> pt(6);
  for (int i = 0; i < 6; ++i) pt[i] = good(i);
  for (const auto& gpoly : grass.gens) CHECK(is_zero(eval(gpoly, pt)));
  // span(e1, e2) is not isotropic in this convention
  VecQ bad = plucker_of_plane(e1, e2);
  for (int i = 0; i < 6; ++i) pt[i] = bad(i);
  bool all_zero = true;
  for (const auto& gpoly : grass.gens)
    if (!is_zero(eval(gpoly, pt))) all_zero = false;
  CHECK(!all_zero);
}

TEST_CASE("fiber dimensions over the rank strata") {
  Fixture f;
  CHECK(fiber_dimension(f.sp, matq_zero(4, 4)) == 3);
  Sampler s(kDefaultSeed + 2);
  for (int rep = 0; rep < 5; ++rep)
    CHECK(fiber_dimension(f.sp, rank1_point(f.sp, s)) == 1);
  CHECK(fiber_dimension(f.sp, rank2_point(f.sp)) == 0);
  MatQ not_nilpotent = matq_identity(4);
  CHECK_THROWS_AS(fiber_dimension(f.sp, not_nilpotent), std::invalid_argument);
}

TEST_CASE("blow-up chart: minors factor through the exceptional equation") {
  ChartPoint chart = build_chart();
  auto res = blowup_chart_check(chart);
  CHECK(res.minor_count == 36);
  CHECK(res.every_minor_divisible);
  CHECK(res.quotients_free_of_fiber_vars);
  CHECK(res.quotients_generate_unit);
  CHECK(res.minor_ideal_is_exceptional);
  CHECK(res.zero_on_exceptional_locus);
}

TEST_CASE("blow-up chart at S = 0 reduces to the determinant") {
  ChartPoint chart = build_chart();
  const RingPtr& ring = chart.ring;
  std::vector<Polynomial> s_to_zero = {
      Polynomial(ring), Polynomial(ring), Polynomial(ring),
      Polynomial::variable(ring, 3), Polynomial::variable(ring, 4),
      Polynomial::variable(ring, 5)};
  PolyMatrix at0 = substitute(chart.B, s_to_zero);
  Polynomial exc = parse_poly(ring, "x*z - y^2");
  int nonzero = 0;
  for (int r0 = 0; r0 < 4; ++r0)
    for (int r1 = r0 + 1; r1 < 4; ++r1)
      for (int c0 = 0; c0 < 4; ++c0)
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
          Polynomial m = minor2x2(at0, r0, r1, c0, c1);
          if (m.is_zero()) continue;
          ++nonzero;
          CHECK((m == exc || m == -exc));
        }
  CHECK(nonzero == 1);
}

TEST_CASE("presentation complex composes to zero") {
  Fixture f;
  // [B, B^2] = 0 in any associative ring
  PolyMatrix b2 = f.g.B * f.g.B;
  CHECK(commutator(f.g.B, b2).is_zero());
  auto res = presentation_complex_check(f.sp, f.g);
  CHECK(res.tautological_relations_compose_to_zero);
  CHECK(res.ad_relations_compose_to_zero);
  CHECK(res.relations_checked == 15 + 6);
}

TEST_CASE("d0 then d1 vanishes on the square-zero locus") {
  Fixture f;
  auto res = d0_d1_check(f.sp);
  CHECK(res.d0_lands_in_eplus);
  CHECK(res.d1_preserves_eplus);
  CHECK(res.composition_is_commutator_with_bsquared);
  CHECK(res.composition_vanishes_mod_I0);
}
