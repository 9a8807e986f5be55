#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogradlab/t1fiber.hpp"

using namespace ogradlab;

TEST_CASE("strand construction derives the corrected row") {
  auto s1 = build_strand(Strand::I);
  REQUIRE(s1.complex.right.rows() == 1);
  const RingPtr& F = s1.complex.ring;
  CHECK(s1.complex.right.at(0, 0) == parse_poly(F, "y"));
  CHECK(s1.complex.right.at(0, 1) == parse_poly(F, "z"));
  CHECK(s1.complex.right.at(0, 2) == parse_poly(F, "-x"));
  CHECK(s1.complex.right.at(0, 3) == parse_poly(F, "-y"));
  CHECK(s1.composition_zero);
  // flipping the last entry to +y breaks the complex with defect 2y^2
  CHECK(s1.uncorrected_row_defect == parse_poly(F, "2*y^2"));
  // left matrix rows (x y 0), (0 x y), (y z 0), (0 y z)
  CHECK(s1.complex.left.at(0, 0) == parse_poly(F, "x"));
  CHECK(s1.complex.left.at(0, 1) == parse_poly(F, "y"));
  CHECK(s1.complex.left.at(1, 1) == parse_poly(F, "x"));
  CHECK(s1.complex.left.at(2, 0) == parse_poly(F, "y"));
  CHECK(s1.complex.left.at(2, 1) == parse_poly(F, "z"));
  CHECK(s1.complex.left.at(3, 2) == parse_poly(F, "z"));
}

TEST_CASE("strand III kernel vanishes") {
  auto s3 = build_strand(Strand::III);
  auto h = compute_h1(s3);
  CHECK(h.zero_module);
  // at (x,y,z) = (1,0,0) the map is injective: the column is nonzero there
  bool nonzero = false;
  for (int i = 0; i < 4; ++i)
    if (!is_zero(eval(s3.complex.right.at(i, 0), {rat(1), rat(0), rat(0)})))
      nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("strand II cokernel is the skyscraper at the origin") {
  auto s2 = build_strand(Strand::II);
  auto h = compute_h1(s2);
  CHECK(h.hilbert_is_skyscraper);
  CHECK(h.row_ideal_is_maximal);
  REQUIRE(!h.hilbert_prefix.empty());
  CHECK(h.hilbert_prefix[0] == 1);
}

TEST_CASE("strand I is the structure sheaf of the cone xz = y^2") {
  auto s1 = build_strand(Strand::I);
  auto h = compute_h1(s1, 7);
  CHECK(h.annihilator_is_cone);
  CHECK(h.cyclic_one_generator);
  CHECK(h.hilbert_is_cone);
  CHECK(h.nothing_smaller_annihilates);
  for (int d = 0; d <= 7; ++d) CHECK(h.hilbert_prefix[d] == 2 * d + 1);
}

TEST_CASE("hypersurface T1 dimensions") {
  auto A3 = make_ring({"x1", "x2", "x3"});
  auto a1 = hypersurface_t1(parse_poly(A3, "x1^2 + x2^2 + x3^2"));
  CHECK(total_dimension(a1) == 1);

  auto smooth = hypersurface_t1(parse_poly(A3, "x1"));
  CHECK(total_dimension(smooth) == 0);

  auto A2r = make_ring({"x", "y"});
  auto cusp = hypersurface_t1(parse_poly(A2r, "x^2 - y^3"));
  CHECK(total_dimension(cusp) == 2);

  // the cone xz - y^2 is the same A1 germ after a linear change
  auto R3 = make_ring({"x", "y", "z"});
  auto cone = hypersurface_t1(parse_poly(R3, "x*z - y^2"));
  CHECK(total_dimension(cone) == 1);

  // non-isolated singularity: infinite-dimensional T1 is reported as such
  auto whitney = hypersurface_t1(parse_poly(A2r, "x^2*y"));
  CHECK(!total_dimension(whitney).has_value());
  CHECK(whitney.dimension == 1);
}

TEST_CASE("purity consequences at fiber level") {
  auto p = purity_consequence_check();
  CHECK(p.cone_support_dimension == 2);
  CHECK(p.skyscraper_dimension == 0);
  CHECK(p.a1_tjurina_dimension == 1);
  CHECK(p.consistent);
  CHECK(!p.recorded_assumption.empty());
}
