#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogradlab/modulegb.hpp"

using namespace ogradlab;

namespace {

PolyMatrix matrix_from(const RingPtr& ring, int rows, int cols,
                       std::initializer_list<const char*> entries) {
  PolyMatrix m(ring, rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_poly(ring, *it++);
  return m;
}

VecPoly vec_from(const RingPtr& ring, std::initializer_list<const char*> entries) {
  VecPoly v(ring, static_cast<int>(entries.size()));
  int i = 0;
  for (const char* e : entries) v.comps[i++] = parse_poly(ring, e);
  return v;
}

}  // namespace

TEST_CASE("syzygies of a regular sequence are the Koszul relations") {
  auto R = make_ring({"x", "y", "z"});
  auto row = matrix_from(R, 1, 3, {"x", "y", "z"});
  auto syz = syzygy_basis(row);
  REQUIRE(syz.rows() == 3);
  // Koszul relations reduce to zero against the computed kernel
  std::vector<VecPoly> cols;
  for (int j = 0; j < syz.cols(); ++j) cols.push_back(column_of(syz, j));
  auto gb = module_buchberger(R, 3, cols);
  CHECK(module_member(vec_from(R, {"y", "-x", "0"}), gb));
  CHECK(module_member(vec_from(R, {"z", "0", "-x"}), gb));
  CHECK(module_member(vec_from(R, {"0", "z", "-y"}), gb));
  // and conversely the kernel is generated by them
  auto koszul = module_buchberger(
      R, 3,
      {vec_from(R, {"y", "-x", "0"}), vec_from(R, {"z", "0", "-x"}),
       vec_from(R, {"0", "z", "-y"})});
  for (const auto& c : cols) CHECK(module_member(c, koszul));
}

TEST_CASE("a regular column has zero kernel") {
  auto R = make_ring({"x", "y", "z"});
  auto colm = matrix_from(R, 3, 1, {"x", "y", "z"});
  CHECK(syzygy_basis(colm).cols() == 0);
}

TEST_CASE("kernel of the corrected strand row") {
  auto R = make_ring({"x", "y", "z"});
  auto row = matrix_from(R, 1, 4, {"y", "z", "-x", "-y"});
  auto syz = syzygy_basis(row);
  std::vector<VecPoly> cols;
  for (int j = 0; j < syz.cols(); ++j) cols.push_back(column_of(syz, j));
  auto gb = module_buchberger(R, 4, cols);
  // the three columns of the left-hand matrix, plus the constant relation
  CHECK(module_member(vec_from(R, {"x", "0", "y", "0"}), gb));
  CHECK(module_member(vec_from(R, {"y", "x", "z", "y"}), gb));
  CHECK(module_member(vec_from(R, {"0", "y", "0", "z"}), gb));
  CHECK(module_member(vec_from(R, {"1", "0", "0", "1"}), gb));
}

TEST_CASE("quotient presentations: degenerate shapes") {
  auto R = make_ring({"x", "y"});
  auto gens = matrix_from(R, 2, 2, {"1", "0", "0", "1"});
  // im == ker: zero module
  auto zero_mod = quotient_presentation(gens, gens);
  CHECK(minimal_generator_count(zero_mod) == 0);
  auto ann0 = annihilator(zero_mod);
  CHECK(equal_ideals(ann0, IdealBasis(R, {parse_poly(R, "1")})));

  // im == 0, ker free of rank 1
  auto e1 = matrix_from(R, 1, 1, {"1"});
  PolyMatrix none(R, 1, 0);
  auto free_mod = quotient_presentation(e1, none);
  CHECK(minimal_generator_count(free_mod) == 1);
  CHECK(annihilator(free_mod).gens.empty());
}

TEST_CASE("quotient presentation rejects non-complexes") {
  auto R = make_ring({"x", "y"});
  auto ker = matrix_from(R, 2, 1, {"x", "0"});
  auto im = matrix_from(R, 2, 1, {"0", "y"});
  CHECK_THROWS_AS(quotient_presentation(ker, im), std::invalid_argument);
}

TEST_CASE("cyclic quotient O/(f) through the module machinery") {
  auto R = make_ring({"x", "y", "z"});
  auto gens = matrix_from(R, 1, 1, {"1"});
  auto im = matrix_from(R, 1, 1, {"x*z - y^2"});
  auto pres = quotient_presentation(gens, im);
  CHECK(minimal_generator_count(pres) == 1);
  auto ann = annihilator(pres);
  CHECK(equal_ideals(ann, IdealBasis(R, {parse_poly(R, "x*z - y^2")})));
  auto hf = subquotient_hilbert(pres, 6);
  for (int d = 0; d <= 6; ++d) CHECK(hf[d] == 2 * d + 1);
}

TEST_CASE("ideal intersection") {
  auto R = make_ring({"x", "y"});
  auto inter = ideal_intersection(R, {parse_poly(R, "x")}, {parse_poly(R, "y")});
  CHECK(equal_ideals(IdealBasis(R, inter), IdealBasis(R, {parse_poly(R, "x*y")})));
  auto with_zero = ideal_intersection(R, {}, {parse_poly(R, "x")});
  CHECK(with_zero.empty());
}

TEST_CASE("submodule quotient ideal") {
  auto R = make_ring({"x", "y"});
  // (x*e1 : e1) = (x)
  auto sub = matrix_from(R, 1, 1, {"x"});
  VecPoly e1 = vec_from(R, {"1"});
  auto q = submodule_quotient_ideal(sub, e1);
  CHECK(equal_ideals(IdealBasis(R, q), IdealBasis(R, {parse_poly(R, "x")})));
}
