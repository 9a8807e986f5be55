#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogradlab/kuranishi.hpp"

using namespace ogradlab;

namespace {

bool all_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

bool f_all_zero(const KuranishiOutput& out) {
  for (const auto& fn : out.f)
    if (!fn.empty() && !all_zero(fn)) return false;
  return true;
}

// permute the degree-1 basis of an algebra and transport the splittings
std::pair<DGAlgebra, Cohomology> permuted_degree1(const DGAlgebra& g,
                                                  const Cohomology& coh,
                                                  const std::vector<int>& perm) {
  DGAlgebra p = g;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (auto& e : p.product[a][b]) {
        if (a == 1) e.i = perm[e.i];
        if (b == 1) e.j = perm[e.j];
        if (a + b == 1) e.k = perm[e.k];
      }
  auto permute_rows = [&](const MatQ& m) {
    MatQ out = m;
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.row(perm[r]) = m.row(r);
    return out;
  };
  auto permute_cols = [&](const MatQ& m) {
    MatQ out = m;
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.col(perm[c]) = m.col(c);
    return out;
  };
  p.diff[0] = permute_rows(g.diff[0]);
  p.diff[1] = permute_cols(g.diff[1]);
  Cohomology c = coh;
  c.cocycles[1] = permute_rows(coh.cocycles[1]);
  c.boundaries[1] = permute_rows(coh.boundaries[1]);
  c.h_reps[1] = permute_rows(coh.h_reps[1]);
  c.t_pre[2] = permute_rows(coh.t_pre[2]);
  return {p, c};
}

}  // namespace

TEST_CASE("axioms hold for the model zoo") {
  for (auto make : {model_abelian, model_cup, model_unobstructed, model_obstructed}) {
    auto g = make();
    auto ax = verify_axioms(g);
    CHECK(ax.d_squared_zero);
    CHECK(ax.leibniz);
    CHECK(ax.associative);
  }
  // structure constants of the tensor algebra satisfy the axioms as well
  auto t = tensor_glr(model_unobstructed(), 2);
  auto ax = verify_axioms(t);
  CHECK(ax.d_squared_zero);
  CHECK(ax.leibniz);
  CHECK(ax.associative);
  for (int k = 0; k <= 3; ++k)
    CHECK(t.dims[k] == 4 * model_unobstructed().dims[k]);
}

TEST_CASE("cohomology of extreme cases") {
  auto ab = model_abelian();  // zero differential: H = g
  auto coh = cohomology(ab);
  for (int k = 0; k <= 3; ++k) CHECK(coh.h_dims[k] == ab.dims[k]);

  DGAlgebra iso;  // d an isomorphism in the only nonzero degrees
  iso.dims = {1, 1, 0, 0};
  iso.diff[0] = matq_identity(1);
  iso.diff[1] = MatQ(0, 1);
  iso.diff[2] = MatQ(0, 0);
  auto ich = cohomology(iso);
  CHECK(ich.h_dims[0] == 0);
  CHECK(ich.h_dims[1] == 0);
}

TEST_CASE("tensor cohomology dimensions multiply by r^2") {
  auto h = model_unobstructed();
  auto ch = cohomology(h);
  CHECK(ch.h_dims[1] == 4);
  CHECK(ch.h_dims[2] == 0);
  auto g = tensor_glr(h, 2);
  auto cg = cohomology(g);
  CHECK(cg.h_dims[1] == 4 * ch.h_dims[1]);
  CHECK(cg.h_dims[2] == 0);
  // block-diagonal splittings are genuine splittings
  auto cs = tensor_splittings(h, ch, 2);
  CHECK(cs.h_dims[1] == cg.h_dims[1]);
}

TEST_CASE("abelian model: no corrections at all") {
  auto g = model_abelian();
  auto coh = cohomology(g);
  auto out = kuranishi_recursion(g, coh, 5);
  CHECK(f_all_zero(out));
  for (int n = 2; n <= 5; ++n) CHECK(all_zero(out.gamma[n]));
  auto rep = verify_mc_defect(g, coh, out);
  CHECK(rep.contained);
  CHECK(rep.exact_when_unobstructed);
}

TEST_CASE("cup model: the obstruction is exactly the cup product") {
  auto g = model_cup();
  auto coh = cohomology(g);
  CHECK(coh.h_dims[1] == 4);
  CHECK(coh.h_dims[2] == 1);
  auto out = kuranishi_recursion(g, coh, 4);
  CHECK(f2_is_cup_product(g, coh, out));
  bool f2_nonzero = !all_zero(out.f[2]);
  CHECK(f2_nonzero);
  for (int n = 3; n <= 4; ++n) CHECK(all_zero(out.f[n]));
  auto rep = verify_mc_defect(g, coh, out);
  CHECK(rep.contained);
}

TEST_CASE("unobstructed model: f vanishes at every order") {
  auto g = model_unobstructed();
  auto coh = cohomology(g);
  CHECK(coh.h_dims[2] == 0);
  auto out = kuranishi_recursion(g, coh, 5);
  CHECK(f_all_zero(out));
  // the run is nontrivial: a genuine second-order correction appears
  CHECK(!all_zero(out.gamma[2]));
  auto rep = verify_mc_defect(g, coh, out);
  CHECK(rep.contained);
  CHECK(rep.exact_when_unobstructed);
}

TEST_CASE("obstructed model at N = 5: defect contained in a*m") {
  auto g = model_obstructed();
  auto coh = cohomology(g);
  CHECK(coh.h_dims[0] == 1);
  CHECK(coh.h_dims[1] == 4);
  CHECK(coh.h_dims[2] == 1);
  auto out = kuranishi_recursion(g, coh, 5);
  CHECK(f2_is_cup_product(g, coh, out));
  CHECK(!all_zero(out.f[2]));
  auto rep = verify_mc_defect(g, coh, out);
  CHECK(rep.contained);
  // the containment is not vacuous: the defect is nonzero somewhere
  auto defect = mc_defect(g, coh, out);
  bool some_nonzero = false;
  for (int n = 2; n <= 5; ++n)
    if (!defect[n].empty() && !all_zero(defect[n])) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("diagonal vanishing for the rank-2 tensor model") {
  auto rep = verify_diagonal_vanishing(model_unobstructed(), 2, 4);
  CHECK(rep.h2_vanishes);
  CHECK(rep.f_vanishes_on_diagonal);
  CHECK(rep.gamma_is_block_diagonal);
  CHECK(rep.blocks_match_base_run);
  CHECK(rep.base_solves_mc);
  CHECK(rep.swap_equivariant);
  CHECK_THROWS_AS(verify_diagonal_vanishing(model_obstructed(), 2, 3),
                  std::invalid_argument);
}

TEST_CASE("rank-1 tensor is the base algebra") {
  auto h = model_obstructed();
  auto t1 = tensor_glr(h, 1);
  CHECK(t1.dims == h.dims);
  auto ch = cohomology(h);
  auto out_h = kuranishi_recursion(h, ch, 3);
  auto out_t = kuranishi_recursion(t1, tensor_splittings(h, ch, 1), 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < h.dims[1]; ++i)
      CHECK(out_h.gamma[n][i] == out_t.gamma[n][i]);
}

TEST_CASE("output is basis-independent given transported splittings") {
  auto g = model_obstructed();
  auto coh = cohomology(g);
  auto out = kuranishi_recursion(g, coh, 4);
  std::vector<int> perm(g.dims[1]);
  for (int i = 0; i < g.dims[1]; ++i) perm[i] = (i + 5) % g.dims[1];
  auto [pg, pcoh] = permuted_degree1(g, coh, perm);
  auto pout = kuranishi_recursion(pg, pcoh, 4);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < g.dims[1]; ++i)
      CHECK(pout.gamma[n][perm[i]] == out.gamma[n][i]);
    if (n >= 2)
      for (int r = 0; r < static_cast<int>(out.f[n].size()); ++r)
        CHECK(pout.f[n][r] == out.f[n][r]);
  }
}

TEST_CASE("model files round-trip") {
  auto g = model_obstructed();
  std::string text = dgalgebra_to_json(g);
  auto back = dgalgebra_from_json(text);
  CHECK(dgalgebra_to_json(back) == text);
  CHECK_THROWS(dgalgebra_from_json("{\"dims\": [1, 1]}"));
}
