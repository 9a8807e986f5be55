#pragma once

#include "ogradlab/dgalgebra.hpp"

namespace ogradlab {

// A g^k-valued polynomial map on H^1 is a vector of polynomials over the
// coordinate ring Q[u1..um], m = dim H^1.
using PolyVec = std::vector<Polynomial>;

struct KuranishiOutput {
  RingPtr ring;                  // Q[u1..um]
  int truncation = 0;            // N
  std::vector<PolyVec> gamma;    // gamma[n], n = 1..N; g^1-valued, degree n
  std::vector<PolyVec> f;        // f[n], n = 2..N; H^2-coordinate-valued
};

// Degree-by-degree construction: at each order the square of the partial sum
// is reduced modulo the graded piece of a*m, its class is split off into f_n,
// and gamma_n kills the boundary part. Deterministic for fixed splittings.
KuranishiOutput kuranishi_recursion(const DGAlgebra& g, const Cohomology& coh,
                                    int N);

PolyVec gamma_total(const KuranishiOutput& out, int dim_g1);

// d(gamma) + gamma*gamma - s(f) degree by degree.
std::vector<PolyVec> mc_defect(const DGAlgebra& g, const Cohomology& coh,
                               const KuranishiOutput& out);

struct DefectReport {
  bool contained = false;     // defect_n in g^2 (x) (a*m)_n for all n <= N
  int first_failure = -1;     // offending degree when not contained
  bool exact_when_unobstructed = false;  // defect identically zero if f == 0
};

DefectReport verify_mc_defect(const DGAlgebra& g, const Cohomology& coh,
                              const KuranishiOutput& out);

// f_2 agrees with the cup-product quadratic map e -> class(s(e) s(e)).
bool f2_is_cup_product(const DGAlgebra& g, const Cohomology& coh,
                       const KuranishiOutput& out);

struct DiagonalVanishingReport {
  bool h2_vanishes = false;
  bool f_vanishes_on_diagonal = false;
  bool gamma_is_block_diagonal = false;  // after killing off-diagonal coords
  bool blocks_match_base_run = false;    // each block is the r = 1 gamma
  bool base_solves_mc = false;           // (d + gamma~)^2 = 0 through N
  bool swap_equivariant = false;         // exchanging two diagonal blocks
  bool ok() const {
    return h2_vanishes && f_vanishes_on_diagonal && gamma_is_block_diagonal &&
           blocks_match_base_run && base_solves_mc && swap_equivariant;
  }
};

// Runs the recursion on gl_r (x) h with block-diagonal splittings and checks
// the diagonal restriction against an independent run on h alone.
DiagonalVanishingReport verify_diagonal_vanishing(const DGAlgebra& h, int r,
                                                  int N);

}  // namespace ogradlab
