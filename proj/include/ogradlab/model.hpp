#pragma once

#include "ogradlab/modulegb.hpp"
#include "ogradlab/rng.hpp"

namespace ogradlab {

// 4-dimensional symplectic space. Canonical convention: block-diagonal J
// pairing (1,2) and (3,4); the alternative U + U^* convention pairs (1,3) and
// (2,4). Cross-section computations state which convention they use.
struct SymplecticSpace {
  MatQ J;             // canonical, block-diagonal
  MatQ J_alt;         // block-antidiagonal [[0, I], [-I, 0]]
  MatQ basis_change;  // C with C^T J C = J_alt
};

SymplecticSpace make_symplectic_space();

// Generic element of sp_4 over Q[y11..y44]: B = Y J with Y the symmetric
// coordinate matrix. Entries are linear and span a 10-dimensional space.
struct GenericSpElement {
  RingPtr ring;
  PolyMatrix Y;
  PolyMatrix B;
};

GenericSpElement build_generic_B(const SymplecticSpace& sp);

// The +1 eigenspace of the adjoint involution: E_+ = {f : J f = f^T J},
// spanned by (E_ij - E_ji) J for i < j in lexicographic order.
std::vector<MatQ> eplus_basis(const SymplecticSpace& sp);

// Coordinates of a matrix with entries in any ring relative to that basis;
// throws when the matrix is not E_+-valued.
std::vector<Polynomial> eplus_coordinates(const SymplecticSpace& sp,
                                          const PolyMatrix& m);

// The six quadrics: coordinates of B^2 in the E_+ basis.
IdealBasis ideal_I0(const SymplecticSpace& sp, const GenericSpElement& g);

// 2x2 minors of B, deduplicated up to sign and Q-linear dependence.
IdealBasis ideal_L0(const GenericSpElement& g);

// Rename variables of p into a larger ring; var_map[i] gives the target index
// of source variable i.
Polynomial map_into(const Polynomial& p, const RingPtr& target,
                    const std::vector<int>& var_map);

// I0 extended to Q[X1..X4, y11..y44].
IdealBasis ideal_I0_extended(const SymplecticSpace& sp, const GenericSpElement& g);

// Chart of the resolution: over the Lagrangian chart U_S = graph(S), S
// symmetric, the generic square-zero B annihilating U_S, written in the
// U + U^* convention with Bbar = (x y / y z).
struct ChartPoint {
  RingPtr ring;  // S11, S12, S22, x, y, z
  PolyMatrix Bbar;
  PolyMatrix B;
};

ChartPoint build_chart();

// Specialize a chart point at rational S and (x, y, z) and express it in the
// canonical convention.
MatQ chart_point_matrix(const SymplecticSpace& sp, const ChartPoint& chart,
                        const std::vector<Rational>& values);

// Plucker ring p12..p34 with the quadric and the linear form cutting out the
// Lagrangian Grassmannian.
IdealBasis grassmannian_ideal(const SymplecticSpace& sp);

VecQ plucker_of_plane(const VecQ& u, const VecQ& v);

// Dimension of {U Lagrangian : B(U) = 0} as a projective variety; requires
// B^2 = 0 exactly.
int fiber_dimension(const SymplecticSpace& sp, const MatQ& point);

// Seeded rank-1 sample v v^T J (squares to zero since v^T J v = 0).
MatQ rank1_point(const SymplecticSpace& sp, Sampler& sampler);
MatQ rank2_point(const SymplecticSpace& sp);

struct BlowupChartResult {
  int minor_count = 0;
  bool every_minor_divisible = false;   // minor == (xz - y^2) * p
  bool quotients_free_of_fiber_vars = false;  // each p lies in Q[S]
  bool quotients_generate_unit = false;
  bool minor_ideal_is_exceptional = false;    // ideal(minors) == (xz - y^2)
  bool zero_on_exceptional_locus = false;     // minors vanish at x=y=z=0
};

BlowupChartResult blowup_chart_check(const ChartPoint& chart);

struct PresentationComplexResult {
  bool tautological_relations_compose_to_zero = false;
  bool ad_relations_compose_to_zero = false;
  int relations_checked = 0;
};

// g(r(.)) = 0 for both relation families of the presentation of I0.
PresentationComplexResult presentation_complex_check(const SymplecticSpace& sp,
                                                     const GenericSpElement& g);

struct D0D1Result {
  bool d0_lands_in_eplus = false;
  bool d1_preserves_eplus = false;
  bool composition_is_commutator_with_bsquared = false;
  bool composition_vanishes_mod_I0 = false;
};

// d0(b) = bB + Bb, d1(m) = mB - Bm; the composition equals bB^2 - B^2 b and
// vanishes on the square-zero locus.
D0D1Result d0_d1_check(const SymplecticSpace& sp);

}  // namespace ogradlab
