#pragma once

#include "ogradlab/model.hpp"

namespace ogradlab {

// Four generic 2x2 matrices A_1..A_4 over Q[a1,b1,c1,d1,...,d4] together with
// their traceless parts.
struct MatrixTuple {
  RingPtr ring;
  std::array<PolyMatrix, 4> A;
  std::array<PolyMatrix, 4> Aprime;
};

MatrixTuple build_matrix_tuple();

// X_i = tr(A_i), Y_ij = tr(A_i' A_j'), T_i = (-1)^i tr(product of the other
// three traceless parts in ascending index order).
struct InvariantSet {
  RingPtr ring;
  std::array<Polynomial, 4> X;
  PolyMatrix Y;
  std::array<Polynomial, 4> T;
};

InvariantSet build_invariants(const MatrixTuple& t);

struct RelationReport {
  bool y_symmetric = false;
  bool det_y_zero = false;
  bool yt_zero = false;
  bool tt_adjugate_holds = false;     // with the printed constant -2
  bool tt_adjugate_some_constant = false;
  Rational validating_constant;       // the c with T T^t = c adj(Y)
  bool randomized_cross_check = false;
  int randomized_samples = 0;
  size_t max_intermediate_terms = 0;  // expansion size metric
};

RelationReport verify_relations(const MatrixTuple& t, const InvariantSet& inv,
                                Sampler& sampler, std::uint64_t prime,
                                int samples);

struct QuadraticPartReport {
  bool t1_identity_holds = false;  // -1/2 tr(A_2' f_2) == T_1
  bool t1_some_constant = false;
  Rational t1_constant;            // c with -1/2 tr(A_2' f_2) == c T_1
  bool yjy_identities_hold = false;  // tr(A_i' A_j' f_2) == (YJY)_ij, i <= j
  bool yjy_some_constant = false;
  Rational yjy_constant;             // c with tr(A_i' A_j' f_2) == c (YJY)_ij
  bool randomized_cross_check = false;
};

// f_2 = [A_1, A_2] + [A_3, A_4], the quadratic part of the obstruction map.
QuadraticPartReport verify_quadratic_parts(const SymplecticSpace& sp,
                                           const MatrixTuple& t,
                                           const InvariantSet& inv,
                                           Sampler& sampler,
                                           std::uint64_t prime, int samples);

struct DiagonalMinorReport {
  bool all_minors_vanish = false;   // Y has rank <= 1 on diagonal tuples
  int minors_checked = 0;
  bool generic_minor_nonzero = false;  // sanity: not identically zero
};

DiagonalMinorReport verify_diagonal_minors(const MatrixTuple& t,
                                           const InvariantSet& inv,
                                           Sampler& sampler);

struct YJSquareReport {
  bool squares_agree = false;        // (YJ)^2 computed two ways
  bool yj_lands_in_sp = false;
  bool span_matches_quadrics = false;  // entries of B^2 span the six quadrics
};

YJSquareReport verify_yj_squares(const SymplecticSpace& sp,
                                 const GenericSpElement& g);

// A_i -> g A_i g^{-1} for seeded unimodular g fixes every generator.
bool sl2_invariance_spot_check(const MatrixTuple& t, const InvariantSet& inv,
                               Sampler& sampler, int count);

}  // namespace ogradlab
