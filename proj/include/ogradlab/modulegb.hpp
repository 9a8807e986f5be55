#pragma once

#include "ogradlab/groebner.hpp"
#include "ogradlab/polymatrix.hpp"

namespace ogradlab {

// Element of a free module O^rank.
struct VecPoly {
  RingPtr ring;
  std::vector<Polynomial> comps;

  VecPoly() = default;
  VecPoly(RingPtr r, int rank);
  bool is_zero() const;
};

VecPoly column_of(const PolyMatrix& m, int c);
PolyMatrix columns_to_matrix(const RingPtr& ring, int rank,
                             const std::vector<VecPoly>& cols);

// Module Groebner basis under the term-over-position extension of the ring
// order (ties go to the lower component). The syzygy routine internally uses
// the component-elimination extension instead; both are fixed and documented
// so outputs are deterministic.
struct ModuleGB {
  RingPtr ring;
  int rank = 0;
  std::vector<VecPoly> gens;
};

ModuleGB module_buchberger(const RingPtr& ring, int rank,
                           const std::vector<VecPoly>& gens);
VecPoly module_normal_form(const VecPoly& v, const ModuleGB& gb);
bool module_member(const VecPoly& v, const ModuleGB& gb);

// Columns generate ker(m : O^cols -> O^rows); each output column is checked
// against m before returning.
PolyMatrix syzygy_basis(const PolyMatrix& m);

// Presentation of (span ker_gens)/(span im_gens): generators are the ker_gens
// columns, relations express every combination of generators landing in the
// image (syzygies of the generators included).
struct ModulePresentation {
  RingPtr ring;
  int ambient_rank = 0;
  PolyMatrix generators;  // ambient_rank x s
  PolyMatrix relations;   // s x k, coordinates on the generators
};

ModulePresentation quotient_presentation(const PolyMatrix& ker_gens,
                                         const PolyMatrix& im_gens);

// Graded pieces dim_Q (span of columns)_d for d = 0..up_to; columns must be
// homogeneous vectors.
std::vector<long> submodule_graded_dims(const PolyMatrix& cols, int up_to);

// Hilbert function of the subquotient behind a presentation.
std::vector<long> subquotient_hilbert(const ModulePresentation& pres, int up_to);

// dim_Q M/mM, the minimal number of generators (graded Nakayama).
int minimal_generator_count(const ModulePresentation& pres);

// Ideal (span(sub) : elem) = { r : r*elem in span(sub) }.
std::vector<Polynomial> submodule_quotient_ideal(const PolyMatrix& sub,
                                                 const VecPoly& elem);

std::vector<Polynomial> ideal_intersection(const RingPtr& ring,
                                           const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b);

// Annihilator of the presented module, returned as a reduced basis.
IdealBasis annihilator(const ModulePresentation& pres);

bool equal_ideals(const IdealBasis& a, const IdealBasis& b);

}  // namespace ogradlab
