#pragma once

#include "ogradlab/polynomial.hpp"

namespace ogradlab {

struct IdealBasis {
  RingPtr ring;
  std::vector<Polynomial> gens;  // nonzero, same ring

  IdealBasis() = default;
  IdealBasis(RingPtr r, std::vector<Polynomial> g);
};

// Reduced Groebner basis: monic, auto-reduced, sorted by leading monomial.
// Unique for a fixed ring and order, so recomputation is idempotent.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order;
  std::vector<Polynomial> gens;
};

struct HilbertData {
  int dimension = 0;                 // Krull dimension of the quotient
  std::vector<long> values;          // graded quotient dimensions by degree
};

// Buchberger with the sugar selection strategy and Gebauer-Moeller pair
// elimination.
GroebnerBasis buchberger(const IdealBasis& basis);

// Full remainder: no term of the result is divisible by any leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Independent certificate replayed over the final basis, ignoring whatever
// pairs the engine eliminated.
bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& gb);

bool is_unit_ideal(const GroebnerBasis& gb);

// Krull dimension of ring/ideal as the maximal size of a variable set that
// contains no leading-term support; -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);

// Counts of standard monomials per degree; a vector-space basis of the
// quotient in each degree (valid for arbitrary ideals by Macaulay's theorem).
std::vector<long> standard_monomial_counts(const GroebnerBasis& gb, int up_to);

// Graded quotient dimensions; requires homogeneous generators.
HilbertData hilbert_function(const GroebnerBasis& gb, int up_to);

// Total vector-space dimension of the quotient when finite.
std::optional<long> quotient_vector_space_dimension(const GroebnerBasis& gb);

// Every generator of `a` reduces to zero modulo gb.
bool contained_in(const IdealBasis& a, const GroebnerBasis& gb);

}  // namespace ogradlab
