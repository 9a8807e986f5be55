#pragma once

#include <array>

#include "ogradlab/linalg.hpp"
#include "ogradlab/polynomial.hpp"

namespace ogradlab {

// Finite-dimensional graded associative algebra in degrees 0..3 with a
// degree +1 differential, given by explicit bases and structure constants.
struct DGAlgebra {
  std::array<int, 4> dims{};

  struct ProductEntry {
    int i, j, k;
    Rational c;  // e^a_i * e^b_j += c e^{a+b}_k
  };
  // product[a][b], nonzero entries only
  std::array<std::array<std::vector<ProductEntry>, 4>, 4> product;

  // diff[k]: dims[k+1] x dims[k]
  std::array<MatQ, 3> diff;

  int dim(int k) const { return k >= 0 && k < 4 ? dims[k] : 0; }
  VecQ mul(int da, const VecQ& a, int db, const VecQ& b) const;
  VecQ apply_d(int k, const VecQ& v) const;
};

struct AxiomReport {
  bool d_squared_zero = false;
  bool leibniz = false;
  bool associative = false;
  bool ok() const { return d_squared_zero && leibniz && associative; }
};

AxiomReport verify_axioms(const DGAlgebra& g);

// Degree >= 0 part of the endomorphism algebra of a complex of vector spaces
// C^0 -> C^1 -> ... (length <= 3), with d = [d_C, -]. Associativity and the
// Leibniz rule hold by construction; axioms are still checkable.
DGAlgebra end_algebra_of_complex(const std::vector<MatQ>& differentials,
                                 const std::vector<int>& dims);

// gl_r tensor factor: (E_pq (x) x)(E_p'q' (x) y) = delta_{qp'} E_pq' (x) xy,
// differential id (x) d. Basis index of (p, q, i) in degree k is
// (p*r + q)*h.dims[k] + i.
DGAlgebra tensor_glr(const DGAlgebra& h, int r);

// Cocycles, boundaries, chosen splittings s: H -> Z and t: B -> g[-1].
// Everything is produced by deterministic row reduction, so a fixed algebra
// always yields the same splittings.
struct Cohomology {
  std::array<MatQ, 4> cocycles;    // columns: basis of Z^k
  std::array<MatQ, 4> boundaries;  // columns: basis of B^k
  std::array<MatQ, 4> h_reps;      // columns: s of the chosen H^k basis
  std::array<MatQ, 4> t_pre;       // columns: d-preimages of the B^k basis
  std::array<int, 4> h_dims{};
};

Cohomology cohomology(const DGAlgebra& g);

// Block-diagonal splittings id (x) s_h, id (x) t_h for the tensor algebra.
Cohomology tensor_splittings(const DGAlgebra& h, const Cohomology& ch, int r);

// H-class of a cocycle (throws when v is not a cocycle).
VecQ h_class(const DGAlgebra& g, const Cohomology& coh, int k, const VecQ& v);
// s on H-coordinates.
VecQ s_of(const Cohomology& coh, int k, const VecQ& h);
// t on a boundary (throws when b is not in B^k).
VecQ t_of(const Cohomology& coh, int k, const VecQ& b);

// Named example algebras used by the verification suites.
DGAlgebra model_abelian();       // zero products, zero differential
DGAlgebra model_cup();           // zero differential, nonzero cup products
DGAlgebra model_unobstructed();  // H^1 four-dimensional, H^2 = 0
DGAlgebra model_obstructed();    // H^0, H^1, H^2 of dimensions 1, 4, 1

// JSON (de)serialization for model files.
std::string dgalgebra_to_json(const DGAlgebra& g);
DGAlgebra dgalgebra_from_json(const std::string& text);

}  // namespace ogradlab
