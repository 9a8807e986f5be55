#pragma once

#include "ogradlab/modulegb.hpp"

namespace ogradlab {

// Fiber computation over a fixed Lagrangian chart: coordinates x, y, z with
// Bbar = (x y / y z). The three strands of the restricted two-term complex
// are built from the block formulas for d0 and d1, not transcribed.
enum class Strand { I, II, III };

struct FiberComplex {
  RingPtr ring;  // Q[x, y, z]
  Strand strand = Strand::I;
  PolyMatrix left;    // strand I only: the 4x3 matrix gamma' -> Bbar gamma'
  int middle_rank = 0;
  PolyMatrix right;   // strand I, II: 1x4 row; strand III: 4x1 column
};

struct StrandBuild {
  FiberComplex complex;
  bool composition_zero = false;  // right . left == 0 (strand I)
  // middle entry of the composition when the last row entry is flipped to
  // +y, the uncorrected variant; kept as evidence for the report
  Polynomial uncorrected_row_defect;
};

StrandBuild build_strand(Strand tag);

struct H1Result {
  Strand strand;
  ModulePresentation pres;
  bool zero_module = false;
  std::vector<long> hilbert_prefix;
  bool hilbert_is_skyscraper = false;      // (1, 0, 0, ...)
  bool hilbert_is_cone = false;            // (1, 3, 5, ...)
  bool row_ideal_is_maximal = false;       // strand II: (x, y, z) both ways
  bool annihilator_is_cone = false;        // strand I: exactly (xz - y^2)
  bool cyclic_one_generator = false;       // strand I
  bool nothing_smaller_annihilates = false;  // x, y, z all act nontrivially
};

H1Result compute_h1(const StrandBuild& strand, int hilbert_bound = 6);

// T^1 of a hypersurface {f = 0}: quotient by the Tjurina ideal
// (f, all partials), with graded standard-monomial counts.
HilbertData hypersurface_t1(const Polynomial& f);

std::optional<long> total_dimension(const HilbertData& h);

struct PurityConsequence {
  int cone_support_dimension = -2;   // dim Q[x,y,z]/(xz - y^2), expect 2
  int skyscraper_dimension = -2;     // dim at the maximal ideal, expect 0
  long a1_tjurina_dimension = -1;    // T^1 of x1^2+x2^2+x3^2, expect 1
  bool consistent = false;
  // fiber evidence only; the glueing over the base and the vanishing of the
  // skyscraper summand's pushforward are assumptions recorded in the report
  std::string recorded_assumption;
};

PurityConsequence purity_consequence_check();

}  // namespace ogradlab
