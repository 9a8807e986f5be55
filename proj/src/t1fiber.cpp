#include "ogradlab/t1fiber.hpp"

#include "ogradlab/model.hpp"

namespace ogradlab {

namespace {

RingPtr fiber_ring() { return make_ring({"x", "y", "z"}); }

PolyMatrix bbar(const RingPtr& ring) {
  PolyMatrix b(ring, 2, 2);
  b.at(0, 0) = Polynomial::variable(ring, 0);
  b.at(0, 1) = Polynomial::variable(ring, 1);
  b.at(1, 0) = Polynomial::variable(ring, 1);
  b.at(1, 1) = Polynomial::variable(ring, 2);
  return b;
}

// Extract the coefficient matrix of a bilinear expression with respect to
// auxiliary variables aux_first..aux_first+aux_count-1, mapping the x,y,z
// part back into the fiber ring.
Polynomial coefficient_of(const Polynomial& p, int var, const RingPtr& target) {
  Polynomial d = derivative(p, var);
  std::vector<int> var_map(p.ring()->nvars(), -1);
  var_map[0] = 0;
  var_map[1] = 1;
  var_map[2] = 2;
  for (const auto& t : d.terms())
    for (int i = 3; i < t.m.n; ++i)
      if (t.m.e[i] > 0)
        throw std::logic_error("expression is not linear in the auxiliary vars");
  return map_into(d, target, var_map);
}

}  // namespace

StrandBuild build_strand(Strand tag) {
  RingPtr F = fiber_ring();
  StrandBuild out;
  out.complex.ring = F;
  out.complex.strand = tag;
  out.uncorrected_row_defect = Polynomial(F);

  if (tag == Strand::III) {
    // gamma = t (0 1 / -1 0) antisymmetric; the strand is t -> Bbar gamma
    RingPtr aux = make_ring({"x", "y", "z", "t"});
    PolyMatrix b = bbar(aux);
    PolyMatrix gamma(aux, 2, 2);
    gamma.at(0, 1) = Polynomial::variable(aux, 3);
    gamma.at(1, 0) = -Polynomial::variable(aux, 3);
    PolyMatrix prod = b * gamma;
    PolyMatrix col(F, 4, 1);
    int k = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        col.at(k++, 0) = coefficient_of(prod.at(i, j), 3, F);
    out.complex.middle_rank = 1;
    out.complex.right = col;
    out.complex.left = PolyMatrix(F, 4, 0);
    out.composition_zero = true;
    return out;
  }

  // the row comes from the symmetry defect of alpha * Bbar
  RingPtr auxa = make_ring({"x", "y", "z", "e11", "e12", "e21", "e22"});
  PolyMatrix b = bbar(auxa);
  PolyMatrix alpha(auxa, 2, 2);
  alpha.at(0, 0) = Polynomial::variable(auxa, 3);
  alpha.at(0, 1) = Polynomial::variable(auxa, 4);
  alpha.at(1, 0) = Polynomial::variable(auxa, 5);
  alpha.at(1, 1) = Polynomial::variable(auxa, 6);
  PolyMatrix ab = alpha * b;
  Polynomial defect = ab.at(0, 1) - ab.at(1, 0);
  PolyMatrix row(F, 1, 4);
  for (int k = 0; k < 4; ++k) row.at(0, k) = coefficient_of(defect, 3 + k, F);
  out.complex.right = row;
  out.complex.middle_rank = 4;

  if (tag == Strand::II) {
    out.complex.left = PolyMatrix(F, 4, 0);
    out.composition_zero = true;
    return out;
  }

  // strand I: left matrix gamma' -> Bbar gamma', gamma' symmetric
  RingPtr auxg = make_ring({"x", "y", "z", "g11", "g12", "g22"});
  PolyMatrix bg = bbar(auxg);
  PolyMatrix gp(auxg, 2, 2);
  gp.at(0, 0) = Polynomial::variable(auxg, 3);
  gp.at(0, 1) = Polynomial::variable(auxg, 4);
  gp.at(1, 0) = Polynomial::variable(auxg, 4);
  gp.at(1, 1) = Polynomial::variable(auxg, 5);
  PolyMatrix img = bg * gp;
  PolyMatrix left(F, 4, 3);
  int r = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      for (int c = 0; c < 3; ++c)
        left.at(r, c) = coefficient_of(img.at(i, j), 3 + c, F);
      ++r;
    }
  out.complex.left = left;
  PolyMatrix comp = row * left;
  out.composition_zero = comp.is_zero();

  // the variant with +y in the last slot fails to be a complex; keep the
  // middle entry of its composition as the reported defect
  PolyMatrix bad = row;
  bad.at(0, 3) = -row.at(0, 3);
  PolyMatrix bad_comp = bad * left;
  out.uncorrected_row_defect = bad_comp.at(0, 1);
  return out;
}

H1Result compute_h1(const StrandBuild& strand, int hilbert_bound) {
  const RingPtr& F = strand.complex.ring;
  H1Result res;
  res.strand = strand.complex.strand;

  if (strand.complex.strand == Strand::III) {
    PolyMatrix ker = syzygy_basis(strand.complex.right);
    res.zero_module = ker.cols() == 0;
    res.pres = ModulePresentation{F, strand.complex.right.rows(),
                                  PolyMatrix(F, strand.complex.right.rows(), 0),
                                  PolyMatrix(F, 0, 0)};
    return res;
  }

  if (strand.complex.strand == Strand::II) {
    // cokernel of the row: cyclic module O/(row entries)
    PolyMatrix gens = PolyMatrix::identity(F, 1);
    PolyMatrix im(F, 1, 4);
    for (int k = 0; k < 4; ++k) im.at(0, k) = strand.complex.right.at(0, k);
    res.pres = quotient_presentation(gens, im);
    res.hilbert_prefix = subquotient_hilbert(res.pres, hilbert_bound);
    res.hilbert_is_skyscraper = res.hilbert_prefix[0] == 1;
    for (size_t d = 1; d < res.hilbert_prefix.size(); ++d)
      if (res.hilbert_prefix[d] != 0) res.hilbert_is_skyscraper = false;
    std::vector<Polynomial> row_entries;
    for (int k = 0; k < 4; ++k)
      if (!strand.complex.right.at(0, k).is_zero())
        row_entries.push_back(strand.complex.right.at(0, k));
    IdealBasis row_ideal(F, row_entries);
    IdealBasis max_ideal(F, {Polynomial::variable(F, 0),
                             Polynomial::variable(F, 1),
                             Polynomial::variable(F, 2)});
    res.row_ideal_is_maximal = equal_ideals(row_ideal, max_ideal);
    return res;
  }

  // strand I
  PolyMatrix ker = syzygy_basis(strand.complex.right);
  res.pres = quotient_presentation(ker, strand.complex.left);
  res.hilbert_prefix = subquotient_hilbert(res.pres, hilbert_bound);
  res.hilbert_is_cone = true;
  for (size_t d = 0; d < res.hilbert_prefix.size(); ++d)
    if (res.hilbert_prefix[d] != 2 * static_cast<long>(d) + 1)
      res.hilbert_is_cone = false;

  Polynomial cone = parse_poly(F, "x*z - y^2");
  res.annihilator_is_cone =
      equal_ideals(annihilator(res.pres), IdealBasis(F, {cone}));
  res.cyclic_one_generator = minimal_generator_count(res.pres) == 1;

  // the degree-zero kernel element generates; x, y, z act nontrivially on it
  {
    VecPoly c(F, 4);
    c.comps[0] = Polynomial::constant(F, 1);
    c.comps[3] = Polynomial::constant(F, 1);
    PolyMatrix rc = strand.complex.right * columns_to_matrix(F, 4, {c});
    bool in_kernel = rc.is_zero();
    std::vector<VecPoly> im_cols;
    for (int j = 0; j < strand.complex.left.cols(); ++j)
      im_cols.push_back(column_of(strand.complex.left, j));
    ModuleGB im_gb = module_buchberger(F, 4, im_cols);
    bool acts = true;
    for (int v = 0; v < 3; ++v) {
      VecPoly xv(F, 4);
      Polynomial var = Polynomial::variable(F, v);
      for (int i = 0; i < 4; ++i) xv.comps[i] = var * c.comps[i];
      if (module_member(xv, im_gb)) acts = false;
    }
    // xz - y^2 kills the generator
    VecPoly qc(F, 4);
    for (int i = 0; i < 4; ++i) qc.comps[i] = cone * c.comps[i];
    bool killed = module_member(qc, im_gb);
    res.nothing_smaller_annihilates = in_kernel && acts && killed;
  }
  return res;
}

HilbertData hypersurface_t1(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("hypersurface_t1: zero equation");
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> gens = {f};
  for (int v = 0; v < ring->nvars(); ++v) {
    Polynomial d = derivative(f, v);
    if (!d.is_zero()) gens.push_back(d);
  }
  auto gb = buchberger(IdealBasis(ring, gens));
  HilbertData h;
  h.dimension = krull_dimension(gb);
  auto total = quotient_vector_space_dimension(gb);
  int bound = 8;
  if (total) {
    // large enough to see the whole finite quotient
    bound = 1;
    auto counts = standard_monomial_counts(gb, 1);
    while (true) {
      counts = standard_monomial_counts(gb, bound);
      long sum = 0;
      for (long c : counts) sum += c;
      if (sum == *total && counts.back() == 0) break;
      ++bound;
    }
  }
  h.values = standard_monomial_counts(gb, bound);
  return h;
}

std::optional<long> total_dimension(const HilbertData& h) {
  if (h.dimension > 0) return std::nullopt;
  long sum = 0;
  for (long v : h.values) sum += v;
  return sum;
}

PurityConsequence purity_consequence_check() {
  PurityConsequence out;
  RingPtr F = fiber_ring();
  out.cone_support_dimension =
      krull_dimension(buchberger(IdealBasis(F, {parse_poly(F, "x*z - y^2")})));
  out.skyscraper_dimension = krull_dimension(buchberger(
      IdealBasis(F, {Polynomial::variable(F, 0), Polynomial::variable(F, 1),
                     Polynomial::variable(F, 2)})));
  RingPtr A = make_ring({"x1", "x2", "x3"});
  auto t1 = hypersurface_t1(parse_poly(A, "x1^2 + x2^2 + x3^2"));
  out.a1_tjurina_dimension = total_dimension(t1).value_or(-1);
  out.consistent = out.cone_support_dimension == 2 &&
                   out.skyscraper_dimension == 0 && out.a1_tjurina_dimension == 1;
  out.recorded_assumption =
      "fiberwise evidence only: flatness of the restricted complex over the "
      "base and the vanishing of the skyscraper summand's pushforward are "
      "assumed, not recomputed";
  return out;
}

}  // namespace ogradlab
