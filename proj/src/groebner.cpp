#include "ogradlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ogradlab {

IdealBasis::IdealBasis(RingPtr r, std::vector<Polynomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& p : gens) {
    require_same_ring(ring, p.ring());
    if (p.is_zero()) throw std::invalid_argument("zero generator in ideal basis");
  }
}

namespace {

struct SugarPoly {
  Polynomial p;  // monic
  int sugar;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

// Reduce fully, tracking the sugar degree of the result.
SugarPoly reduce_full(Polynomial p, int sugar, const std::vector<SugarPoly>& basis,
                      const std::vector<char>& alive) {
  RingPtr ring = p.ring();
  Polynomial work = std::move(p);
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& t = work.leading_term();
    int reducer = -1;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (!alive.empty() && !alive[k]) continue;
      if (mono_divides(basis[k].p.leading_monomial(), t.m)) {
        reducer = static_cast<int>(k);
        break;
      }
    }
    if (reducer < 0) {
      remainder.push_back(t);
      work -= Polynomial::monomial(ring, t.m, t.c);
      continue;
    }
    const SugarPoly& g = basis[reducer];
    Monomial shift = mono_div(t.m, g.p.leading_monomial());
    sugar = std::max(sugar, g.sugar + shift.deg);
    work = work.reduce_step(t.c, shift, g.p);
  }
  return {Polynomial(ring, std::move(remainder)), sugar};
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_coeff());
}

// Gebauer-Moeller update of the pair set for a newly appended element.
void update_pairs(std::vector<Pair>& pairs, const std::vector<SugarPoly>& g,
                  int t) {
  const Monomial& lt_t = g[t].p.leading_monomial();
  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (int i = 0; i < t; ++i) {
    Monomial l = mono_lcm(g[i].p.leading_monomial(), lt_t);
    int sug = std::max(g[i].sugar + l.deg - g[i].p.leading_monomial().deg,
                       g[t].sugar + l.deg - lt_t.deg);
    fresh.push_back({i, t, l, sug});
  }
  // M criterion: drop (i,t) when some other new lcm strictly divides it.
  std::vector<char> drop(fresh.size(), 0);
  for (size_t a = 0; a < fresh.size(); ++a) {
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[b]) continue;
      if (!(fresh[b].lcm == fresh[a].lcm) &&
          mono_divides(fresh[b].lcm, fresh[a].lcm)) {
        drop[a] = 1;
        break;
      }
    }
  }
  // F criterion: among equal lcms keep the first.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (size_t b = 0; b < a; ++b) {
      if (drop[b]) continue;
      if (fresh[b].lcm == fresh[a].lcm) {
        drop[a] = 1;
        break;
      }
    }
  }
  // Buchberger's coprime criterion (valid for ideals).
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    if (mono_coprime(g[fresh[a].i].p.leading_monomial(), lt_t)) drop[a] = 1;
  }
  // B criterion on the old pairs.
  std::vector<Pair> kept;
  kept.reserve(pairs.size());
  for (const Pair& pr : pairs) {
    Monomial li = mono_lcm(g[pr.i].p.leading_monomial(), lt_t);
    Monomial lj = mono_lcm(g[pr.j].p.leading_monomial(), lt_t);
    bool redundant = mono_divides(lt_t, pr.lcm) && !(li == pr.lcm) &&
                     !(lj == pr.lcm);
    if (!redundant) kept.push_back(pr);
  }
  for (size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) kept.push_back(fresh[a]);
  pairs = std::move(kept);
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::monomial(f.ring(), mono_div(l, f.leading_monomial()),
                                      Rational(1) / f.leading_coeff()) *
                 f;
  Polynomial b = Polynomial::monomial(g.ring(), mono_div(l, g.leading_monomial()),
                                      Rational(1) / g.leading_coeff()) *
                 g;
  return a - b;
}

GroebnerBasis buchberger(const IdealBasis& basis) {
  const RingPtr& ring = basis.ring;
  const TermOrder& ord = ring->order();

  std::vector<SugarPoly> g;
  std::vector<Pair> pairs;
  // Deterministic seeding: input order, zero generators rejected upstream.
  for (const auto& p : basis.gens) {
    SugarPoly sp{make_monic(p), p.total_degree()};
    std::vector<char> none;
    SugarPoly red = reduce_full(sp.p, sp.sugar, g, none);
    if (red.p.is_zero()) continue;
    g.push_back({make_monic(red.p), red.sugar});
    update_pairs(pairs, g, static_cast<int>(g.size()) - 1);
  }

  while (!pairs.empty()) {
    // sugar strategy: minimal sugar, then minimal lcm, then lowest indices
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair &a = pairs[k], &b = pairs[best];
      int c = a.sugar != b.sugar ? (a.sugar < b.sugar ? -1 : 1)
                                 : mono_cmp(ord, a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i))))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    Polynomial s = s_polynomial(g[pr.i].p, g[pr.j].p);
    if (s.is_zero()) continue;
    std::vector<char> none;
    SugarPoly red = reduce_full(s, pr.sugar, g, none);
    if (red.p.is_zero()) continue;
    g.push_back({make_monic(red.p), red.sugar});
    update_pairs(pairs, g, static_cast<int>(g.size()) - 1);
  }

  // interreduce: drop elements whose leading term another one divides, then
  // tail-reduce each survivor against the others
  std::vector<char> alive(g.size(), 1);
  for (size_t a = 0; a < g.size(); ++a) {
    for (size_t b = 0; b < g.size(); ++b) {
      if (a == b || !alive[a] || !alive[b]) continue;
      if (mono_divides(g[b].p.leading_monomial(), g[a].p.leading_monomial())) {
        // equal leading monomials: keep the earlier element
        if (g[b].p.leading_monomial() == g[a].p.leading_monomial() && b > a)
          continue;
        alive[a] = 0;
        break;
      }
    }
  }
  std::vector<SugarPoly> minimal;
  for (size_t a = 0; a < g.size(); ++a)
    if (alive[a]) minimal.push_back(g[a]);

  std::vector<Polynomial> reduced;
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<char> mask(minimal.size(), 1);
    mask[a] = 0;
    SugarPoly r = reduce_full(minimal[a].p, minimal[a].sugar, minimal, mask);
    if (!r.p.is_zero()) reduced.push_back(make_monic(r.p));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x,
                                                const Polynomial& y) {
    return mono_cmp(ord, x.leading_monomial(), y.leading_monomial()) > 0;
  });
  return {ring, ord, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  require_same_ring(p.ring(), gb.ring);
  Polynomial work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& t = work.leading_term();
    const Polynomial* reducer = nullptr;
    for (const auto& gpoly : gb.gens)
      if (mono_divides(gpoly.leading_monomial(), t.m)) {
        reducer = &gpoly;
        break;
      }
    if (!reducer) {
      remainder.push_back(t);
      work -= Polynomial::monomial(work.ring(), t.m, t.c);
      continue;
    }
    work = work.reduce_step(t.c / reducer->leading_coeff(),
                            mono_div(t.m, reducer->leading_monomial()), *reducer);
  }
  return Polynomial(p.ring(), std::move(remainder));
}

bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
  for (size_t i = 0; i < gb.gens.size(); ++i)
    for (size_t j = i + 1; j < gb.gens.size(); ++j)
      if (!normal_form(s_polynomial(gb.gens[i], gb.gens[j]), gb).is_zero())
        return false;
  return true;
}

bool is_unit_ideal(const GroebnerBasis& gb) {
  for (const auto& p : gb.gens)
    if (p.leading_monomial().is_one()) return true;
  return false;
}

namespace {

using Mask = std::uint32_t;

void independent_set_search(const std::vector<Mask>& supports, size_t idx,
                            Mask allowed, int nvars, int& best) {
  if (static_cast<int>(__builtin_popcount(allowed)) <= best) return;
  if (idx == supports.size()) {
    best = std::max(best, static_cast<int>(__builtin_popcount(allowed)));
    return;
  }
  Mask s = supports[idx];
  if ((s & allowed) != s) {
    independent_set_search(supports, idx + 1, allowed, nvars, best);
    return;
  }
  for (int v = 0; v < nvars; ++v) {
    if (!(s & (Mask(1) << v))) continue;
    independent_set_search(supports, idx + 1, allowed & ~(Mask(1) << v), nvars,
                           best);
  }
}

}  // namespace

int krull_dimension(const GroebnerBasis& gb) {
  if (is_unit_ideal(gb)) return -1;  // empty variety
  const int n = gb.ring->nvars();
  std::set<Mask> uniq;
  for (const auto& p : gb.gens) {
    const Monomial& m = p.leading_monomial();
    Mask s = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[i] > 0) s |= Mask(1) << i;
    uniq.insert(s);
  }
  // keep only inclusion-minimal supports
  std::vector<Mask> supports;
  for (Mask s : uniq) {
    bool minimal = true;
    for (Mask t : uniq)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (minimal) supports.push_back(s);
  }
  int best = -1;
  independent_set_search(supports, 0, (Mask(1) << n) - 1, n, best);
  return best;
}

namespace {

void count_standard(const GroebnerBasis& gb, Monomial& m, int var, int left,
                    std::vector<long>& acc) {
  bool divisible = false;
  for (const auto& p : gb.gens)
    if (mono_divides(p.leading_monomial(), m)) {
      divisible = true;
      break;
    }
  if (divisible) return;
  acc[m.deg] += 1;
  if (left == 0) return;
  for (int v = var; v < m.n; ++v) {
    m.e[v] += 1;
    m.deg += 1;
    count_standard(gb, m, v, left - 1, acc);
    m.e[v] -= 1;
    m.deg -= 1;
  }
}

}  // namespace

std::vector<long> standard_monomial_counts(const GroebnerBasis& gb, int up_to) {
  std::vector<long> acc(up_to + 1, 0);
  Monomial m = Monomial::one(gb.ring->nvars());
  count_standard(gb, m, 0, up_to, acc);
  return acc;
}

HilbertData hilbert_function(const GroebnerBasis& gb, int up_to) {
  for (const auto& p : gb.gens)
    if (!is_homogeneous(p))
      throw std::invalid_argument("hilbert_function needs a homogeneous ideal");
  HilbertData h;
  h.dimension = krull_dimension(gb);
  h.values = standard_monomial_counts(gb, up_to);
  return h;
}

std::optional<long> quotient_vector_space_dimension(const GroebnerBasis& gb) {
  const int n = gb.ring->nvars();
  if (is_unit_ideal(gb)) return 0;
  // finite iff every variable has a pure-power leading term
  int bound = 0;
  for (int v = 0; v < n; ++v) {
    int cap = -1;
    for (const auto& p : gb.gens) {
      const Monomial& m = p.leading_monomial();
      if (m.e[v] > 0 && m.e[v] == m.deg) {
        cap = cap < 0 ? m.e[v] : std::min(cap, static_cast<int>(m.e[v]));
      }
    }
    if (cap < 0) return std::nullopt;
    bound += cap - 1;
  }
  auto counts = standard_monomial_counts(gb, bound);
  long total = 0;
  for (long c : counts) total += c;
  return total;
}

bool contained_in(const IdealBasis& a, const GroebnerBasis& gb) {
  for (const auto& p : a.gens)
    if (!normal_form(p, gb).is_zero()) return false;
  return true;
}

}  // namespace ogradlab
