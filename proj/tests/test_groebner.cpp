#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogradlab/groebner.hpp"
#include "ogradlab/rng.hpp"

using namespace ogradlab;

namespace {

IdealBasis ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_poly(ring, g));
  return IdealBasis(ring, std::move(ps));
}

// Exhaustive independent-set oracle for the leading-term ideal.
int brute_force_dimension(const GroebnerBasis& gb) {
  const int n = gb.ring->nvars();
  if (is_unit_ideal(gb)) return -1;
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& p : gb.gens) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (p.leading_monomial().e[v] > 0 && !(s & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace

TEST_CASE("already reduced basis is returned as-is") {
  auto R = make_ring({"x", "y"});
  auto gb = buchberger(ideal(R, {"x", "y"}));
  REQUIRE(gb.gens.size() == 2);
  CHECK(gb.gens[0] == parse_poly(R, "x"));
  CHECK(gb.gens[1] == parse_poly(R, "y"));
}

TEST_CASE("twisted cubic under lex eliminates to y^3 - z^2") {
  auto R = make_ring({"x", "y", "z"}, {Order::Lex, 0});
  auto gb = buchberger(ideal(R, {"x^2 - y", "x^3 - z"}));
  // elimination oracle: y = x^2, z = x^3 kills every basis element
  auto x = parse_poly(R, "x");
  std::vector<Polynomial> imgs{x, parse_poly(R, "x^2"), parse_poly(R, "x^3")};
  bool found = false;
  for (const auto& g : gb.gens) {
    CHECK(substitute(g, imgs).is_zero());
    if (g == parse_poly(R, "y^3 - z^2")) found = true;
  }
  CHECK(found);
  REQUIRE(gb.gens.size() == 4);
  CHECK(gb.gens[0] == parse_poly(R, "x^2 - y"));
  CHECK(gb.gens[1] == parse_poly(R, "x*y - z"));
  CHECK(gb.gens[2] == parse_poly(R, "x*z - y^2"));
  CHECK(gb.gens[3] == parse_poly(R, "y^3 - z^2"));
  CHECK(all_s_polynomials_reduce_to_zero(gb));
}

TEST_CASE("buchberger is idempotent") {
  auto R = make_ring({"x", "y", "z"});
  auto gb = buchberger(ideal(R, {"x^2 - y*z + 1", "x*y - 2*z", "y^3 - x"}));
  auto again = buchberger(IdealBasis(R, gb.gens));
  REQUIRE(again.gens.size() == gb.gens.size());
  for (size_t i = 0; i < gb.gens.size(); ++i) CHECK(again.gens[i] == gb.gens[i]);
}

TEST_CASE("normal form basics") {
  auto R = make_ring({"x", "y", "z"});
  auto gb = buchberger(ideal(R, {"x", "y", "z"}));
  CHECK(normal_form(parse_poly(R, "x"), gb).is_zero());
  CHECK(normal_form(parse_poly(R, "1"), gb) == parse_poly(R, "1"));
  CHECK(normal_form(parse_poly(R, "x*y^2 + 4"), gb) == parse_poly(R, "4"));
}

TEST_CASE("normal form is idempotent and linear") {
  auto R = make_ring({"x", "y", "z"});
  auto gb = buchberger(ideal(R, {"x^2 - y", "y^2 - z"}));
  Sampler s(kDefaultSeed);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Term> ta, tb;
    for (int t = 0; t < 4; ++t) {
      Monomial m = Monomial::one(3);
      for (int k = 0; k < 3; ++k) {
        int v = static_cast<int>(s.uniform(0, 2));
        m.e[v] += static_cast<int16_t>(s.uniform(0, 2));
      }
      m.deg = m.e[0] + m.e[1] + m.e[2];
      ta.push_back({m, s.rational()});
      tb.push_back({m, s.rational()});
    }
    Polynomial p(R, ta), q(R, tb);
    auto np = normal_form(p, gb);
    CHECK(normal_form(np, gb) == np);
    CHECK(normal_form(p + q, gb) == normal_form(normal_form(p, gb) + normal_form(q, gb), gb));
  }
}

TEST_CASE("krull dimension basics") {
  auto R = make_ring({"x", "y", "z"});
  CHECK(krull_dimension(buchberger(ideal(R, {"x", "y", "z"}))) == 0);
  CHECK(krull_dimension(buchberger(ideal(R, {"1"}))) == -1);
  CHECK(krull_dimension(buchberger(ideal(R, {"x*z - y^2"}))) == 2);
  CHECK(krull_dimension(buchberger(IdealBasis(R, {}))) == 3);
}

TEST_CASE("krull dimension matches exhaustive search on random monomial ideals") {
  Sampler s(kDefaultSeed + 7);
  for (int rep = 0; rep < 60; ++rep) {
    int n = static_cast<int>(s.uniform(2, 12));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    auto R = make_ring(names);
    std::vector<Polynomial> gens;
    int g = static_cast<int>(s.uniform(1, 6));
    for (int k = 0; k < g; ++k) {
      Monomial m = Monomial::one(n);
      int d = static_cast<int>(s.uniform(1, 3));
      for (int j = 0; j < d; ++j) {
        int v = static_cast<int>(s.uniform(0, n - 1));
        m.e[v] += 1;
        m.deg += 1;
      }
      gens.push_back(Polynomial::monomial(R, m, Rational(1)));
    }
    auto gb = buchberger(IdealBasis(R, gens));
    CHECK(krull_dimension(gb) == brute_force_dimension(gb));
  }
}

TEST_CASE("hilbert functions") {
  auto R = make_ring({"x", "y", "z"});
  auto h0 = hilbert_function(buchberger(ideal(R, {"x", "y", "z"})), 5);
  CHECK(h0.dimension == 0);
  CHECK(h0.values == std::vector<long>({1, 0, 0, 0, 0, 0}));

  auto h1 = hilbert_function(buchberger(ideal(R, {"x*z - y^2"})), 8);
  CHECK(h1.dimension == 2);
  for (int d = 0; d <= 8; ++d) CHECK(h1.values[d] == 2 * d + 1);

  auto R1 = make_ring({"x"});
  auto h2 = hilbert_function(buchberger(IdealBasis(R1, {})), 6);
  CHECK(h2.values == std::vector<long>(7, 1));

  CHECK_THROWS_AS(hilbert_function(buchberger(ideal(R, {"x^2 - y"})), 3),
                  std::invalid_argument);
}

TEST_CASE("finite quotient dimensions") {
  auto R = make_ring({"x", "y"});
  CHECK(quotient_vector_space_dimension(buchberger(ideal(R, {"x", "y^2"}))) == 2);
  CHECK(quotient_vector_space_dimension(buchberger(ideal(R, {"x^2", "y^3"}))) == 6);
  CHECK(!quotient_vector_space_dimension(buchberger(ideal(R, {"x"}))).has_value());
  CHECK(quotient_vector_space_dimension(buchberger(ideal(R, {"1"}))) == 0);
}

TEST_CASE("containment certificates") {
  auto R = make_ring({"x", "y"});
  auto gb = buchberger(ideal(R, {"x^2 - y^2", "x*y"}));
  CHECK(contained_in(ideal(R, {"x^3", "y^3 + x^2*y"}), gb));
  CHECK(!contained_in(ideal(R, {"x"}), gb));
}
