#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ogradlab/linalg.hpp"
#include "ogradlab/ring.hpp"

namespace ogradlab {

// Dense exponent vector, capacity-bounded: every ring in this project has at
// most kMaxVars variables, so a flat array beats a heap-allocated vector in
// the reduction loops.
struct Monomial {
  std::array<int16_t, kMaxVars> e{};
  int16_t n = 0;
  int32_t deg = 0;

  static Monomial one(int nvars) {
    Monomial m;
    m.n = static_cast<int16_t>(nvars);
    return m;
  }
  static Monomial var(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = static_cast<int16_t>(exp);
    m.deg = exp;
    return m;
  }

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const {
    if (n != o.n || deg != o.deg) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] != o.e[i]) return false;
    return true;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, exact
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// -1, 0, +1 with respect to the given order; a <,=,> b.
int mono_cmp(const TermOrder& ord, const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

// Immutable-by-convention sparse polynomial over Q. Terms are kept strictly
// descending in the ring order with no zero coefficients, so equal
// polynomials have identical representations and serialize identically.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Rational& c);
  static Polynomial variable(const RingPtr& ring, int i, int exp = 1);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m,
                             const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Rational& leading_coeff() const { return leading_term().c; }
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  // this - c * m * g, the Buchberger reduction step.
  Polynomial reduce_step(const Rational& c, const Monomial& m,
                         const Polynomial& g) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void normalize();
};

Polynomial operator*(const Rational& c, const Polynomial& p);
Polynomial pow(const Polynomial& p, int k);
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int maxdeg);
Polynomial truncate_degree(const Polynomial& p, int maxdeg);

Polynomial homogeneous_component(const Polynomial& p, int d);
bool is_homogeneous(const Polynomial& p);

struct InitialForm {
  int order;
  Polynomial form;
};
// Lowest-degree homogeneous part; throws on the zero polynomial.
InitialForm initial_form(const Polynomial& p);

Polynomial derivative(const Polynomial& p, int var);
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& imgs);
Polynomial substitute_truncated(const Polynomial& p,
                                const std::vector<Polynomial>& imgs,
                                int maxdeg);
Rational eval(const Polynomial& p, const std::vector<Rational>& point);

// Raised by eval_mod_prime when a coefficient denominator vanishes mod p;
// callers resample the point or the prime.
struct ModularEvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::uint64_t eval_mod_prime(const Polynomial& p,
                             const std::vector<std::uint64_t>& point,
                             std::uint64_t prime);

// Canonical text: terms in ring order, "c*x^2*y - z + 1/2" style. The parser
// ignores whitespace and accepts any term order.
std::string to_string(const Polynomial& p);
Polynomial parse_poly(const RingPtr& ring, std::string_view text);

// Exact division by a single polynomial: quotient when divisor*q == p.
std::optional<Polynomial> divide_exact(const Polynomial& p,
                                       const Polynomial& divisor);

// GCD for inputs that are univariate in the same single variable.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b);

// Coefficient vector of p in the monomial list `basis` (each entry of p must
// appear in basis); used for span/rank arguments over Q.
VecQ coefficient_vector(const Polynomial& p, const std::vector<Monomial>& basis);
std::vector<Monomial> merge_monomial_support(const std::vector<Polynomial>& ps);

}  // namespace ogradlab
