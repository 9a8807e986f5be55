#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ogradlab {

// Exact rational scalar. GMP keeps fractions reduced with positive
// denominators, which is exactly the canonical form we rely on for
// byte-stable serialization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view s);

}  // namespace ogradlab

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;

  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
