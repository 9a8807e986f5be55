#include "ogradlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ogradlab {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.n; ++i) r.e[i] = static_cast<int16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.n; ++i) r.e[i] = static_cast<int16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (int i = 0; i < a.n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

namespace {

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int mono_cmp(const TermOrder& ord, const Monomial& a, const Monomial& b) {
  switch (ord.tag) {
    case Order::Degrevlex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = a.n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    case Order::Lex:
      return cmp_lex_range(a, b, 0, a.n);
    case Order::Block: {
      int c = cmp_degrevlex_range(a, b, 0, ord.block_split);
      if (c != 0) return c;
      return cmp_degrevlex_range(a, b, ord.block_split, a.n);
    }
  }
  return 0;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const TermOrder& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(ord, a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && ogradlab::is_zero(out.back().c)) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
  Polynomial p(ring);
  if (!ogradlab::is_zero(c)) p.terms_.push_back({Monomial::one(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int i, int exp) {
  if (i < 0 || i >= ring->nvars())
    throw std::invalid_argument("variable index out of range");
  Polynomial p(ring);
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp == 0) return constant(ring, 1);
  p.terms_.push_back({Monomial::var(ring->nvars(), i, exp), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m,
                                const Rational& c) {
  Polynomial p(ring);
  if (!ogradlab::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

// Merge of two term lists sorted descending; `sb` scales the second.
std::vector<Term> merged(const TermOrder& ord, const std::vector<Term>& a,
                         const std::vector<Term>& b, const Rational* sb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_cmp(ord, a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (sb) t.c *= *sb;
      out.push_back(std::move(t));
    } else {
      Rational s = sb ? Rational(a[i].c + *sb * b[j].c) : Rational(a[i].c + b[j].c);
      if (!is_zero(s)) out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    if (sb) t.c *= *sb;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merged(ring_->order(), terms_, o.terms_, nullptr);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  static const Rational minus_one(-1);
  terms_ = merged(ring_->order(), terms_, o.terms_, &minus_one);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      prods.push_back({mono_mul(ta.m, tb.m), ta.c * tb.c});
  r.terms_ = std::move(prods);
  r.normalize();
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c)
      return false;
  return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (ogradlab::is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Polynomial Polynomial::reduce_step(const Rational& c, const Monomial& m,
                                   const Polynomial& g) const {
  // this - c * m * g; shifting g by a monomial preserves its term order.
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& t : g.terms_) shifted.push_back({mono_mul(t.m, m), t.c});
  Rational mc = -c;
  Polynomial r(ring_);
  r.terms_ = merged(ring_->order(), terms_, shifted, &mc);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = Polynomial::constant(p.ring(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

Polynomial truncate_degree(const Polynomial& p, int maxdeg) {
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.m.deg <= maxdeg) keep.push_back(t);
  return Polynomial(p.ring(), std::move(keep));
}

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int maxdeg) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Term> prods;
  for (const auto& ta : a.terms()) {
    if (ta.m.deg > maxdeg) continue;
    for (const auto& tb : b.terms()) {
      if (ta.m.deg + tb.m.deg > maxdeg) continue;
      prods.push_back({mono_mul(ta.m, tb.m), ta.c * tb.c});
    }
  }
  return Polynomial(a.ring(), std::move(prods));
}

Polynomial homogeneous_component(const Polynomial& p, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.m.deg == d) keep.push_back(t);
  return Polynomial(p.ring(), std::move(keep));
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  int d = p.terms().front().m.deg;
  for (const auto& t : p.terms())
    if (t.m.deg != d) return false;
  return true;
}

InitialForm initial_form(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("initial form of zero polynomial");
  int nu = p.total_degree();
  for (const auto& t : p.terms()) nu = std::min(nu, static_cast<int>(t.m.deg));
  return {nu, homogeneous_component(p, nu)};
}

Polynomial derivative(const Polynomial& p, int var) {
  if (var < 0 || var >= p.ring()->nvars())
    throw std::invalid_argument("derivative: bad variable");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.m.e[var] == 0) continue;
    Term d = t;
    d.c *= t.m.e[var];
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(p.ring(), std::move(out));
}

namespace {

template <class MulFn>
Polynomial substitute_impl(const Polynomial& p,
                           const std::vector<Polynomial>& imgs, MulFn mul) {
  const int n = p.ring()->nvars();
  if (static_cast<int>(imgs.size()) != n)
    throw std::invalid_argument("substitute: need one image per variable");
  RingPtr target = imgs.empty() ? p.ring() : imgs.front().ring();
  for (const auto& q : imgs) require_same_ring(target, q.ring());
  // var -> list of powers, extended on demand
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i)
    powers[i].push_back(Polynomial::constant(target, 1));
  auto power = [&](int i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k)
      powers[i].push_back(mul(powers[i].back(), imgs[i]));
    return powers[i][k];
  };
  Polynomial acc(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (int i = 0; i < n; ++i)
      if (t.m.e[i] > 0) prod = mul(prod, power(i, t.m.e[i]));
    acc += prod;
  }
  return acc;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& imgs) {
  return substitute_impl(p, imgs,
                         [](const Polynomial& a, const Polynomial& b) { return a * b; });
}

Polynomial substitute_truncated(const Polynomial& p,
                                const std::vector<Polynomial>& imgs, int maxdeg) {
  return substitute_impl(p, imgs, [maxdeg](const Polynomial& a, const Polynomial& b) {
    return mul_truncated(a, b, maxdeg);
  });
}

Rational eval(const Polynomial& p, const std::vector<Rational>& point) {
  const int n = p.ring()->nvars();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("eval: point length mismatch");
  Rational acc(0);
  for (const auto& t : p.terms()) {
    Rational v = t.c;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
  Integer num = q.get_num(), den = q.get_den();
  Integer pz(static_cast<unsigned long>(p));
  Integer nm = num % pz;
  if (nm < 0) nm += pz;
  Integer dm = den % pz;
  std::uint64_t n64 = nm.get_ui();
  std::uint64_t d64 = dm.get_ui();
  if (d64 == 0) throw ModularEvalError("denominator divisible by prime");
  return (__uint128_t)n64 * mod_pow(d64, p - 2, p) % p;
}

}  // namespace

std::uint64_t eval_mod_prime(const Polynomial& p,
                             const std::vector<std::uint64_t>& point,
                             std::uint64_t prime) {
  if (prime < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  const int n = p.ring()->nvars();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("eval_mod_prime: point length mismatch");
  std::uint64_t acc = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = rational_mod(t.c, prime);
    for (int i = 0; i < n; ++i) {
      if (t.m.e[i] == 0) continue;
      v = (__uint128_t)v * mod_pow(point[i] % prime, t.m.e[i], prime) % prime;
    }
    acc = (acc + v) % prime;
  }
  return acc;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = abs(c);
    std::vector<std::string> factors;
    if (a != 1 || t.m.is_one()) factors.push_back(a.get_str());
    for (int i = 0; i < t.m.n; ++i) {
      if (t.m.e[i] == 0) continue;
      std::string f = ring.var_name(i);
      if (t.m.e[i] > 1) f += "^" + std::to_string(t.m.e[i]);
      factors.push_back(std::move(f));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) throw std::invalid_argument("expected number in polynomial text");
    return std::string(s.substr(b, pos - b));
  }
  std::string name() {
    skip_ws();
    size_t b = pos;
    auto ok = [&](char c, bool lead) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!lead && std::isdigit(static_cast<unsigned char>(c)));
    };
    if (pos >= s.size() || !ok(s[pos], true))
      throw std::invalid_argument("expected variable name in polynomial text");
    while (pos < s.size() && ok(s[pos], false)) ++pos;
    return std::string(s.substr(b, pos - b));
  }
};

}  // namespace

Polynomial parse_poly(const RingPtr& ring, std::string_view text) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;
    Rational coeff(sign);
    Monomial m = Monomial::one(ring->nvars());
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lx.number();
        std::string den = "1";
        if (lx.accept('/')) den = lx.number();
        Rational q(num + "/" + den);
        q.canonicalize();
        coeff *= q;
        any = true;
      } else {
        std::string nm = lx.name();
        int idx = ring->var_index(nm);
        if (idx < 0)
          throw std::invalid_argument("unknown variable '" + nm + "'");
        int exp = 1;
        if (lx.accept('^')) exp = std::stoi(lx.number());
        m.e[idx] = static_cast<int16_t>(m.e[idx] + exp);
        m.deg += exp;
        any = true;
      }
      expect_factor = lx.accept('*');
    }
    if (!any) throw std::invalid_argument("empty term in polynomial text");
    terms.push_back({m, coeff});
  }
  if (first) throw std::invalid_argument("empty polynomial text");
  return Polynomial(ring, std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& p,
                                       const Polynomial& divisor) {
  require_same_ring(p.ring(), divisor.ring());
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial rem = p;
  Polynomial quot(p.ring());
  const auto& lt = divisor.leading_term();
  while (!rem.is_zero()) {
    const auto& t = rem.leading_term();
    if (!mono_divides(lt.m, t.m)) return std::nullopt;
    Rational c = t.c / lt.c;
    Monomial m = mono_div(t.m, lt.m);
    quot += Polynomial::monomial(p.ring(), m, c);
    rem = rem.reduce_step(c, m, divisor);
  }
  return quot;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  auto the_var = [](const Polynomial& p) -> int {
    int v = -1;
    for (const auto& t : p.terms())
      for (int i = 0; i < t.m.n; ++i)
        if (t.m.e[i] > 0) {
          if (v < 0) v = i;
          if (v != i) throw std::invalid_argument("univariate_gcd: not univariate");
        }
    return v;
  };
  int va = the_var(a), vb = the_var(b);
  if (va >= 0 && vb >= 0 && va != vb)
    throw std::invalid_argument("univariate_gcd: different variables");
  Polynomial f = a, g = b;
  while (!g.is_zero()) {
    // remainder of f by g in Q[x]
    Polynomial r = f;
    const auto& lt = g.leading_term();
    while (!r.is_zero() && mono_divides(lt.m, r.leading_monomial()))
      r = r.reduce_step(r.leading_coeff() / lt.c,
                        mono_div(r.leading_monomial(), lt.m), g);
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.scaled(Rational(1) / f.leading_coeff());
}

VecQ coefficient_vector(const Polynomial& p, const std::vector<Monomial>& basis) {
  VecQ v = vecq_zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& t : p.terms()) {
    bool found = false;
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == t.m) {
        v(static_cast<Eigen::Index>(i)) = t.c;
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("coefficient_vector: monomial outside basis");
  }
  return v;
}

std::vector<Monomial> merge_monomial_support(const std::vector<Polynomial>& ps) {
  std::vector<Monomial> out;
  for (const auto& p : ps)
    for (const auto& t : p.terms()) {
      bool dup = false;
      for (const auto& m : out)
        if (m == t.m) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(t.m);
    }
  return out;
}

}  // namespace ogradlab
