#include "charvar/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "charvar/error.hpp"

namespace charvar {

LaurentPolynomial LaurentPolynomial::constant(std::size_t m, const Rational& c) {
  return monomial(m, Exponent(m, 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t m, Exponent e, const Rational& c) {
  if (e.size() != m) throw Error("VariableCountMismatch", "exponent length differs from variable count");
  LaurentPolynomial p(m);
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t m, std::size_t i) {
  Exponent e(m, 0);
  e.at(i) = 1;
  return monomial(m, std::move(e));
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (m_ != o.m_)
    throw Error("VariableCountMismatch", "Laurent polynomials in " + std::to_string(m_) + " and " +
                                             std::to_string(o.m_) + " variables");
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial r(a.m_);
  Exponent e(a.m_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.m_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

namespace {
Rational power(const Rational& x, long e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out = 1;
  while (n) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return out;
}
}  // namespace

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != m_)
    throw Error("VariableCountMismatch", "character has " + std::to_string(point.size()) +
                                             " coordinates, polynomial has " + std::to_string(m_) +
                                             " variables");
  for (const auto& x : point)
    if (x == 0) throw Error("ZeroCoordinate", "character coordinates must be nonzero");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < m_; ++k)
      if (e[k] != 0) t *= power(point[k], e[k]);
    sum += t;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::pushforward(const std::vector<std::vector<long>>& map,
                                                 std::size_t target_vars) const {
  if (map.size() != target_vars) throw Error("VariableCountMismatch", "pushforward map has wrong row count");
  for (const auto& row : map)
    if (row.size() != m_) throw Error("VariableCountMismatch", "pushforward map has wrong column count");
  LaurentPolynomial r(target_vars);
  Exponent f(target_vars);
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < target_vars; ++k) {
      long s = 0;
      for (std::size_t i = 0; i < m_; ++i) s += map[k][i] * e[i];
      f[k] = s;
    }
    r.add_term(f, c);
  }
  return r;
}

Exponent LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  Exponent lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < m_; ++k) lo[k] = std::min(lo[k], e[k]);
  return lo;
}

Exponent LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  Exponent hi = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < m_; ++k) hi[k] = std::max(hi[k], e[k]);
  return hi;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  LaurentPolynomial r(m_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < m_; ++k) f[k] += shift[k];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::unit_normalized() const {
  if (terms_.empty()) return *this;
  Exponent lo = min_exponents();
  for (auto& x : lo) x = -x;
  LaurentPolynomial r = shifted(lo);
  Rational lead = r.terms_.rbegin()->second;
  r *= Rational(1) / lead;
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& a,
                                                                 const LaurentPolynomial& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw Error("DivisionByZero", "exact division by the zero polynomial");
  const std::size_t m = a.m_;
  if (a.is_zero()) return LaurentPolynomial(m);

  // Move both into the polynomial ring; b's monomial factor is a unit.
  Exponent alo = a.min_exponents(), blo = b.min_exponents();
  Exponent neg_a(m), neg_b(m), quotient_shift(m);
  for (std::size_t k = 0; k < m; ++k) {
    neg_a[k] = -alo[k];
    neg_b[k] = -blo[k];
    quotient_shift[k] = alo[k] - blo[k];
  }
  LaurentPolynomial rem = a.shifted(neg_a);
  const LaurentPolynomial div = b.shifted(neg_b);
  const auto& [lead_e, lead_c] = *div.terms_.rbegin();

  // Single-divisor lex division; {div} is a Groebner basis of its ideal, so
  // a nonzero irreducible leading term certifies non-divisibility.
  LaurentPolynomial q(m);
  Exponent qe(m);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t k = 0; k < m; ++k) {
      qe[k] = re[k] - lead_e[k];
      if (qe[k] < 0) return std::nullopt;
    }
    Rational qc = rc / lead_c;
    q.add_term(qe, qc);
    for (const auto& [de, dc] : div.terms_) {
      Exponent e(m);
      for (std::size_t k = 0; k < m; ++k) e[k] = de[k] + qe[k];
      rem.add_term(e, -qc * dc);
    }
  }
  return q.shifted(quotient_shift);
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_const = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (is_const) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t m) : text_(text), m_(m) {}

  LaurentPolynomial parse() {
    LaurentPolynomial out(m_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, sign * c);
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("BadPolynomial", "cannot parse polynomial '" + std::string(text_) + "': " + what);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::pair<Exponent, Rational> term() {
    Exponent e(m_, 0);
    Rational c = 1;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        c *= parse_rational(text_.substr(start, pos_ - start));
      } else if (peek() == 't') {
        ++pos_;
        std::size_t var = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          var = static_cast<std::size_t>(integer());
          if (var == 0) fail("variables are numbered from 1");
          --var;
        } else if (m_ != 1) {
          fail("bare 't' only allowed for one variable");
        }
        if (var >= m_) fail("variable index out of range");
        long pw = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos_;
          }
          pw = integer();
          if (neg) pw = -pw;
        }
        e[var] += pw;
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {e, c};
  }

  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  std::string_view text_;
  std::size_t m_;
  std::size_t pos_ = 0;
};

void require_univariate(const LaurentPolynomial& p) {
  if (p.variable_count() != 1) throw Error("NotUnivariate", "expected a univariate Laurent polynomial");
}

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t m) {
  return LaurentParser(text, m).parse();
}

long degree_span(const LaurentPolynomial& p) {
  require_univariate(p);
  if (p.is_zero()) return -1;
  return p.terms().rbegin()->first[0] - p.terms().begin()->first[0];
}

std::pair<LaurentPolynomial, LaurentPolynomial> divmod_univariate(const LaurentPolynomial& a,
                                                                   const LaurentPolynomial& b) {
  require_univariate(a);
  require_univariate(b);
  if (b.is_zero()) throw Error("DivisionByZero", "division by the zero polynomial");
  if (a.is_zero()) return {LaurentPolynomial(1), LaurentPolynomial(1)};
  const long alo = a.terms().begin()->first[0];
  const long blo = b.terms().begin()->first[0];
  LaurentPolynomial rem = a.shifted({-alo});
  const LaurentPolynomial div = b.shifted({-blo});
  const auto& [lead_e, lead_c] = *div.terms().rbegin();
  LaurentPolynomial q(1);
  while (!rem.is_zero() && rem.terms().rbegin()->first[0] >= lead_e[0]) {
    const auto& [re, rc] = *rem.terms().rbegin();
    LaurentPolynomial step = LaurentPolynomial::monomial(1, {re[0] - lead_e[0]}, rc / lead_c);
    q += step;
    rem -= step * div;
  }
  // a = t^alo (q div + rem) = (t^(alo-blo) q) b + t^alo rem
  return {q.shifted({alo - blo}), rem.shifted({alo})};
}

LaurentPolynomial gcd_univariate(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod_univariate(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.unit_normalized();
}

}  // namespace charvar
