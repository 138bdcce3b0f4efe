#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/rational.hpp"

namespace charvar {

using Exponent = std::vector<long>;

/// Element of Q[t_1^{±1}, ..., t_m^{±1}] stored as a sparse map from exponent
/// vectors to nonzero rational coefficients. All arithmetic is exact.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit LaurentPolynomial(std::size_t variable_count = 0) : m_(variable_count) {}

  static LaurentPolynomial constant(std::size_t m, const Rational& c);
  static LaurentPolynomial monomial(std::size_t m, Exponent e, const Rational& c = 1);
  static LaurentPolynomial variable(std::size_t m, std::size_t i);

  std::size_t variable_count() const noexcept { return m_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  bool operator==(const LaurentPolynomial& o) const { return m_ == o.m_ && terms_ == o.terms_; }

  /// Exact substitution t_i -> point[i]; point coordinates must be nonzero.
  Rational evaluate(std::span<const Rational> point) const;

  /// Image under the monomial ring map t_i -> prod_k s_k^{map[k][i]}, where
  /// `map` has `target_vars` rows and variable_count() columns.
  LaurentPolynomial pushforward(const std::vector<std::vector<long>>& map,
                                std::size_t target_vars) const;

  /// Per-variable minimum / maximum exponents (empty for the zero polynomial).
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  /// Multiplies by the monomial t^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;

  /// Associate with minimum exponent zero in every variable and leading
  /// coefficient (lexicographically largest exponent) equal to 1.
  LaurentPolynomial unit_normalized() const;

  /// Quotient a/b when b divides a in the Laurent ring, nullopt otherwise.
  static std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                                       const LaurentPolynomial& b);

  /// Canonical text: terms by decreasing exponent vector, e.g. "3*t1^2*t2^-1 - 1".
  std::string to_string() const;

 private:
  void check_compatible(const LaurentPolynomial& o) const;

  std::size_t m_;
  TermMap terms_;
};

/// Parses the canonical text form back into a polynomial in `m` variables
/// (variables are t1..tm; a bare "t" is accepted when m = 1).
LaurentPolynomial parse_laurent(std::string_view text, std::size_t m);

// Univariate helpers (variable_count() == 1).

/// max exponent - min exponent; -1 for the zero polynomial.
long degree_span(const LaurentPolynomial& p);

/// Division with remainder in Q[t^{±1}]: a = q*b + r with span(r) < span(b).
std::pair<LaurentPolynomial, LaurentPolynomial> divmod_univariate(const LaurentPolynomial& a,
                                                                   const LaurentPolynomial& b);

LaurentPolynomial gcd_univariate(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace charvar
