#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charvar/dense_matrix.hpp"
#include "charvar/laurent.hpp"

namespace charvar {

/// A point of the character torus (Q^*)^m, or the symbolic generic point.
class Character {
 public:
  static Character generic() { return Character(); }
  static Character at(std::vector<Rational> coords);
  static Character trivial(std::size_t m) { return at(std::vector<Rational>(m, Rational(1))); }

  bool is_generic() const noexcept { return !coords_.has_value(); }
  bool is_trivial() const;
  const std::vector<Rational>& coords() const;
  std::string to_string() const;

 private:
  Character() = default;
  std::optional<std::vector<Rational>> coords_;
};

/// Matrix over Q[t_1^{±1}..t_m^{±1}] with a uniform variable count.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t variable_count);

  std::size_t rows() const noexcept { return cells_.rows(); }
  std::size_t cols() const noexcept { return cells_.cols(); }
  std::size_t variable_count() const noexcept { return m_; }

  const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return cells_(i, j); }
  /// Sets an entry; throws VariableCountMismatch for a foreign ring.
  void set(std::size_t i, std::size_t j, LaurentPolynomial p);
  LaurentPolynomial& at(std::size_t i, std::size_t j) { return cells_(i, j); }

  const DenseMatrix<LaurentPolynomial>& cells() const noexcept { return cells_; }

  bool is_zero() const;
  LaurentMatrix transposed() const;
  LaurentMatrix pushforward(const std::vector<std::vector<long>>& map, std::size_t target_vars) const;
  DenseMatrix<Rational> evaluate(const std::vector<Rational>& point) const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  bool operator==(const LaurentMatrix& o) const { return m_ == o.m_ && cells_ == o.cells_; }

  static LaurentMatrix identity(std::size_t n, std::size_t m);
  static LaurentMatrix from_strings(const std::vector<std::vector<std::string>>& rows, std::size_t m);

 private:
  std::size_t m_ = 0;
  DenseMatrix<LaurentPolynomial> cells_;
};

/// Exact rank of a rational matrix.
std::size_t rank_rational(DenseMatrix<Rational> a);

/// Rank at a character. At the generic point this is the rank over the
/// fraction field of the Laurent ring (fraction-free elimination), which is
/// the maximum over all points and is attained on a Zariski open set.
std::size_t rank_at(const LaurentMatrix& mx, const Character& rho);

/// Determinant of a square Laurent matrix by fraction-free elimination.
LaurentPolynomial determinant(const LaurentMatrix& mx);

/// Number of k x k minors of an r x c matrix (saturating).
std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t k);

constexpr std::size_t kDefaultMinorCeiling = 200000;

/// All k x k minors (row subsets outer, column subsets inner, lexicographic).
/// k = 0 gives {1}; k > min(rows, cols) gives the empty list.
std::vector<LaurentPolynomial> minors(const LaurentMatrix& mx, std::size_t k,
                                      std::size_t ceiling = kDefaultMinorCeiling);

/// Smith form over the PID Q[t^{±1}]. The matrix is read as a presentation
/// matrix (rows are relations, columns are generators, as for the Alexander
/// matrix), so the described module is Q[t^{±1}]^cols / row span.
struct SmithFormUnivariate {
  /// Nonzero invariant factors, unit-normalized (constant term nonzero,
  /// monic), each dividing the next.
  std::vector<LaurentPolynomial> invariant_factors;
  /// Free rank of the presented module: cols - number of nonzero invariant factors.
  std::size_t free_rank = 0;
  /// Sum of degree spans of the invariant factors (dim_Q of the torsion part).
  long torsion_dimension = 0;
  /// left * matrix * right = diagonal; left_inverse * diagonal * right_inverse = matrix.
  LaurentMatrix diagonal, left, left_inverse, right, right_inverse;
};

SmithFormUnivariate smith_univariate(const LaurentMatrix& mx);

}  // namespace charvar
