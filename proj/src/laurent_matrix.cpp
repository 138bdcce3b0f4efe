#include "charvar/laurent_matrix.hpp"

#include <algorithm>

#include "charvar/detail/smith.hpp"
#include "charvar/error.hpp"

namespace charvar {

Character Character::at(std::vector<Rational> coords) {
  for (const auto& c : coords)
    if (c == 0) throw Error("ZeroCoordinate", "character coordinates must be nonzero");
  Character ch;
  ch.coords_ = std::move(coords);
  return ch;
}

bool Character::is_trivial() const {
  return coords_ && std::all_of(coords_->begin(), coords_->end(), [](const Rational& x) { return x == 1; });
}

const std::vector<Rational>& Character::coords() const {
  if (!coords_) throw Error("GenericNotEvaluable", "the generic character has no coordinates");
  return *coords_;
}

std::string Character::to_string() const {
  if (!coords_) return "generic";
  std::string out = "(";
  for (std::size_t i = 0; i < coords_->size(); ++i) out += (i ? "," : "") + (*coords_)[i].get_str();
  return out + ")";
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t variable_count)
    : m_(variable_count), cells_(rows, cols, LaurentPolynomial(variable_count)) {}

void LaurentMatrix::set(std::size_t i, std::size_t j, LaurentPolynomial p) {
  if (p.variable_count() != m_)
    throw Error("VariableCountMismatch", "matrix entry from a different Laurent ring");
  cells_(i, j) = std::move(p);
}

bool LaurentMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!cells_(i, j).is_zero()) return false;
  return true;
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix t(cols(), rows(), m_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) t.cells_(j, i) = cells_(i, j);
  return t;
}

LaurentMatrix LaurentMatrix::pushforward(const std::vector<std::vector<long>>& map,
                                         std::size_t target_vars) const {
  LaurentMatrix out(rows(), cols(), target_vars);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out.cells_(i, j) = cells_(i, j).pushforward(map, target_vars);
  return out;
}

DenseMatrix<Rational> LaurentMatrix::evaluate(const std::vector<Rational>& point) const {
  DenseMatrix<Rational> out(rows(), cols(), Rational(0));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!cells_(i, j).is_zero()) out(i, j) = cells_(i, j).evaluate(point);
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw Error("ShapeMismatch", "matrix product shape mismatch");
  if (a.m_ != b.m_) throw Error("VariableCountMismatch", "matrix product over different rings");
  LaurentMatrix c(a.rows(), b.cols(), a.m_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c.cells_(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("ShapeMismatch", "matrix sum shape mismatch");
  LaurentMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.cells_(i, j) += b(i, j);
  return c;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n, std::size_t m) {
  LaurentMatrix id(n, n, m);
  for (std::size_t i = 0; i < n; ++i) id.cells_(i, i) = LaurentPolynomial::constant(m, 1);
  return id;
}

LaurentMatrix LaurentMatrix::from_strings(const std::vector<std::vector<std::string>>& rows,
                                          std::size_t m) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  LaurentMatrix out(rows.size(), c, m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ShapeMismatch", "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) out.cells_(i, j) = parse_laurent(rows[i][j], m);
  }
  return out;
}

std::size_t rank_rational(DenseMatrix<Rational> a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t i = rank; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    const Rational inv = Rational(1) / a(rank, c);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        if (a(rank, j) != 0) a(i, j) -= f * a(rank, j);
      a(i, c) = 0;
    }
    ++rank;
  }
  return rank;
}

namespace {

// Fraction-free (Bareiss) row echelon reduction. Every entry produced is a
// minor of the input, so the divisions by the previous pivot are exact.
struct BareissResult {
  std::size_t rank = 0;
  LaurentPolynomial last_pivot;
  int sign = 1;
};

BareissResult bareiss(DenseMatrix<LaurentPolynomial> a, std::size_t m) {
  BareissResult res{0, LaurentPolynomial::constant(m, 1), 1};
  LaurentPolynomial prev = LaurentPolynomial::constant(m, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      if (pivot == a.rows() || a(i, c).term_count() < a(pivot, c).term_count()) pivot = i;
    }
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      a.swap_rows(r, pivot);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        LaurentPolynomial num = a(r, c) * a(i, j);
        if (!a(i, c).is_zero() && !a(r, j).is_zero()) num -= a(i, c) * a(r, j);
        auto q = LaurentPolynomial::divide_exact(num, prev);
        if (!q) throw Error("InternalError", "fraction-free elimination produced an inexact division");
        a(i, j) = std::move(*q);
      }
      a(i, c) = LaurentPolynomial(m);
    }
    prev = a(r, c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank_at(const LaurentMatrix& mx, const Character& rho) {
  if (mx.rows() == 0 || mx.cols() == 0) return 0;
  if (rho.is_generic()) return bareiss(mx.cells(), mx.variable_count()).rank;
  return rank_rational(mx.evaluate(rho.coords()));
}

LaurentPolynomial determinant(const LaurentMatrix& mx) {
  if (mx.rows() != mx.cols()) throw Error("ShapeMismatch", "determinant of a non-square matrix");
  const std::size_t m = mx.variable_count();
  if (mx.rows() == 0) return LaurentPolynomial::constant(m, 1);
  auto res = bareiss(mx.cells(), m);
  if (res.rank < mx.rows()) return LaurentPolynomial(m);
  return res.sign < 0 ? -res.last_pivot : res.last_pivot;
}

std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t k) {
  auto choose = [](std::size_t n, std::size_t r) -> std::size_t {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 v = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      v = v * (n - r + i) / i;
      if (v > static_cast<unsigned __int128>(SIZE_MAX)) return SIZE_MAX;
    }
    return static_cast<std::size_t>(v);
  };
  unsigned __int128 v = static_cast<unsigned __int128>(choose(rows, k)) * choose(cols, k);
  return v > SIZE_MAX ? SIZE_MAX : static_cast<std::size_t>(v);
}

namespace {
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace

std::vector<LaurentPolynomial> minors(const LaurentMatrix& mx, std::size_t k, std::size_t ceiling) {
  const std::size_t m = mx.variable_count();
  if (k == 0) return {LaurentPolynomial::constant(m, 1)};
  if (k > std::min(mx.rows(), mx.cols())) return {};
  const std::size_t count = minor_count(mx.rows(), mx.cols(), k);
  if (count > ceiling)
    throw Error("TooManyMinors", std::to_string(count) + " minors exceed the ceiling of " +
                                     std::to_string(ceiling));
  std::vector<LaurentPolynomial> out;
  out.reserve(count);
  std::vector<std::size_t> rs(k), cs(k);
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      LaurentMatrix sub(k, k, m);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = mx(rs[a], cs[b]);
      out.push_back(determinant(sub));
    } while (next_combination(cs, mx.cols()));
  } while (next_combination(rs, mx.rows()));
  return out;
}

namespace {

struct UnivariateTraits {
  static LaurentPolynomial zero(const LaurentPolynomial&) { return LaurentPolynomial(1); }
  static LaurentPolynomial one(const LaurentPolynomial&) { return LaurentPolynomial::constant(1, 1); }
  static bool is_zero(const LaurentPolynomial& a) { return a.is_zero(); }
  static long size(const LaurentPolynomial& a) { return degree_span(a); }
  static std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& a,
                                                                const LaurentPolynomial& b) {
    return divmod_univariate(a, b);
  }
  static std::pair<LaurentPolynomial, LaurentPolynomial> normalizing_unit(const LaurentPolynomial& a) {
    const auto& lo = *a.terms().begin();
    const auto& hi = *a.terms().rbegin();
    const long shift = -lo.first[0];
    const Rational scale = Rational(1) / hi.second;
    return {LaurentPolynomial::monomial(1, {shift}, scale),
            LaurentPolynomial::monomial(1, {-shift}, hi.second)};
  }
};

LaurentMatrix wrap(DenseMatrix<LaurentPolynomial> cells, std::size_t rows, std::size_t cols) {
  LaurentMatrix out(rows, cols, 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, std::move(cells(i, j)));
  return out;
}

}  // namespace

SmithFormUnivariate smith_univariate(const LaurentMatrix& mx) {
  if (mx.variable_count() != 1) throw Error("NotUnivariate", "Smith form requires a univariate matrix");
  auto d = detail::smith_decompose<LaurentPolynomial, UnivariateTraits>(mx.cells(), LaurentPolynomial(1));
  SmithFormUnivariate out;
  for (std::size_t t = 0; t < d.rank; ++t) {
    out.invariant_factors.push_back(d.diagonal(t, t));
    out.torsion_dimension += degree_span(d.diagonal(t, t));
  }
  out.free_rank = mx.cols() - d.rank;
  out.diagonal = wrap(std::move(d.diagonal), mx.rows(), mx.cols());
  out.left = wrap(std::move(d.left), mx.rows(), mx.rows());
  out.left_inverse = wrap(std::move(d.left_inverse), mx.rows(), mx.rows());
  out.right = wrap(std::move(d.right), mx.cols(), mx.cols());
  out.right_inverse = wrap(std::move(d.right_inverse), mx.cols(), mx.cols());
  return out;
}

}  // namespace charvar
