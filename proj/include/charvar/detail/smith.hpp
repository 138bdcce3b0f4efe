#pragma once

// Smith normal form over a Euclidean domain, with recorded transformations.
//
// The ring is described by a traits type providing
//   static T zero(const T& like);  static T one(const T& like);
//   static bool is_zero(const T&);
//   static auto size(const T&);                  // Euclidean function
//   static std::pair<T, T> divmod(const T& a, const T& b);
//   static std::pair<T, T> normalizing_unit(const T& a);  // {u, u^-1}, u*a canonical
//
// On return  U * A * V == D  and  Uinv, Vinv are the inverses of U, V.

#include <cstddef>
#include <optional>
#include <utility>

#include "charvar/dense_matrix.hpp"

namespace charvar::detail {

template <class T>
struct SmithDecomposition {
  DenseMatrix<T> diagonal;
  DenseMatrix<T> left, left_inverse;    // U, U^-1
  DenseMatrix<T> right, right_inverse;  // V, V^-1
  std::size_t rank = 0;
};

template <class T, class Traits>
class SmithEngine {
 public:
  SmithEngine(const DenseMatrix<T>& a, const T& like) : like_(like) {
    d_.diagonal = a;
    d_.left = identity(a.rows());
    d_.left_inverse = identity(a.rows());
    d_.right = identity(a.cols());
    d_.right_inverse = identity(a.cols());
  }

  SmithDecomposition<T> run() {
    auto& a = d_.diagonal;
    const std::size_t n = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
      auto pos = smallest_in_block(t);
      if (!pos) break;
      swap_rows(t, pos->first);
      swap_cols(t, pos->second);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (Traits::is_zero(a(i, t))) continue;
          auto [q, r] = Traits::divmod(a(i, t), a(t, t));
          add_row_multiple(i, t, -q);
          if (!Traits::is_zero(r)) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (Traits::is_zero(a(t, j))) continue;
          auto [q, r] = Traits::divmod(a(t, j), a(t, t));
          add_col_multiple(j, t, -q);
          if (!Traits::is_zero(r)) clean = false;
        }
        if (!clean) {
          move_smallest_of_cross_to_pivot(t);
          continue;
        }
        auto bad = non_divisible_entry(t);
        if (!bad) break;
        add_row_multiple(t, *bad, Traits::one(like_));
      }
      auto [u, uinv] = Traits::normalizing_unit(a(t, t));
      scale_row(t, u, uinv);
    }
    d_.rank = t;
    return std::move(d_);
  }

 private:
  DenseMatrix<T> identity(std::size_t n) const {
    DenseMatrix<T> m(n, n, Traits::zero(like_));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one(like_);
    return m;
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    const auto& a = d_.diagonal;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (Traits::is_zero(a(i, j))) continue;
        if (!best || Traits::size(a(i, j)) < Traits::size(a(best->first, best->second)))
          best = std::pair{i, j};
      }
    return best;
  }

  void move_smallest_of_cross_to_pivot(std::size_t t) {
    const auto& a = d_.diagonal;
    std::size_t bi = t, bj = t;
    auto better = [&](std::size_t i, std::size_t j) {
      return !Traits::is_zero(a(i, j)) &&
             (Traits::is_zero(a(bi, bj)) || Traits::size(a(i, j)) < Traits::size(a(bi, bj)));
    };
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      if (better(i, t)) bi = i, bj = t;
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (better(t, j)) bi = t, bj = j;
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  std::optional<std::size_t> non_divisible_entry(std::size_t t) const {
    const auto& a = d_.diagonal;
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (Traits::is_zero(a(i, j))) continue;
        if (!Traits::is_zero(Traits::divmod(a(i, j), a(t, t)).second)) return i;
      }
    return std::nullopt;
  }

  // Row operations act on A and U from the left, and on U^-1 from the right.
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    d_.diagonal.swap_rows(x, y);
    d_.left.swap_rows(x, y);
    d_.left_inverse.swap_cols(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    d_.diagonal.swap_cols(x, y);
    d_.right.swap_cols(x, y);
    d_.right_inverse.swap_rows(x, y);
  }
  // row_target += factor * row_source
  void add_row_multiple(std::size_t target, std::size_t source, const T& factor) {
    if (Traits::is_zero(factor)) return;
    row_axpy(d_.diagonal, target, source, factor);
    row_axpy(d_.left, target, source, factor);
    // U^-1 <- U^-1 * E^-1: column_source -= factor * column_target
    col_axpy(d_.left_inverse, source, target, -factor);
  }
  // col_target += factor * col_source
  void add_col_multiple(std::size_t target, std::size_t source, const T& factor) {
    if (Traits::is_zero(factor)) return;
    col_axpy(d_.diagonal, target, source, factor);
    col_axpy(d_.right, target, source, factor);
    row_axpy(d_.right_inverse, source, target, -factor);
  }
  void scale_row(std::size_t r, const T& u, const T& uinv) {
    auto& a = d_.diagonal;
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = u * a(r, j);
    for (std::size_t j = 0; j < d_.left.cols(); ++j) d_.left(r, j) = u * d_.left(r, j);
    for (std::size_t i = 0; i < d_.left_inverse.rows(); ++i)
      d_.left_inverse(i, r) = d_.left_inverse(i, r) * uinv;
  }

  static void row_axpy(DenseMatrix<T>& m, std::size_t target, std::size_t source, const T& f) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!Traits::is_zero(m(source, j))) m(target, j) = m(target, j) + f * m(source, j);
  }
  static void col_axpy(DenseMatrix<T>& m, std::size_t target, std::size_t source, const T& f) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!Traits::is_zero(m(i, source))) m(i, target) = m(i, target) + m(i, source) * f;
  }

  T like_;
  SmithDecomposition<T> d_;
};

template <class T, class Traits>
SmithDecomposition<T> smith_decompose(const DenseMatrix<T>& a, const T& like) {
  return SmithEngine<T, Traits>(a, like).run();
}

}  // namespace charvar::detail
