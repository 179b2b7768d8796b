#pragma once

#include <mclift/rational.hpp>

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mclift::linalg {

/// Dense row-major matrix of exact values.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using Vector = std::vector<Rational>;

/// Row echelon form produced by fraction-free (Bareiss) elimination.
struct Echelon {
  IntegerMatrix rows;                  // first pivot_columns.size() rows are the pivot rows
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Clears denominators row by row; row scaling preserves row space and kernel.
inline IntegerMatrix to_integer_rows(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (const auto& v : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      out(r, c) = v.get_num() * (lcm / v.get_den());
    }
  }
  return out;
}

/// Bareiss elimination. The pivot in each column is the first nonzero entry at
/// or below the current row; every division is exact.
inline Echelon bareiss_echelon(IntegerMatrix a) {
  Echelon out;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && a(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    a.swap_rows(pivot, r);
    const Integer p = a(r, col);
    for (std::size_t i = r + 1; i < m; ++i) {
      const Integer factor = a(i, col);
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer value = p * a(i, j) - factor * a(r, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(value);
      }
      a(i, col) = 0;
    }
    // Rows below r still hold entries scaled by p; later columns divide by it.
    previous = p;
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

inline Echelon echelon(const RationalMatrix& m) { return bareiss_echelon(to_integer_rows(m)); }

inline std::size_t rank(const RationalMatrix& m) { return echelon(m).rank(); }

namespace detail {

// Back substitution on the echelon rows for fixed values of the free columns.
inline void back_substitute(const Echelon& e, Vector& x, std::span<const Rational> rhs = {}) {
  for (std::size_t k = e.rank(); k-- > 0;) {
    const std::size_t pc = e.pivot_columns[k];
    Rational acc = rhs.empty() ? Rational(0) : rhs[k];
    for (std::size_t j = pc + 1; j < x.size(); ++j) {
      const Integer& coeff = e.rows(k, j);
      if (coeff != 0 && x[j] != 0) acc -= Rational(coeff) * x[j];
    }
    x[pc] = acc / Rational(e.rows(k, pc));
  }
}

}  // namespace detail

/// Kernel basis in reduced-echelon normal form: one vector per free column,
/// taken in increasing column order, with that free variable set to 1 and
/// every other free variable set to 0.
inline std::vector<Vector> null_space(const RationalMatrix& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), Rational(0));
    x[free] = 1;
    detail::back_substitute(e, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Outcome of solving A x = b exactly.
struct Solution {
  bool consistent = false;
  std::size_t nullity = 0;
  Vector particular;  // free variables set to zero; empty when inconsistent
};

inline Solution solve(const RationalMatrix& a, std::span<const Rational> b) {
  assert(b.size() == a.rows());
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const Echelon e = echelon(augmented);

  Solution out;
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return out;
  out.consistent = true;
  out.nullity = a.cols() - e.rank();

  Vector rhs(e.rank());
  for (std::size_t k = 0; k < e.rank(); ++k) rhs[k] = Rational(e.rows(k, a.cols()));
  Vector x(a.cols() + 1, Rational(0));
  // The augmented column never becomes a pivot here, so substitution ignores it.
  x.back() = 0;
  detail::back_substitute(e, x, rhs);
  x.pop_back();
  out.particular = std::move(x);
  return out;
}

/// Product of an r x c matrix with c-vectors given as columns.
inline RationalMatrix multiply_columns(const RationalMatrix& m, std::span<const Vector> columns) {
  RationalMatrix out(m.rows(), columns.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      Rational acc = 0;
      const auto& col = columns[k];
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0 && col[c] != 0) acc += m(r, c) * col[c];
      out(r, k) = std::move(acc);
    }
  }
  return out;
}

/// Rank of a family of vectors of equal length.
inline std::size_t rank_of(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
  return rank(m);
}

}  // namespace mclift::linalg
