#pragma once

// Exact Gaussian elimination over a field policy (ℚ or 𝔽_p).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "goodprime/field.hpp"
#include "goodprime/matrix.hpp"

namespace goodprime {

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
Vec<F> zero_vector(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <Field F>
bool is_zero_vector(const F& field, const Vec<F>& v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

/// y += c * x
template <Field F>
void axpy(const F& field, Vec<F>& y, const typename F::value_type& c, const Vec<F>& x) {
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!field.is_zero(x[i])) y[i] = field.add(y[i], field.mul(c, x[i]));
}

/// A subspace of F^n kept in semi-echelon form: each stored row has a unit
/// pivot and vanishes at the pivots of all earlier rows. Sequential reduction
/// against the rows in insertion order is therefore exact.
template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  /// Reduce v in place; returns the coefficients used per stored row.
  Vec<F> reduce(Vec<F>& v) const {
    Vec<F> coeffs(rows_.size(), field_.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const value_type c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      coeffs[k] = c;
      axpy(field_, v, field_.neg(c), rows_[k]);
    }
    return coeffs;
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return is_zero_vector(field_, v);
  }

  /// Inserts v if it is independent of the current rows; returns whether it was.
  bool insert(Vec<F> v) {
    if (v.size() != ambient_) fail(ErrorCode::InvalidArgument, "vector length does not match subspace");
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && field_.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    const value_type inv = field_.inv(v[p]);
    for (auto& x : v)
      if (!field_.is_zero(x)) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  /// Coordinates of v in the stored basis, or nullopt if v is outside.
  std::optional<Vec<F>> coordinates(Vec<F> v) const {
    Vec<F> c = reduce(v);
    if (!is_zero_vector(field_, v)) return std::nullopt;
    return c;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& field, Matrix<typename F::value_type>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const auto inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      const auto f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!field.is_zero(m(r, j))) m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F& field, Matrix<typename F::value_type> m) {
  return rref(field, m).size();
}

template <Field F>
struct RankNullspace {
  std::size_t rank = 0;
  std::vector<Vec<F>> nullspace;  // basis of {x : M x = 0}
};

template <Field F>
RankNullspace<F> rank_nullspace(const F& field, Matrix<typename F::value_type> m) {
  const auto pivots = rref(field, m);
  RankNullspace<F> out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = zero_vector(field, m.cols());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field.neg(m(k, free));
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

template <Field F>
std::vector<Vec<F>> nullspace(const F& field, const Matrix<typename F::value_type>& m) {
  return rank_nullspace(field, m).nullspace;
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
template <Field F>
std::optional<Vec<F>> solve(const F& field, const Matrix<typename F::value_type>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) fail(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  Matrix<typename F::value_type> aug(m.rows(), m.cols() + 1, field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(field, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x = zero_vector(field, m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

template <Field F>
std::optional<Matrix<typename F::value_type>> inverse(const F& field, const Matrix<typename F::value_type>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<typename F::value_type> aug(n, 2 * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field.one();
  }
  const auto pivots = rref(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<typename F::value_type> inv(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Reduce an integer matrix entrywise into the field.
template <Field F>
Matrix<typename F::value_type> reduce_matrix(const F& field, const Matrix<mpz_class>& m) {
  Matrix<typename F::value_type> out(m.rows(), m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_integer(m(i, j));
  return out;
}

}  // namespace goodprime
