#pragma once

// Integer matrices: Smith normal form, minor gcds, Hermite row bases.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "goodprime/errors.hpp"
#include "goodprime/matrix.hpp"

namespace goodprime {

using IntegerMatrix = Matrix<mpz_class>;

struct SmithForm {
  std::vector<mpz_class> diag;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank() const { return diag.size(); }
};

namespace detail {

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void xgcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Unimodular combination of rows r (pivot) and i so that m(i, c) becomes 0.
inline void eliminate_rows(IntegerMatrix& m, std::size_t r, std::size_t i, std::size_t c, std::size_t from) {
  const mpz_class a = m(r, c), b = m(i, c);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const mpz_class q = b / a;
    for (std::size_t j = from; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0) m(i, j) -= q * m(r, j);
    return;
  }
  mpz_class g, s, t;
  xgcd(a, b, g, s, t);
  const mpz_class ag = a / g, bg = b / g;
  for (std::size_t j = from; j < m.cols(); ++j) {
    const mpz_class x = m(r, j), y = m(i, j);
    m(r, j) = s * x + t * y;
    m(i, j) = ag * y - bg * x;
  }
}

inline void eliminate_cols(IntegerMatrix& m, std::size_t c, std::size_t j, std::size_t r, std::size_t from) {
  const mpz_class a = m(r, c), b = m(r, j);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const mpz_class q = b / a;
    for (std::size_t i = from; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0) m(i, j) -= q * m(i, c);
    return;
  }
  mpz_class g, s, t;
  xgcd(a, b, g, s, t);
  const mpz_class ag = a / g, bg = b / g;
  for (std::size_t i = from; i < m.rows(); ++i) {
    const mpz_class x = m(i, c), y = m(i, j);
    m(i, c) = s * x + t * y;
    m(i, j) = ag * y - bg * x;
  }
}

}  // namespace detail

/// Elementary divisors by unimodular row and column elimination.
inline SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m(i, j)) != 0 && (pi == rows || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    if (pi != t)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(t, j));
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, t));

    bool clean = false;
    while (!clean) {
      for (std::size_t i = t + 1; i < rows; ++i) detail::eliminate_rows(m, t, i, t, t);
      for (std::size_t j = t + 1; j < cols; ++j) detail::eliminate_cols(m, t, j, t, t);
      clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (sgn(m(i, t)) != 0) clean = false;
    }
    out.diag.push_back(abs(m(t, t)));
  }
  // Any diagonal form becomes the Smith form under diag(a, b) ~ diag(gcd, lcm).
  auto& d = out.diag;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return out;
}

/// gcd of all s×s minors: d_1⋯d_s, or 0 when s exceeds the rank.
inline mpz_class gcd_minors(const IntegerMatrix& m, std::size_t s) {
  if (s == 0 || s > std::min(m.rows(), m.cols()))
    fail(ErrorCode::InvalidS, "minor size " + std::to_string(s) + " out of range for a " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + " matrix");
  const SmithForm f = smith_normal_form(m);
  if (s > f.rank()) return 0;
  mpz_class prod = 1;
  for (std::size_t i = 0; i < s; ++i) prod *= f.diag[i];
  return prod;
}

inline std::size_t integer_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

/// Hermite normal form of the row lattice: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
inline IntegerMatrix hermite_rows(IntegerMatrix m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0 && (p == m.rows() || mpz_cmpabs(m(i, c).get_mpz_t(), m(p, c).get_mpz_t()) < 0)) p = i;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) detail::eliminate_rows(m, r, i, c, c);
    if (sgn(m(r, c)) < 0)
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (sgn(q) != 0)
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  IntegerMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace goodprime
