#pragma once

// Independent reference computations used by the tests and by `verify`.
// Deliberately naive: they share no code paths with the library algorithms
// they check beyond the element tables of the group.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "goodprime/coxeter.hpp"
#include "goodprime/errors.hpp"
#include "goodprime/smith.hpp"

namespace goodprime::check {

/// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// gcd of all s×s minors by enumerating row and column subsets.
inline mpz_class brute_gcd_minors(const IntegerMatrix& m, std::size_t s) {
  if (s == 0 || s > std::min(m.rows(), m.cols())) fail(ErrorCode::InvalidS, "minor size out of range");
  std::vector<std::size_t> rows, cols;
  mpz_class g = 0;
  std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, const std::function<void()>&)> choose =
      [&](std::size_t start, std::vector<std::size_t>& pick, std::size_t limit, const std::function<void()>& body) {
        if (pick.size() == s) {
          body();
          return;
        }
        for (std::size_t i = start; i < limit; ++i) {
          pick.push_back(i);
          choose(i + 1, pick, limit, body);
          pick.pop_back();
        }
      };
  choose(0, rows, m.rows(), [&] {
    choose(0, cols, m.cols(), [&] {
      IntegerMatrix sub(s, s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) sub(i, j) = m(rows[i], cols[j]);
      const mpz_class d = bareiss_determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

/// x_J · x_K computed in the group algebra ℤW as a product of coset sums, then
/// re-expressed in the descent basis. The coefficient of g in Σ c_L x_L depends
/// only on A = S ∖ D_R(g) and equals h(A) = Σ_{L ⊆ A} c_L; Möbius inversion
/// recovers c. Throws CrossCheckFailed if the product is not a descent element.
inline std::vector<mpz_class> coset_sum_product(const CoxeterSystem& sys, Mask j, Mask k) {
  std::vector<std::int64_t> z(sys.size(), 0);
  const auto xj = sys.min_coset_reps(j);
  const auto xk = sys.min_coset_reps(k);
  for (Element u : xj)
    for (Element v : xk) ++z[sys.multiply(u, v)];

  const std::size_t nsub = sys.num_subsets();
  const Mask full = sys.full_mask();
  std::vector<std::int64_t> h(nsub, 0);
  std::vector<bool> seen(nsub, false);
  for (Element g = 0; g < sys.size(); ++g) {
    const Mask a = full & ~sys.right_descents(g);
    if (!seen[a]) {
      seen[a] = true;
      h[a] = z[g];
    } else if (h[a] != z[g]) {
      fail(ErrorCode::CrossCheckFailed, "coset-sum product is not constant on descent classes");
    }
  }
  std::vector<mpz_class> c(nsub, 0);
  for (Mask l = 0; l < nsub; ++l)
    for (Mask m = l;; m = (m - 1) & l) {
      const bool odd = popcount(l & ~m) & 1;
      c[l] += odd ? -h[m] : h[m];
      if (m == 0) break;
    }
  return c;
}

}  // namespace goodprime::check
