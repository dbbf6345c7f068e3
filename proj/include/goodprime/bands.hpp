#pragma once

// Face semigroups of central hyperplane arrangements (left regular bands) and
// their algebras.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "goodprime/basic_algebra.hpp"
#include "goodprime/idempotents.hpp"
#include "goodprime/linalg.hpp"

namespace goodprime {

using SignVector = std::vector<std::int8_t>;  // entries in {-1, 0, 1}

namespace detail {

// Feasibility of {x : c·x ≥ b for every row} over ℚ by Fourier–Motzkin.
inline bool fm_feasible(std::vector<std::pair<std::vector<mpq_class>, mpq_class>> rows, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> pos, neg, next;
    for (auto& r : rows) {
      const int s = sgn(r.first[v]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    // p: a x_v + rest ≥ b (a > 0); q: −c x_v + rest' ≥ b' (c > 0). Combine c·p + a·q.
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const mpq_class a = p.first[v], c = -q.first[v];
        std::vector<mpq_class> coef(vars);
        for (std::size_t k = 0; k < vars; ++k) coef[k] = c * p.first[k] + a * q.first[k];
        next.emplace_back(std::move(coef), c * p.second + a * q.second);
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.second > 0) return false;
  return true;
}

}  // namespace detail

/// Faces of a central arrangement with the product σ(xy)_H = σ(x)_H if nonzero, else σ(y)_H.
struct FaceSemigroup {
  std::size_t num_hyperplanes = 0;
  std::vector<SignVector> faces;         // faces[0] is the unit (all zeros)
  std::vector<std::uint32_t> product;    // product[x * n + y]
  std::vector<std::uint32_t> zero_set;   // bitmask of hyperplanes containing the face

  std::size_t size() const { return faces.size(); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return product[x * size() + y]; }
};

inline FaceSemigroup enumerate_faces(const std::vector<std::vector<long>>& normals) {
  const std::size_t n = normals.size();
  if (n == 0) fail(ErrorCode::DegenerateArrangement, "no hyperplanes");
  if (n > 16) fail(ErrorCode::DegenerateArrangement, "at most 16 hyperplanes are supported");
  const std::size_t d = normals[0].size();
  for (const auto& a : normals) {
    if (a.size() != d || d == 0) fail(ErrorCode::DegenerateArrangement, "normals have inconsistent dimension");
    if (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; }))
      fail(ErrorCode::DegenerateArrangement, "zero normal vector");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool parallel = true;  // all 2×2 minors vanish
      for (std::size_t k = 0; k < d && parallel; ++k)
        for (std::size_t l = k + 1; l < d && parallel; ++l)
          if (normals[i][k] * normals[j][l] != normals[i][l] * normals[j][k]) parallel = false;
      if (parallel) fail(ErrorCode::DegenerateArrangement, "normals " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
    }

  std::vector<SignVector> found;
  SignVector sv(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) sv[i] = static_cast<std::int8_t>(static_cast<int>(c % 3) - 1);
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<mpq_class> a(d), na(d);
      for (std::size_t k = 0; k < d; ++k) {
        a[k] = normals[i][k];
        na[k] = -normals[i][k];
      }
      if (sv[i] == 0) {
        rows.emplace_back(a, 0);
        rows.emplace_back(na, 0);
      } else {
        rows.emplace_back(sv[i] > 0 ? a : na, 1);
      }
    }
    if (detail::fm_feasible(std::move(rows), d)) found.push_back(sv);
  }
  // Unit first, then by decreasing number of zeros, then lexicographically.
  std::sort(found.begin(), found.end(), [](const SignVector& a, const SignVector& b) {
    const auto za = std::count(a.begin(), a.end(), 0), zb = std::count(b.begin(), b.end(), 0);
    return za != zb ? za > zb : a < b;
  });
  FaceSemigroup out;
  out.num_hyperplanes = n;
  out.faces = found;
  std::map<SignVector, std::uint32_t> index;
  for (std::size_t i = 0; i < found.size(); ++i) {
    index.emplace(found[i], static_cast<std::uint32_t>(i));
    std::uint32_t z = 0;
    for (std::size_t h = 0; h < n; ++h)
      if (found[i][h] == 0) z |= std::uint32_t{1} << h;
    out.zero_set.push_back(z);
  }
  const std::size_t m = found.size();
  out.product.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      SignVector p(n);
      for (std::size_t h = 0; h < n; ++h) p[h] = found[x][h] != 0 ? found[x][h] : found[y][h];
      const auto it = index.find(p);
      if (it == index.end()) fail(ErrorCode::NotLeftRegularBand, "face product is not a face");
      out.product[x * m + y] = it->second;
    }
  return out;
}

/// x² = x and xyx = xy for all faces.
inline void check_left_regular_band(const FaceSemigroup& b) {
  for (std::uint32_t x = 0; x < b.size(); ++x) {
    if (b.mul(x, x) != x) fail(ErrorCode::NotLeftRegularBand, "x^2 != x");
    for (std::uint32_t y = 0; y < b.size(); ++y)
      if (b.mul(b.mul(x, y), x) != b.mul(x, y)) fail(ErrorCode::NotLeftRegularBand, "xyx != xy");
  }
}

/// Λ(B): supports identified with zero sets; X ≤ Y iff Z_Y ⊆ Z_X. The unit's
/// support is the bottom, chambers' support the top.
struct SupportLattice {
  std::vector<std::uint32_t> zero_sets;    // one per support, ordered bottom-up by rank then mask
  std::vector<std::size_t> support_of;     // face -> support index
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (X, Y) with X ⋖ Y

  std::size_t size() const { return zero_sets.size(); }
  bool leq(std::size_t x, std::size_t y) const { return (zero_sets[y] & ~zero_sets[x]) == 0; }
};

inline SupportLattice support_lattice(const FaceSemigroup& b) {
  SupportLattice out;
  std::vector<std::uint32_t> z = b.zero_set;
  std::sort(z.begin(), z.end(), [](std::uint32_t a, std::uint32_t c) {
    return std::popcount(a) != std::popcount(c) ? std::popcount(a) > std::popcount(c) : a < c;
  });
  z.erase(std::unique(z.begin(), z.end()), z.end());
  out.zero_sets = z;
  for (std::uint32_t f = 0; f < b.size(); ++f)
    out.support_of.push_back(static_cast<std::size_t>(std::find(z.begin(), z.end(), b.zero_set[f]) - z.begin()));
  for (std::size_t x = 0; x < z.size(); ++x)
    for (std::size_t y = 0; y < z.size(); ++y) {
      if (x == y || !out.leq(x, y)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < z.size() && cover; ++m)
        if (m != x && m != y && out.leq(x, m) && out.leq(m, y)) cover = false;
      if (cover) out.hasse.emplace_back(x, y);
    }
  return out;
}

/// Quiver arrows Y → X for every cover X ⋖ Y, sorted. Reading Λ(B) as left
/// ideals Bb under inclusion reverses the order, so these are the Hasse edges
/// pointing up in that convention.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_arrows(const SupportLattice& lat) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [x, y] : lat.hasse) out.emplace_back(y, x);
  std::sort(out.begin(), out.end());
  return out;
}

/// Arrows i → j repeated dim Ext¹(S_i, S_j) times, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> ext_arrows(const Matrix<std::size_t>& ext1) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ext1.rows(); ++i)
    for (std::size_t j = 0; j < ext1.cols(); ++j)
      for (std::size_t k = 0; k < ext1(i, j); ++k) out.emplace_back(i, j);
  return out;
}

/// Lifts character-dual preimages to primitive orthogonal idempotents. `chars`
/// holds one character (a row of values on the basis) per simple.
template <Field F>
std::vector<Vec<F>> idempotents_from_characters(const F& field, const MultiplyFn<F>& mul, const Vec<F>& one,
                                                const std::vector<Vec<F>>& chars) {
  const std::size_t m = chars.size(), dim = one.size();
  Matrix<typename F::value_type> c(m, dim, field.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < dim; ++j) c(i, j) = chars[i][j];
  std::vector<Vec<F>> f;
  for (std::size_t i = 0; i < m; ++i) {
    Vec<F> unit = zero_vector(field, m);
    unit[i] = field.one();
    auto x = solve(field, c, unit);
    if (!x) fail(ErrorCode::InvalidAlgebra, "characters are linearly dependent");
    f.push_back(std::move(*x));
  }
  return orthogonal_lift(field, mul, one, f).e;
}

/// Common kernel of the characters.
template <Field F>
std::vector<Vec<F>> character_kernel(const F& field, const std::vector<Vec<F>>& chars, std::size_t dim) {
  Matrix<typename F::value_type> c(chars.size(), dim, field.zero());
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) c(i, j) = chars[i][j];
  return nullspace(field, c);
}

/// The face algebra kB with one idempotent per support (in lattice order) and
/// radical the kernel of χ_X(y) = [Z_X ⊆ Z(y)].
template <Field F>
BasicAlgebra<F> band_algebra(const FaceSemigroup& b, const SupportLattice& lat, const F& field) {
  check_left_regular_band(b);
  const std::size_t n = b.size();
  std::vector<typename BasicAlgebra<F>::Sparse> products(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) products[x * n + y].emplace_back(b.mul(x, y), field.one());
  std::vector<Vec<F>> chars;
  for (std::size_t s = 0; s < lat.size(); ++s) {
    Vec<F> chi = zero_vector(field, n);
    for (std::uint32_t y = 0; y < n; ++y)
      if ((lat.zero_sets[s] & ~b.zero_set[y]) == 0) chi[y] = field.one();
    chars.push_back(std::move(chi));
  }
  Vec<F> one = zero_vector(field, n);
  one[0] = field.one();
  BasicAlgebra<F> draft(field, n, products, one, {}, {});
  const MultiplyFn<F> mul = [&draft](const Vec<F>& x, const Vec<F>& y) { return draft.multiply(x, y); };
  auto idem = idempotents_from_characters(field, mul, one, chars);
  auto rad = character_kernel(field, chars, n);
  return BasicAlgebra<F>(field, n, std::move(products), std::move(one), std::move(idem), std::move(rad));
}

/// Normals of n distinct lines through the origin of the plane.
inline std::vector<std::vector<long>> concurrent_lines(std::size_t n) {
  static const std::vector<std::vector<long>> pool = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}};
  if (n == 0 || n > pool.size()) fail(ErrorCode::InvalidArgument, "between 1 and 8 lines are supported");
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n)};
}

/// Parse "1,0;0,1;1,1".
inline std::vector<std::vector<long>> parse_normals(const std::string& text) {
  std::vector<std::vector<long>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string part = text.substr(start, end - start);
    std::vector<long> v;
    std::size_t p = 0;
    while (p < part.size()) {
      const std::size_t q = std::min(part.find(',', p), part.size());
      const std::string tok = part.substr(p, q - p);
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || tok.find_first_not_of(" ", used) != std::string::npos)
        fail(ErrorCode::InvalidArgument, "bad normal component '" + tok + "'");
      v.push_back(x);
      p = q + 1;
    }
    if (!v.empty()) out.push_back(std::move(v));
    start = end + 1;
  }
  return out;
}

}  // namespace goodprime
