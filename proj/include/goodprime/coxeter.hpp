#pragma once

// Finite Coxeter groups as permutations of their roots.
//
// Roots are indexed 0..2N-1: index r < N is the r-th positive root, N + r is
// its negative, and the simple root α_s has index s. An element is stored as
// its permutation of root indices; the images of the simple roots determine
// it and serve as the hash key.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goodprime/config.hpp"
#include "goodprime/errors.hpp"
#include "goodprime/matrix.hpp"
#include "goodprime/zphi.hpp"

namespace goodprime {

using Mask = std::uint32_t;
using Element = std::uint32_t;

inline constexpr int kMaxRank = 8;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Subset J written as "{s1,s3}" with 1-based generator names.
inline std::string mask_name(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; m >> s; ++s)
    if (m >> s & 1) {
      if (!first) out += ",";
      out += "s" + std::to_string(s + 1);
      first = false;
    }
  return out + "}";
}

/// Coxeter matrix of a standard family in Bourbaki numbering.
inline Matrix<int> standard_coxeter_matrix(const std::string& family, int n) {
  auto chain = [](int rank) {
    Matrix<int> m(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank), 2);
    for (int i = 0; i < rank; ++i) m(i, i) = 1;
    for (int i = 0; i + 1 < rank; ++i) m(i, i + 1) = m(i + 1, i) = 3;
    return m;
  };
  auto set = [](Matrix<int>& m, int i, int j, int v) { m(i, j) = m(j, i) = v; };
  if (family == "A") {
    if (n < 1 || n > kMaxRank) fail(ErrorCode::UnsupportedType, "A_n needs 1 <= n <= 8");
    return chain(n);
  }
  if (family == "B" || family == "C") {
    if (n < 2 || n > kMaxRank) fail(ErrorCode::UnsupportedType, "B_n needs 2 <= n <= 8");
    auto m = chain(n);
    set(m, n - 2, n - 1, 4);
    return m;
  }
  if (family == "D") {
    if (n < 4 || n > kMaxRank) fail(ErrorCode::UnsupportedType, "D_n needs 4 <= n <= 8");
    auto m = chain(n);
    set(m, n - 2, n - 1, 2);
    set(m, n - 3, n - 1, 3);
    return m;
  }
  if (family == "E") {
    if (n < 6 || n > 8) fail(ErrorCode::UnsupportedType, "E_n needs 6 <= n <= 8");
    Matrix<int> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 2);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    set(m, 0, 2, 3);
    set(m, 1, 3, 3);
    for (int i = 2; i + 1 < n; ++i) set(m, i, i + 1, 3);
    return m;
  }
  if (family == "F") {
    if (n != 4) fail(ErrorCode::UnsupportedType, "F has rank 4 only");
    auto m = chain(4);
    set(m, 1, 2, 4);
    return m;
  }
  if (family == "G") {
    if (n != 2) fail(ErrorCode::UnsupportedType, "G has rank 2 only");
    auto m = chain(2);
    set(m, 0, 1, 6);
    return m;
  }
  if (family == "H") {
    if (n != 3 && n != 4) fail(ErrorCode::UnsupportedType, "H_n needs n in {3, 4}");
    auto m = chain(n);
    set(m, 0, 1, 5);
    return m;
  }
  if (family == "I2" || family == "I") {
    if (n < 2) fail(ErrorCode::UnsupportedType, "I2(m) needs m >= 2");
    auto m = chain(2);
    set(m, 0, 1, n);
    return m;
  }
  fail(ErrorCode::UnsupportedType, "unknown Coxeter family '" + family + "'");
}

/// Classical order of a standard family, when the formula is known.
inline std::optional<std::uint64_t> classical_order(const std::string& family, int n) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  if (family == "A") return fact(n + 1);
  if (family == "B" || family == "C") return (std::uint64_t{1} << n) * fact(n);
  if (family == "D") return (std::uint64_t{1} << (n - 1)) * fact(n);
  if (family == "E") return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  if (family == "F") return 1152;
  if (family == "G") return 12;
  if (family == "H") return n == 3 ? 120 : 14400;
  if (family == "I2" || family == "I") return 2 * static_cast<std::uint64_t>(n);
  return std::nullopt;
}

class CoxeterSystem {
 public:
  /// Standard family; for I2 the second argument is m.
  static CoxeterSystem build(const std::string& family, int rank_or_m, const Budgets& budgets = {}) {
    const std::string label = family == "I2" || family == "I" ? "I2(" + std::to_string(rank_or_m) + ")"
                                                              : family + std::to_string(rank_or_m);
    CoxeterSystem sys = from_matrix(standard_coxeter_matrix(family, rank_or_m), budgets, label);
    const auto expected = classical_order(family, rank_or_m);
    if (expected && *expected != sys.size())
      fail(ErrorCode::CrossCheckFailed, label + ": enumerated " + std::to_string(sys.size()) + " elements, expected " +
                                            std::to_string(*expected));
    return sys;
  }

  /// Custom Coxeter matrix. Rank 2 uses the dihedral model; otherwise the
  /// Coxeter graph must be a forest with labels in {2,...,6}.
  static CoxeterSystem from_matrix(const Matrix<int>& m, const Budgets& budgets = {}, std::string label = "custom") {
    const std::size_t n = m.rows();
    if (m.cols() != n) fail(ErrorCode::InvalidCoxeterMatrix, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) != m(j, i)) fail(ErrorCode::InvalidCoxeterMatrix, "matrix is not symmetric");
        if (i == j && m(i, j) != 1) fail(ErrorCode::InvalidCoxeterMatrix, "diagonal entries must be 1");
        if (i != j && m(i, j) < 2) fail(ErrorCode::InvalidCoxeterMatrix, "off-diagonal entries must be >= 2");
      }
    if (n == 0 || n > static_cast<std::size_t>(kMaxRank))
      fail(ErrorCode::UnsupportedType, "rank must be between 1 and 8");

    CoxeterSystem sys;
    sys.label_ = std::move(label);
    sys.rank_ = static_cast<int>(n);
    sys.matrix_ = m;
    if (n == 2)
      sys.dihedral_roots(m(0, 1));
    else
      sys.geometric_roots();
    sys.enumerate(budgets.group);
    return sys;
  }

  /// One matrix row per line, whitespace-separated integers.
  static CoxeterSystem parse_matrix(const std::string& text, const Budgets& budgets = {}) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream in(line);
      std::vector<int> row;
      std::string tok;
      while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size()) fail(ErrorCode::InvalidCoxeterMatrix, "not an integer: '" + tok + "'");
        row.push_back(v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::InvalidCoxeterMatrix, "empty matrix");
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail(ErrorCode::InvalidCoxeterMatrix, "matrix is not square");
    return from_matrix(Matrix<int>::from_rows(rows, rows.size()), budgets);
  }

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  Mask full_mask() const { return (Mask{1} << rank_) - 1; }
  std::size_t num_subsets() const { return std::size_t{1} << rank_; }
  const Matrix<int>& coxeter_matrix() const { return matrix_; }
  int m(int s, int t) const { return matrix_(s, t); }
  bool is_dihedral_model() const { return rank_ == 2; }

  std::size_t num_positive_roots() const { return nroots_; }
  /// Coordinates of positive roots in the simple-root basis (empty for the dihedral model).
  const std::vector<std::vector<ZPhi>>& positive_roots() const { return roots_; }
  bool is_positive_index(std::uint32_t r) const { return r < nroots_; }
  std::uint32_t negate_index(std::uint32_t r) const {
    return r < nroots_ ? r + static_cast<std::uint32_t>(nroots_) : r - static_cast<std::uint32_t>(nroots_);
  }
  /// Index of s_s(root r).
  std::uint32_t reflect_index(int s, std::uint32_t r) const { return gens_[s][r]; }

  std::size_t size() const { return length_.size(); }
  static constexpr Element identity() { return 0; }
  Element longest_element() const { return static_cast<Element>(size() - 1); }
  int length(Element w) const { return length_[w]; }
  int max_length() const { return length_.back(); }

  Element right_mult(Element w, int s) const { return right_[w * rank_ + s]; }
  Element left_mult(int s, Element w) const { return left_[w * rank_ + s]; }
  Element inverse(Element w) const { return inverse_[w]; }
  Element generator(int s) const { return right_mult(identity(), s); }

  Element multiply(Element u, Element v) const {
    for (int s : reduced_word(v)) u = right_mult(u, s);
    return u;
  }

  /// Reduced word s_{i1}⋯s_{ik} in BFS order (generator indices).
  std::vector<int> reduced_word(Element w) const {
    std::vector<int> word(static_cast<std::size_t>(length_[w]));
    for (std::size_t k = word.size(); k-- > 0;) {
      word[k] = last_gen_[w];
      w = parent_[w];
    }
    return word;
  }

  /// Image of root index r under w.
  std::uint32_t root_image(Element w, std::uint32_t r) const { return perm_[w * 2 * nroots_ + r]; }

  Mask right_descents(Element w) const { return rdes_[w]; }
  Mask left_descents(Element w) const { return ldes_[w]; }
  Mask support(Element w) const { return support_[w]; }
  bool in_parabolic(Element w, Mask j) const { return is_subset(support_[w], j); }

  /// k with w⁻¹ s_j w = s_k, or -1 when the conjugate is not simple.
  int conjugate_simple(Element w, int j) const {
    std::uint32_t r = root_image(inverse(w), static_cast<std::uint32_t>(j));
    if (r >= nroots_) r -= static_cast<std::uint32_t>(nroots_);
    return r < static_cast<std::uint32_t>(rank_) ? static_cast<int>(r) : -1;
  }

  /// Product of the generators of J in ascending index order.
  Element coxeter_element(Mask j) const {
    Element c = identity();
    for (int s = 0; s < rank_; ++s)
      if (j >> s & 1) c = right_mult(c, s);
    return c;
  }

  /// Number of elements of each length 0..ℓ(w₀).
  std::vector<std::size_t> length_histogram() const {
    std::vector<std::size_t> h(static_cast<std::size_t>(max_length()) + 1, 0);
    for (int l : length_) ++h[static_cast<std::size_t>(l)];
    return h;
  }

  /// X_J: w with ℓ(ws) > ℓ(w) for every s ∈ J.
  std::vector<Element> min_coset_reps(Mask j) const {
    std::vector<Element> out;
    for (Element w = 0; w < size(); ++w)
      if ((rdes_[w] & j) == 0) out.push_back(w);
    return out;
  }

  /// {s ∈ K : w⁻¹ j w = s for some j ∈ J}.
  Mask conjugate_intersection(Element w, Mask j, Mask k) const {
    Mask out = 0;
    for (int s = 0; s < rank_; ++s)
      if (j >> s & 1) {
        const int t = conjugate_simple(w, s);
        if (t >= 0 && (k >> t & 1)) out |= Mask{1} << t;
      }
    return out;
  }

  /// X_JK = X_J⁻¹ ∩ X_K, each paired with w⁻¹Jw ∩ K.
  std::vector<std::pair<Element, Mask>> double_coset_reps(Mask j, Mask k) const {
    std::vector<std::pair<Element, Mask>> out;
    for (Element w = 0; w < size(); ++w)
      if ((ldes_[w] & j) == 0 && (rdes_[w] & k) == 0) out.emplace_back(w, conjugate_intersection(w, j, k));
    return out;
  }

 private:
  CoxeterSystem() = default;

  // Angle model: roots at angles jπ/m, j < 2m, α₁ at 0 and α₂ at (m-1)π/m.
  void dihedral_roots(int m) {
    nroots_ = static_cast<std::size_t>(m);
    const auto N = static_cast<std::uint32_t>(m);
    auto index_of_angle = [m, N](int j) -> std::uint32_t {
      j %= 2 * m;
      const bool neg = j >= m;
      const int a = neg ? j - m : j;
      const std::uint32_t pos = a == 0 ? 0u : a == m - 1 ? 1u : static_cast<std::uint32_t>(a + 1);
      return neg ? pos + N : pos;
    };
    gens_.assign(2, std::vector<std::uint32_t>(2 * nroots_));
    for (int j = 0; j < 2 * m; ++j) {
      gens_[0][index_of_angle(j)] = index_of_angle(3 * m - j);
      gens_[1][index_of_angle(j)] = index_of_angle(3 * m - 2 - j);
    }
  }

  // Root system of a forest Coxeter graph over ℤ[φ]: s_i(α_j) = α_j - A_ij α_i.
  void geometric_roots() {
    const int n = rank_;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    Matrix<ZPhi> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), ZPhi(0));
    for (int i = 0; i < n; ++i) {
      a(i, i) = ZPhi(2);
      for (int j = i + 1; j < n; ++j) {
        const int mij = matrix_(i, j);
        if (mij == 2) continue;
        if (mij > 6) fail(ErrorCode::UnsupportedType, "edge label " + std::to_string(mij) + " in rank >= 3");
        const int ri = find(i), rj = find(j);
        if (ri == rj) fail(ErrorCode::UnsupportedType, "Coxeter graph has a cycle");
        parent[ri] = rj;
        switch (mij) {
          case 3: a(i, j) = a(j, i) = ZPhi(-1); break;
          case 4: a(i, j) = ZPhi(-2); a(j, i) = ZPhi(-1); break;
          case 5: a(i, j) = a(j, i) = -ZPhi::phi(); break;
          case 6: a(i, j) = ZPhi(-3); a(j, i) = ZPhi(-1); break;
        }
      }
    }
    constexpr std::size_t kRootCap = 120;  // E8 has the most positive roots among finite types of rank <= 8
    std::map<std::vector<ZPhi>, std::uint32_t> index;
    for (int i = 0; i < n; ++i) {
      std::vector<ZPhi> e(static_cast<std::size_t>(n), ZPhi(0));
      e[i] = ZPhi(1);
      index.emplace(e, static_cast<std::uint32_t>(roots_.size()));
      roots_.push_back(std::move(e));
    }
    auto reflect = [&](int i, const std::vector<ZPhi>& b) {
      ZPhi c(0);
      for (int j = 0; j < n; ++j) c = c + a(i, j) * b[j];
      std::vector<ZPhi> out = b;
      out[i] = out[i] - c;
      return out;
    };
    for (std::size_t q = 0; q < roots_.size(); ++q)
      for (int i = 0; i < n; ++i) {
        if (q == static_cast<std::size_t>(i)) continue;
        std::vector<ZPhi> r = reflect(i, roots_[q]);
        if (index.count(r)) continue;
        for (const ZPhi& x : r)
          if (x.sign() < 0) fail(ErrorCode::CrossCheckFailed, "reflection produced a mixed-sign root");
        if (roots_.size() == kRootCap) fail(ErrorCode::UnsupportedType, "Coxeter group is infinite");
        index.emplace(r, static_cast<std::uint32_t>(roots_.size()));
        roots_.push_back(std::move(r));
      }
    nroots_ = roots_.size();
    const auto N = static_cast<std::uint32_t>(nroots_);
    gens_.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(2 * nroots_));
    for (int i = 0; i < n; ++i)
      for (std::uint32_t q = 0; q < N; ++q) {
        std::uint32_t img;
        if (q == static_cast<std::uint32_t>(i)) {
          img = q + N;
        } else {
          img = index.at(reflect(i, roots_[q]));
        }
        gens_[i][q] = img;
        gens_[i][q + N] = img < N ? img + N : img - N;
      }
  }

  std::uint64_t key_of(const std::uint32_t* perm) const {
    std::uint64_t key = 0;
    for (int s = 0; s < rank_; ++s) key = key << key_bits_ | perm[s];
    return key;
  }

  void enumerate(std::size_t cap) {
    const std::size_t R = 2 * nroots_;
    key_bits_ = static_cast<int>(std::bit_width(R - 1));
    if (key_bits_ * rank_ > 64) fail(ErrorCode::UnsupportedType, "root system too large to index");
    std::unordered_map<std::uint64_t, Element> seen;
    auto add = [&](std::vector<std::uint32_t>& p, int len, Element from, int gen) -> Element {
      const auto [it, inserted] = seen.emplace(key_of(p.data()), static_cast<Element>(length_.size()));
      if (!inserted) return it->second;
      if (length_.size() >= cap)
        fail(ErrorCode::BudgetExceeded, label_ + " has more than " + std::to_string(cap) + " elements");
      perm_.insert(perm_.end(), p.begin(), p.end());
      length_.push_back(len);
      parent_.push_back(from);
      last_gen_.push_back(gen);
      return it->second;
    };
    std::vector<std::uint32_t> p(R);
    std::iota(p.begin(), p.end(), 0u);
    add(p, 0, 0, -1);
    right_.clear();
    for (Element w = 0; w < length_.size(); ++w)
      for (int s = 0; s < rank_; ++s) {
        // (ws)(r) = w(s(r))
        for (std::size_t r = 0; r < R; ++r) p[r] = perm_[w * R + gens_[s][r]];
        right_.push_back(add(p, length_[w] + 1, w, s));
      }
    const std::size_t n = length_.size();
    left_.resize(n * rank_);
    inverse_.resize(n);
    rdes_.resize(n);
    ldes_.resize(n);
    support_.assign(n, 0);
    std::vector<std::uint32_t> inv(R);
    for (Element w = 0; w < n; ++w) {
      const std::uint32_t* pw = &perm_[w * R];
      for (int s = 0; s < rank_; ++s) {
        for (std::size_t r = 0; r < R; ++r) p[r] = gens_[s][pw[r]];
        left_[w * rank_ + s] = seen.at(key_of(p.data()));
      }
      for (std::size_t r = 0; r < R; ++r) inv[pw[r]] = static_cast<std::uint32_t>(r);
      inverse_[w] = seen.at(key_of(inv.data()));
      Mask rd = 0, ld = 0;
      for (int s = 0; s < rank_; ++s) {
        if (pw[s] >= nroots_) rd |= Mask{1} << s;
        if (inv[s] >= nroots_) ld |= Mask{1} << s;
      }
      rdes_[w] = rd;
      ldes_[w] = ld;
      if (w != 0) support_[w] = support_[parent_[w]] | Mask{1} << last_gen_[w];
    }
  }

  std::string label_;
  int rank_ = 0;
  Matrix<int> matrix_;
  std::size_t nroots_ = 0;
  std::vector<std::vector<ZPhi>> roots_;
  std::vector<std::vector<std::uint32_t>> gens_;
  int key_bits_ = 0;

  std::vector<std::uint32_t> perm_;
  std::vector<int> length_;
  std::vector<Element> parent_;
  std::vector<int> last_gen_;
  std::vector<Element> right_, left_, inverse_;
  std::vector<Mask> rdes_, ldes_, support_;
};

/// W-conjugacy classes of subsets of S.
struct CoxeterClasses {
  std::vector<int> class_of;             // subset -> class index
  std::vector<std::vector<Mask>> members;  // per class, ascending bitmask
  std::vector<Mask> reps;                // minimal member of each class

  std::size_t size() const { return reps.size(); }
  bool equivalent(Mask j, Mask k) const { return class_of[j] == class_of[k]; }
  /// J ⊆_W K: some conjugate of J lies inside K.
  bool contained(Mask j, Mask k) const {
    for (Mask jj : members[static_cast<std::size_t>(class_of[j])])
      if (is_subset(jj, k)) return true;
    return false;
  }
};

/// Brute force over conjugators; classes ordered by (|J|, minimal bitmask).
inline CoxeterClasses coxeter_classes(const CoxeterSystem& sys) {
  const std::size_t nsub = sys.num_subsets();
  std::vector<Mask> uf(nsub);
  std::iota(uf.begin(), uf.end(), Mask{0});
  auto find = [&](Mask x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  constexpr Mask kInvalid = ~Mask{0};
  std::vector<Mask> image(nsub);
  for (Element w = 0; w < sys.size(); ++w) {
    int conj[kMaxRank];
    for (int s = 0; s < sys.rank(); ++s) conj[s] = sys.conjugate_simple(w, s);
    image[0] = 0;
    for (Mask j = 1; j < nsub; ++j) {
      const int low = std::countr_zero(j);
      const Mask rest = image[j & (j - 1)];
      image[j] = (rest == kInvalid || conj[low] < 0) ? kInvalid : rest | Mask{1} << conj[low];
      if (image[j] != kInvalid) {
        const Mask a = find(j), b = find(image[j]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<Mask> roots;
  for (Mask j = 0; j < nsub; ++j)
    if (find(j) == j) roots.push_back(j);  // the root of each tree is its minimal member
  std::stable_sort(roots.begin(), roots.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  CoxeterClasses out;
  out.class_of.assign(nsub, -1);
  out.reps = roots;
  out.members.resize(roots.size());
  std::vector<int> by_root(nsub, -1);
  for (std::size_t c = 0; c < roots.size(); ++c) by_root[roots[c]] = static_cast<int>(c);
  for (Mask j = 0; j < nsub; ++j) {
    const int c = by_root[find(j)];
    out.class_of[j] = c;
    out.members[static_cast<std::size_t>(c)].push_back(j);
  }
  return out;
}

}  // namespace goodprime
