#pragma once

// Split basic algebras given by a multiplication tensor, a complete set of
// primitive orthogonal idempotents and a basis of the radical. Simples are
// one-dimensional; modules are subspaces of A^r with A acting slotwise on the
// left.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "goodprime/config.hpp"
#include "goodprime/errors.hpp"
#include "goodprime/linalg.hpp"

namespace goodprime {

template <Field F>
class BasicAlgebra {
 public:
  using value_type = typename F::value_type;
  using V = Vec<F>;
  using Sparse = std::vector<std::pair<std::uint32_t, value_type>>;

  /// products[i * dim + j] is the expansion of b_i b_j.
  BasicAlgebra(F field, std::size_t dim, std::vector<Sparse> products, V one, std::vector<V> idempotents,
               std::vector<V> radical)
      : field_(std::move(field)),
        dim_(dim),
        products_(std::move(products)),
        one_(std::move(one)),
        idempotents_(std::move(idempotents)),
        radical_(std::move(radical)) {
    if (products_.size() != dim_ * dim_) fail(ErrorCode::InvalidAlgebra, "multiplication tensor has wrong size");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_simples() const { return idempotents_.size(); }
  const V& one() const { return one_; }
  const std::vector<V>& idempotents() const { return idempotents_; }
  const std::vector<V>& radical() const { return radical_; }

  V basis(std::size_t i) const {
    V v = zero_vector(field_, dim_);
    v[i] = field_.one();
    return v;
  }

  V multiply(const V& x, const V& y) const {
    V out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(y[j])) continue;
        const value_type c = field_.mul(x[i], y[j]);
        for (const auto& [k, a] : products_[i * dim_ + j]) out[k] = field_.add(out[k], field_.mul(c, a));
      }
    }
    return out;
  }

  /// Checks every structural invariant exactly; throws InvalidAlgebra naming the first failure.
  void validate(std::uint64_t seed = 1) const {
    auto bad = [](const std::string& what) { fail(ErrorCode::InvalidAlgebra, what); };
    for (std::size_t i = 0; i < dim_; ++i) {
      const V b = basis(i);
      if (!vec_eq(multiply(one_, b), b) || !vec_eq(multiply(b, one_), b)) bad("identity is not two-sided");
    }
    V sum = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < num_simples(); ++i) {
      axpy(field_, sum, field_.one(), idempotents_[i]);
      for (std::size_t j = 0; j < num_simples(); ++j) {
        const V p = multiply(idempotents_[i], idempotents_[j]);
        if (!vec_eq(p, i == j ? idempotents_[i] : zero_vector(field_, dim_)))
          bad("idempotents are not orthogonal idempotents");
      }
    }
    if (!vec_eq(sum, one_)) bad("idempotents do not sum to the identity");

    Subspace<F> rad(field_, dim_);
    for (const auto& r : radical_)
      if (!rad.insert(r)) bad("radical basis is linearly dependent");
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& r : radical_) {
        const V b = basis(i);
        if (!rad.contains(multiply(b, r)) || !rad.contains(multiply(r, b))) bad("radical is not a two-sided ideal");
      }
    Subspace<F> whole = rad;
    for (const auto& e : idempotents_) whole.insert(e);
    if (whole.dim() != dim_ || rad.dim() + num_simples() != dim_)
      bad("span of idempotents and radical is not a direct sum equal to A");
    std::vector<V> power = radical_;
    for (std::size_t n = 1; !power.empty(); ++n) {
      if (n > dim_) bad("radical is not nilpotent");
      Subspace<F> next(field_, dim_);
      std::vector<V> basis_next;
      for (const auto& r : radical_)
        for (const auto& x : power) {
          V p = multiply(r, x);
          if (next.insert(p)) basis_next.push_back(std::move(p));
        }
      power = std::move(basis_next);
    }

    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
      const V bi = basis(i), bj = basis(j), bk = basis(k);
      if (!vec_eq(multiply(multiply(bi, bj), bk), multiply(bi, multiply(bj, bk)))) bad("multiplication is not associative");
    };
    if (dim_ <= 64) {
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
          for (std::size_t k = 0; k < dim_; ++k) check_triple(i, j, k);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
      for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
  }

  /// Basis vectors of J spanning a complement of J² in J. These generate J.
  const std::vector<V>& radical_generators() const {
    if (!generators_computed_) {
      Subspace<F> j2(field_, dim_);
      for (const auto& a : radical_)
        for (const auto& b : radical_) j2.insert(multiply(a, b));
      for (const auto& r : radical_)
        if (j2.insert(r)) generators_.push_back(r);
      generators_computed_ = true;
    }
    return generators_;
  }

  /// Bases of J^0 = A, J^1, J^2, ... ending with the first zero power.
  /// Uses J^{n+1} = span{g x : g generator, x ∈ J^n}.
  std::vector<std::vector<V>> radical_powers() const {
    std::vector<std::vector<V>> powers;
    std::vector<V> all;
    for (std::size_t i = 0; i < dim_; ++i) all.push_back(basis(i));
    powers.push_back(all);
    powers.push_back(radical_);
    const auto& gens = radical_generators();
    while (!powers.back().empty()) {
      if (powers.size() > dim_ + 1) fail(ErrorCode::InvalidAlgebra, "radical is not nilpotent");
      Subspace<F> next(field_, dim_);
      std::vector<V> basis_next;
      for (const auto& g : gens)
        for (const auto& x : powers.back()) {
          V p = multiply(g, x);
          if (next.insert(p)) basis_next.push_back(std::move(p));
        }
      powers.push_back(std::move(basis_next));
    }
    return powers;
  }

  /// dim J^n for n = 0, 1, ... up to and including the first zero.
  std::vector<std::size_t> radical_dims() const {
    std::vector<std::size_t> out;
    for (const auto& p : radical_powers()) out.push_back(p.size());
    return out;
  }

  /// c^{(n)}_{ij} = dim e_j J^n e_i − dim e_j J^{n+1} e_i, for n until the layer vanishes.
  std::vector<Matrix<std::size_t>> graded_cartan() const {
    const auto powers = radical_powers();
    const std::size_t m = num_simples();
    std::vector<Matrix<std::size_t>> piece;  // piece[n](i, j) = dim e_j J^n e_i
    for (const auto& p : powers) {
      Matrix<std::size_t> d(m, m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<V> right;
        for (const auto& x : p) right.push_back(multiply(x, idempotents_[i]));
        for (std::size_t j = 0; j < m; ++j) {
          Subspace<F> s(field_, dim_);
          for (const auto& x : right) s.insert(multiply(idempotents_[j], x));
          d(i, j) = s.dim();
        }
      }
      piece.push_back(std::move(d));
    }
    std::vector<Matrix<std::size_t>> layers;
    for (std::size_t n = 0; n + 1 < piece.size(); ++n) {
      Matrix<std::size_t> c(m, m, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c(i, j) = piece[n](i, j) - piece[n + 1](i, j);
      layers.push_back(std::move(c));
    }
    return layers;
  }

  struct Resolution {
    std::vector<std::vector<std::size_t>> multiplicity;  // [t][j]: copies of P_j in degree t
    std::vector<std::size_t> projective_dim;             // dim P_t
    std::vector<std::size_t> syzygy_dim;                 // dim Ω^{t+1}(S_i), t = 0..max_t
  };

  /// Minimal projective resolution of S_i through degree max_t.
  Resolution minimal_resolution(std::size_t i, std::size_t max_t, const Budgets& budgets = {}) const {
    if (i >= num_simples()) fail(ErrorCode::InvalidArgument, "simple index out of range");
    const std::size_t m = num_simples();
    const auto& pbasis = projective_bases();
    Resolution res;
    res.multiplicity.push_back(std::vector<std::size_t>(m, 0));
    res.multiplicity[0][i] = 1;
    res.projective_dim.push_back(pbasis[i].size());

    // Ω¹(S_i) = J e_i inside A e_i.
    std::size_t slots = 1;
    std::vector<V> module;
    {
      Subspace<F> s(field_, dim_);
      for (const auto& r : radical_) {
        V v = multiply(r, idempotents_[i]);
        if (s.insert(v)) module.push_back(std::move(v));
      }
    }
    res.syzygy_dim.push_back(module.size());

    for (std::size_t t = 1; t <= max_t; ++t) {
      if (module.empty()) {
        res.multiplicity.push_back(std::vector<std::size_t>(m, 0));
        res.projective_dim.push_back(0);
        res.syzygy_dim.push_back(0);
        continue;
      }
      if (module.size() > budgets.syzygy)
        fail(ErrorCode::BudgetExceeded, "syzygy of dimension " + std::to_string(module.size()) + " exceeds the cap of " +
                                            std::to_string(budgets.syzygy));
      const std::size_t amb = slots * dim_;
      // Radical of the module: JM = span{g m}.
      Subspace<F> span(field_, amb);
      for (const auto& g : radical_generators())
        for (const auto& x : module) span.insert(act(g, x, slots));
      // Top generators e_j m, chosen greedily modulo JM.
      std::vector<std::pair<std::size_t, V>> gens;
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& x : module) {
          V v = act(idempotents_[j], x, slots);
          if (span.insert(v)) gens.emplace_back(j, std::move(v));
        }
      if (span.dim() != module.size()) fail(ErrorCode::InvalidAlgebra, "top of a syzygy is not spanned by e_j M");
      std::vector<std::size_t> mult(m, 0);
      std::size_t pdim = 0;
      for (const auto& [j, v] : gens) {
        ++mult[j];
        pdim += pbasis[j].size();
      }
      res.multiplicity.push_back(mult);
      res.projective_dim.push_back(pdim);

      // Projective cover ⊕ A e_j → M, u ↦ u·g; its kernel is the next syzygy.
      Matrix<value_type> cover(amb, pdim, field_.zero());
      std::size_t col = 0;
      for (const auto& [j, v] : gens)
        for (const auto& u : pbasis[j]) {
          const V img = act(u, v, slots);
          for (std::size_t r = 0; r < amb; ++r) cover(r, col) = img[r];
          ++col;
        }
      const auto kernel = nullspace(field_, cover);
      const std::size_t next_slots = gens.size();
      std::vector<V> next;
      next.reserve(kernel.size());
      for (const auto& k : kernel) {
        V v = zero_vector(field_, next_slots * dim_);
        std::size_t c = 0;
        for (std::size_t g = 0; g < gens.size(); ++g)
          for (const auto& u : pbasis[gens[g].first]) {
            if (!field_.is_zero(k[c]))
              for (std::size_t r = 0; r < dim_; ++r)
                if (!field_.is_zero(u[r])) v[g * dim_ + r] = field_.add(v[g * dim_ + r], field_.mul(k[c], u[r]));
            ++c;
          }
        next.push_back(std::move(v));
      }
      module = std::move(next);
      slots = next_slots;
      res.syzygy_dim.push_back(module.size());
    }
    return res;
  }

  /// ext[t](i, j) = dim Ext^t(S_i, S_j) for t ≤ max_t.
  std::vector<Matrix<std::size_t>> ext_dims(std::size_t max_t, const Budgets& budgets = {}) const {
    const std::size_t m = num_simples();
    std::vector<Matrix<std::size_t>> ext(max_t + 1, Matrix<std::size_t>(m, m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      const auto res = minimal_resolution(i, max_t, budgets);
      for (std::size_t t = 0; t <= max_t; ++t)
        for (std::size_t j = 0; j < m; ++j) ext[t](i, j) = res.multiplicity[t][j];
    }
    return ext;
  }

 private:
  bool vec_eq(const V& a, const V& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field_.equal(a[i], b[i])) return false;
    return true;
  }

  // a · (x_1, ..., x_r)
  V act(const V& a, const V& x, std::size_t slots) const {
    V out(slots * dim_, field_.zero());
    for (std::size_t s = 0; s < slots; ++s) {
      const V part(x.begin() + static_cast<std::ptrdiff_t>(s * dim_), x.begin() + static_cast<std::ptrdiff_t>((s + 1) * dim_));
      if (is_zero_vector(field_, part)) continue;
      const V p = multiply(a, part);
      std::copy(p.begin(), p.end(), out.begin() + static_cast<std::ptrdiff_t>(s * dim_));
    }
    return out;
  }

  // Bases of the indecomposable projectives A e_j.
  const std::vector<std::vector<V>>& projective_bases() const {
    if (projectives_.empty()) {
      for (const auto& e : idempotents_) {
        Subspace<F> s(field_, dim_);
        std::vector<V> b;
        for (std::size_t i = 0; i < dim_; ++i) {
          V v = multiply(basis(i), e);
          if (s.insert(v)) b.push_back(std::move(v));
        }
        projectives_.push_back(std::move(b));
      }
    }
    return projectives_;
  }

  F field_;
  std::size_t dim_;
  std::vector<Sparse> products_;
  V one_;
  std::vector<V> idempotents_;
  std::vector<V> radical_;
  mutable bool generators_computed_ = false;
  mutable std::vector<V> generators_;
  mutable std::vector<std::vector<V>> projectives_;
};

/// Ext tables of two algebras with aligned simple labels; LabelMismatch otherwise.
template <Field F1, Field F2>
std::pair<std::vector<Matrix<std::size_t>>, std::vector<Matrix<std::size_t>>> ext_table(
    const BasicAlgebra<F1>& a, const BasicAlgebra<F2>& b, std::size_t max_t, const Budgets& budgets = {}) {
  if (a.num_simples() != b.num_simples())
    fail(ErrorCode::LabelMismatch, "algebras have " + std::to_string(a.num_simples()) + " and " +
                                       std::to_string(b.num_simples()) + " simples");
  return {a.ext_dims(max_t, budgets), b.ext_dims(max_t, budgets)};
}

}  // namespace goodprime
