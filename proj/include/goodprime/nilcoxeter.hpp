#pragma once

#include <vector>

#include "goodprime/basic_algebra.hpp"
#include "goodprime/coxeter.hpp"

namespace goodprime {

/// x_u x_v = x_{uv} when ℓ(uv) = ℓ(u) + ℓ(v), else 0. Basis indexed by the
/// element numbering of the group; x_e = basis 0 is the identity.
template <Field F>
BasicAlgebra<F> build_nilcoxeter(const CoxeterSystem& sys, const F& field) {
  const std::size_t n = sys.size();
  std::vector<typename BasicAlgebra<F>::Sparse> products(n * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) {
      const Element w = sys.multiply(u, v);
      if (sys.length(w) == sys.length(u) + sys.length(v)) products[u * n + v].emplace_back(w, field.one());
    }
  Vec<F> one = zero_vector(field, n);
  one[0] = field.one();
  std::vector<Vec<F>> radical;
  for (Element w = 1; w < n; ++w) {
    Vec<F> v = zero_vector(field, n);
    v[w] = field.one();
    radical.push_back(std::move(v));
  }
  return BasicAlgebra<F>(field, n, std::move(products), one, {one}, std::move(radical));
}

/// dim Ext^t(T, T) for t = 0..max_t, T the unique simple.
template <Field F>
std::vector<std::size_t> nilcoxeter_hilbert(const BasicAlgebra<F>& alg, std::size_t max_t, const Budgets& budgets = {}) {
  const auto res = alg.minimal_resolution(0, max_t, budgets);
  std::vector<std::size_t> out;
  for (const auto& m : res.multiplicity) out.push_back(m[0]);
  return out;
}

}  // namespace goodprime
