#pragma once

// The 0-Hecke monoid of W and its algebra in the basis T_w = (−1)^{ℓ(w)} π_w.

#include <cstdint>
#include <map>
#include <vector>

#include "goodprime/bands.hpp"
#include "goodprime/basic_algebra.hpp"
#include "goodprime/coxeter.hpp"

namespace goodprime {

/// Monoid generated by π_s acting on W on the right: u ↦ us if ℓ(us) > ℓ(u), else u.
struct HeckeMonoid {
  std::vector<Element> of_element;    // monoid index -> w = image of e
  std::vector<std::uint32_t> index;   // w -> monoid index
  std::vector<std::uint32_t> product; // product[a * n + b]: π_a then π_b, i.e. Demazure product
  std::vector<Mask> support;          // supp(w) per monoid index

  std::size_t size() const { return of_element.size(); }
};

inline HeckeMonoid hecke_monoid(const CoxeterSystem& sys, std::size_t cap) {
  const std::size_t n = sys.size();
  auto pi = [&](Element u, int s) {
    const Element us = sys.right_mult(u, s);
    return sys.length(us) > sys.length(u) ? us : u;
  };
  // Closure of the transformation monoid from the identity map.
  std::map<std::vector<Element>, std::uint32_t> seen;
  std::vector<std::vector<Element>> maps;
  std::vector<Element> id(n);
  for (Element w = 0; w < n; ++w) id[w] = w;
  seen.emplace(id, 0);
  maps.push_back(id);
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (int s = 0; s < sys.rank(); ++s) {
      std::vector<Element> next(n);
      for (Element w = 0; w < n; ++w) next[w] = pi(maps[k][w], s);
      if (seen.count(next)) continue;
      if (maps.size() >= cap)
        fail(ErrorCode::ClosureBudgetExceeded, "0-Hecke monoid has more than " + std::to_string(cap) + " elements");
      seen.emplace(next, static_cast<std::uint32_t>(maps.size()));
      maps.push_back(std::move(next));
    }
  HeckeMonoid out;
  out.index.assign(n, ~std::uint32_t{0});
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const Element w = maps[k][0];
    if (out.index[w] != ~std::uint32_t{0}) fail(ErrorCode::CrossCheckFailed, "two monoid elements send e to the same w");
    out.index[w] = static_cast<std::uint32_t>(k);
    out.of_element.push_back(w);
  }
  if (maps.size() != n) fail(ErrorCode::CrossCheckFailed, "0-Hecke monoid size differs from |W|");
  out.support.resize(n);
  out.product.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    out.support[a] = sys.support(out.of_element[a]);
    for (std::size_t b = 0; b < n; ++b) {
      // π_a then π_b sends e to (e ∗ u) ∗ v = u ∗ v.
      const Element v = maps[b][maps[a][0]];
      out.product[a * n + b] = out.index[v];
    }
  }
  return out;
}

/// λ_J(T_w) = (−1)^{ℓ(w)} if supp(w) ∩ J = ∅, else 0; basis indexed by monoid index.
template <Field F>
std::vector<Vec<F>> hecke_characters(const CoxeterSystem& sys, const HeckeMonoid& mon, const F& field) {
  std::vector<Vec<F>> chars;
  for (Mask j = 0; j < sys.num_subsets(); ++j) {
    Vec<F> chi = zero_vector(field, mon.size());
    for (std::size_t a = 0; a < mon.size(); ++a)
      if ((mon.support[a] & j) == 0)
        chi[a] = sys.length(mon.of_element[a]) % 2 ? field.neg(field.one()) : field.one();
    chars.push_back(std::move(chi));
  }
  return chars;
}

/// T_u T_v = (−1)^{ℓ(u)+ℓ(v)−ℓ(u∗v)} T_{u∗v}; simples indexed by J ⊆ S in bitmask order.
template <Field F>
BasicAlgebra<F> hecke_monoid_algebra(const CoxeterSystem& sys, const HeckeMonoid& mon, const F& field) {
  const std::size_t n = mon.size();
  std::vector<typename BasicAlgebra<F>::Sparse> products(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t c = mon.product[a * n + b];
      const int e = sys.length(mon.of_element[a]) + sys.length(mon.of_element[b]) - sys.length(mon.of_element[c]);
      products[a * n + b].emplace_back(c, e % 2 ? field.neg(field.one()) : field.one());
    }
  Vec<F> one = zero_vector(field, n);
  one[mon.index[CoxeterSystem::identity()]] = field.one();
  const auto chars = hecke_characters(sys, mon, field);
  BasicAlgebra<F> draft(field, n, products, one, {}, {});
  const MultiplyFn<F> mul = [&draft](const Vec<F>& x, const Vec<F>& y) { return draft.multiply(x, y); };
  auto idem = idempotents_from_characters(field, mul, one, chars);
  auto rad = character_kernel(field, chars, n);
  return BasicAlgebra<F>(field, n, std::move(products), std::move(one), std::move(idem), std::move(rad));
}

}  // namespace goodprime
