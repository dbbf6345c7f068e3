#pragma once

// The chain basis Ω of Rad(𝔇_ℚ), the integer matrices [J(n)], the invariants
// d_{W,n}, n_{W,n}, n_W and the per-field radical dimensions.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "goodprime/basic_algebra.hpp"
#include "goodprime/config.hpp"
#include "goodprime/descent.hpp"
#include "goodprime/idempotents.hpp"
#include "goodprime/smith.hpp"

namespace goodprime {

/// Per class, the members J_1 < … < J_k (bitmask order); Ω pairs (J_i, J_{i+1}).
struct OmegaBasis {
  std::vector<std::vector<Mask>> chains;   // classes with at least two members
  std::vector<std::pair<Mask, Mask>> pairs;

  std::size_t size() const { return pairs.size(); }
};

inline OmegaBasis omega_basis(const CoxeterClasses& classes) {
  OmegaBasis out;
  for (const auto& members : classes.members) {
    if (members.size() < 2) continue;
    out.chains.push_back(members);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) out.pairs.emplace_back(members[i], members[i + 1]);
  }
  return out;
}

/// Which difference basis of Rad(𝔇_ℚ) a matrix is written in.
enum class ChainBasis {
  Consecutive,  // x_{J_i} − x_{J_{i+1}}
  Anchored,     // x_{J_1} − x_{J_i}, i ≥ 2
};

using IntegerDescent = DescentAlgebra<IntegerRing>;
using IntegerElement = DescentElement<IntegerRing>;

/// Basis elements of the chosen difference basis, chain by chain.
inline std::vector<IntegerElement> difference_basis(const IntegerDescent& alg, const OmegaBasis& omega, ChainBasis kind) {
  std::vector<IntegerElement> out;
  for (const auto& chain : omega.chains)
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Mask a = kind == ChainBasis::Consecutive ? chain[i - 1] : chain[0];
      out.push_back(alg.from_terms({{a, 1}, {chain[i], -1}}));
    }
  return out;
}

/// Coordinates of a radical element in the chosen basis. Consecutive: per-chain
/// prefix sums. Anchored: b_i = −c_{J_i}. Throws if z is not in the radical.
inline std::vector<mpz_class> chain_coordinates(const IntegerElement& z, const OmegaBasis& omega, ChainBasis kind) {
  std::vector<mpz_class> out;
  for (const auto& chain : omega.chains) {
    mpz_class prefix = 0, total = 0;
    for (Mask j : chain) total += z[j];
    if (sgn(total) != 0) fail(ErrorCode::CrossCheckFailed, "element is not in the radical");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      prefix += z[chain[i]];
      out.push_back(kind == ChainBasis::Consecutive ? prefix : mpz_class(-z[chain[i + 1]]));
    }
  }
  // Coefficients on singleton classes must vanish.
  std::vector<bool> covered(z.coeffs.size(), false);
  for (const auto& chain : omega.chains)
    for (Mask j : chain) covered[j] = true;
  for (std::size_t j = 0; j < z.coeffs.size(); ++j)
    if (!covered[j] && sgn(z.coeffs[j]) != 0) fail(ErrorCode::CrossCheckFailed, "element is not in the radical");
  return out;
}

/// Rows: all |Ω|^n products b_1⋯b_n of basis elements, in the chosen coordinates.
inline IntegerMatrix jn_matrix(const IntegerDescent& alg, const OmegaBasis& omega, std::size_t n,
                               ChainBasis kind = ChainBasis::Consecutive, const Budgets& budgets = {}) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "[J(n)] needs n >= 1");
  const auto basis = difference_basis(alg, omega, kind);
  const std::size_t k = basis.size();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(k);
  if (count > static_cast<double>(budgets.rows))
    fail(ErrorCode::BudgetExceeded, "[J(" + std::to_string(n) + ")] would have " + std::to_string(count) +
                                        " rows, above the cap of " + std::to_string(budgets.rows));
  IntegerMatrix out(0, k);
  if (k == 0) return out;
  std::vector<IntegerElement> level = basis;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<IntegerElement> next;
    next.reserve(level.size() * k);
    for (const auto& b : basis)
      for (const auto& p : level) next.push_back(alg.multiply(b, p));
    level = std::move(next);
  }
  for (const auto& p : level) out.append_row(chain_coordinates(p, omega, kind));
  return out;
}

/// Rows: products of n arbitrary within-class differences x_J − x_K (J ≠ K),
/// in consecutive-chain coordinates. A larger generating set of the same lattice.
inline IntegerMatrix enlarged_jn_matrix(const IntegerDescent& alg, const OmegaBasis& omega, std::size_t n) {
  std::vector<IntegerElement> gens;
  for (const auto& chain : omega.chains)
    for (Mask a : chain)
      for (Mask b : chain)
        if (a != b) gens.push_back(alg.from_terms({{a, 1}, {b, -1}}));
  IntegerMatrix out(0, omega.size());
  if (gens.empty()) return out;
  std::vector<IntegerElement> level = gens;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<IntegerElement> next;
    for (const auto& g : gens)
      for (const auto& p : level) next.push_back(alg.multiply(g, p));
    level = std::move(next);
  }
  for (const auto& p : level) out.append_row(chain_coordinates(p, omega, ChainBasis::Consecutive));
  return out;
}

/// Hermite bases of the row lattices of [J(1)], [J(2)], … until the lattice is
/// zero, via L_n = span{b·v : b basis element, v ∈ basis of L_{n−1}}.
inline std::vector<IntegerMatrix> jn_lattices(const IntegerDescent& alg, const OmegaBasis& omega,
                                              ChainBasis kind = ChainBasis::Consecutive, std::size_t max_n = 64) {
  const auto basis = difference_basis(alg, omega, kind);
  const std::size_t k = basis.size();
  std::vector<IntegerMatrix> out;
  if (k == 0) return out;
  auto to_element = [&](const std::vector<mpz_class>& coords) {
    IntegerElement z = alg.zero();
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(coords[i]) != 0)
        for (Mask j = 0; j < alg.dim(); ++j) z[j] += coords[i] * basis[i][j];
    return z;
  };
  IntegerMatrix current(k, k, mpz_class(0));
  for (std::size_t i = 0; i < k; ++i) current(i, i) = 1;
  current = hermite_rows(current);
  while (current.rows() > 0 && out.size() < max_n) {
    out.push_back(current);
    std::vector<IntegerElement> vs;
    for (std::size_t r = 0; r < current.rows(); ++r) vs.push_back(to_element(current.row(r)));
    IntegerMatrix next(0, k);
    for (const auto& b : basis)
      for (const auto& v : vs) next.append_row(chain_coordinates(alg.multiply(b, v), omega, kind));
    current = hermite_rows(next);
  }
  return out;
}

struct NWLevel {
  std::size_t n = 0;
  std::size_t dim = 0;  // dim_ℚ Rad^n = rank [J(n)]
  mpz_class d;          // d_{W,n}
  mpz_class n_wn;       // lcm(d_{W,n}, |W|)
};

struct NWReport {
  std::uint64_t order = 0;
  std::vector<NWLevel> per_n;
  std::size_t radical_length = 0;
  mpz_class n_w;
};

/// d_{W,n} from the row lattices; when cross_check is set and |Ω|^n is within
/// the row budget, the full [J(n)] is also built and must give the same divisors.
inline NWReport nw_invariants(const CoxeterSystem& sys, const IntegerDescent& alg, const OmegaBasis& omega,
                              bool cross_check = true, const Budgets& budgets = {},
                              ChainBasis kind = ChainBasis::Consecutive) {
  NWReport rep;
  rep.order = sys.size();
  const mpz_class order(static_cast<unsigned long>(sys.size()));
  rep.n_w = order;
  const auto lattices = jn_lattices(alg, omega, kind);
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    NWLevel lv;
    lv.n = i + 1;
    const SmithForm f = smith_normal_form(lattices[i]);
    lv.dim = f.rank();
    lv.d = 1;
    for (const auto& x : f.diag) lv.d *= x;
    if (cross_check) {
      double rows = 1;
      for (std::size_t t = 0; t < lv.n; ++t) rows *= static_cast<double>(omega.size());
      if (rows <= static_cast<double>(budgets.rows)) {
        const IntegerMatrix full = jn_matrix(alg, omega, lv.n, kind, budgets);
        if (smith_normal_form(full).diag != f.diag)
          fail(ErrorCode::CrossCheckFailed, "row lattice of [J(" + std::to_string(lv.n) + ")] disagrees with the full matrix");
      }
    }
    mpz_lcm(lv.n_wn.get_mpz_t(), lv.d.get_mpz_t(), order.get_mpz_t());
    mpz_lcm(rep.n_w.get_mpz_t(), rep.n_w.get_mpz_t(), lv.n_wn.get_mpz_t());
    rep.per_n.push_back(lv);
  }
  rep.radical_length = lattices.size();
  return rep;
}

/// dim Rad^n for n = 1, 2, … through the first zero, from a radical basis,
/// with Rad^{n+1} = span{r·x : r ∈ Rad basis, x ∈ Rad^n basis}.
template <Field F>
std::vector<std::size_t> descent_radical_dims(const DescentAlgebra<F>& alg, const std::vector<DescentElement<F>>& rad) {
  std::vector<std::size_t> dims;
  std::vector<DescentElement<F>> power = rad;
  for (std::size_t n = 1; n <= alg.dim() + 1; ++n) {
    dims.push_back(power.size());
    if (power.empty()) return dims;
    Subspace<F> next(alg.ring(), alg.dim());
    std::vector<DescentElement<F>> basis_next;
    for (const auto& r : rad)
      for (const auto& x : power) {
        auto p = alg.multiply(r, x);
        if (next.insert(p.coeffs)) basis_next.push_back(std::move(p));
      }
    power = std::move(basis_next);
  }
  fail(ErrorCode::InvalidAlgebra, "descent radical is not nilpotent");
}

/// The descent algebra as an engine input: idempotents e_J in class order and
/// the radical basis of the field.
template <Field F>
BasicAlgebra<F> descent_basic_algebra(const DescentAlgebra<F>& alg, const MarkTable& marks) {
  const F& field = alg.ring();
  const std::size_t n = alg.dim();
  std::vector<typename BasicAlgebra<F>::Sparse> products(n * n);
  for (Mask j = 0; j < n; ++j)
    for (Mask k = 0; k < n; ++k)
      for (const auto& [l, c] : alg.constants().terms(j, k)) products[j * n + k].emplace_back(l, from_count(field, c));
  const auto idem = primitive_idempotents(alg, marks);
  std::vector<Vec<F>> e, rad;
  for (const auto& x : idem.e) e.push_back(x.coeffs);
  for (const auto& x : radical_basis(alg, marks)) rad.push_back(x.coeffs);
  return BasicAlgebra<F>(field, n, std::move(products), alg.one().coeffs, std::move(e), std::move(rad));
}

/// Transition matrix expressing the anchored basis in consecutive coordinates.
inline IntegerMatrix chain_transition(const IntegerDescent& alg, const OmegaBasis& omega) {
  IntegerMatrix t(0, omega.size());
  for (const auto& b : difference_basis(alg, omega, ChainBasis::Anchored))
    t.append_row(chain_coordinates(b, omega, ChainBasis::Consecutive));
  return t;
}

/// Each row's nonzero entries form one contiguous block of equal sign ±1.
inline bool signed_consecutive_ones(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int sign = 0;
    bool started = false, ended = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& x = m(i, j);
      if (sgn(x) == 0) {
        if (started) ended = true;
        continue;
      }
      if (ended || abs(x) != 1) return false;
      if (sign == 0) sign = sgn(x);
      if (sgn(x) != sign) return false;
      started = true;
    }
  }
  return true;
}

}  // namespace goodprime
