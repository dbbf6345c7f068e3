#pragma once

// Primitive orthogonal idempotents by lifting idempotents modulo the radical.

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "goodprime/descent.hpp"
#include "goodprime/linalg.hpp"

namespace goodprime {

template <Field F>
using MultiplyFn = std::function<Vec<F>(const Vec<F>&, const Vec<F>&)>;

inline constexpr int kLiftIterationCap = 64;

template <Field F>
Vec<F> vec_sub(const F& field, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = field.sub(a[i], b[i]);
  return a;
}

template <Field F>
bool vec_equal(const F& field, const Vec<F>& a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!field.equal(a[i], b[i])) return false;
  return true;
}

/// Iterates a ↦ 3a² − 2a³ until a² = a. `iterations` receives the number of
/// squarings performed.
template <Field F>
Vec<F> lift_idempotent(const F& field, const MultiplyFn<F>& mul, Vec<F> a, int* iterations = nullptr) {
  const auto three = from_count(field, 3), two = from_count(field, 2);
  for (int it = 1; it <= kLiftIterationCap; ++it) {
    const Vec<F> a2 = mul(a, a);
    if (vec_equal(field, a2, a)) {
      if (iterations) *iterations = it;
      return a;
    }
    const Vec<F> a3 = mul(a2, a);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = field.sub(field.mul(three, a2[i]), field.mul(two, a3[i]));
  }
  fail(ErrorCode::NoConvergence, "idempotent lifting did not converge in " + std::to_string(kLiftIterationCap) +
                                     " iterations");
}

template <Field F>
struct LiftedIdempotents {
  std::vector<Vec<F>> fprime;  // f'_1 .. f'_{m+1}
  std::vector<Vec<F>> e;       // e_1 .. e_m
};

/// Given f_1..f_m whose images modulo the radical are orthogonal primitive
/// idempotents summing to 1: f'_1 = 1, f'_i = (f'_{i-1} f_{≥i} f'_{i-1})_∞,
/// f'_{m+1} = 0 and e_i = f'_i − f'_{i+1}.
template <Field F>
LiftedIdempotents<F> orthogonal_lift(const F& field, const MultiplyFn<F>& mul, const Vec<F>& one,
                                     const std::vector<Vec<F>>& f) {
  const std::size_t m = f.size();
  std::vector<Vec<F>> suffix(m + 1, zero_vector(field, one.size()));
  for (std::size_t i = m; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    axpy(field, suffix[i], field.one(), f[i]);
  }
  LiftedIdempotents<F> out;
  out.fprime.push_back(one);
  for (std::size_t i = 1; i < m; ++i) {
    const Vec<F>& prev = out.fprime.back();
    out.fprime.push_back(lift_idempotent(field, mul, mul(mul(prev, suffix[i]), prev)));
  }
  out.fprime.push_back(zero_vector(field, one.size()));
  for (std::size_t i = 0; i < m; ++i) out.e.push_back(vec_sub(field, out.fprime[i], out.fprime[i + 1]));
  return out;
}

template <Field F>
struct IdempotentSystem {
  F field;
  std::vector<std::size_t> classes;        // indices into the mark table, ascending: 𝓡_q
  std::vector<DescentElement<F>> f;        // f_J per class
  std::vector<DescentElement<F>> fprime;   // f'_1 .. f'_{m+1}
  std::vector<DescentElement<F>> e;        // e_J per class
};

/// f_J = Σ_{K ∈ 𝓡_q} b_JK x_K with b the inverse of the mark matrix on 𝓡_q.
template <Field F>
std::vector<DescentElement<F>> f_elements(const DescentAlgebra<F>& alg, const MarkTable& marks) {
  const F& field = alg.ring();
  const auto rq = marks.q_classes(field.characteristic());
  Matrix<typename F::value_type> m(rq.size(), rq.size(), field.zero());
  for (std::size_t r = 0; r < rq.size(); ++r)
    for (std::size_t c = 0; c < rq.size(); ++c) m(r, c) = field.from_integer(marks.beta(rq[r], rq[c]));
  const auto b = inverse(field, m);
  if (!b) fail(ErrorCode::SingularMarkMatrix, "mark matrix restricted to the q-classes is singular over " + field.name());
  std::vector<DescentElement<F>> out;
  for (std::size_t r = 0; r < rq.size(); ++r) {
    auto fj = alg.zero();
    for (std::size_t c = 0; c < rq.size(); ++c) fj[marks.classes.reps[rq[c]]] = (*b)(r, c);
    out.push_back(std::move(fj));
  }
  return out;
}

template <Field F>
MultiplyFn<F> descent_multiply(const DescentAlgebra<F>& alg) {
  return [&alg](const Vec<F>& x, const Vec<F>& y) {
    return alg.multiply(alg.from_vector(x), alg.from_vector(y)).coeffs;
  };
}

template <Field F>
IdempotentSystem<F> primitive_idempotents(const DescentAlgebra<F>& alg, const MarkTable& marks) {
  const F& field = alg.ring();
  IdempotentSystem<F> sys{field, marks.q_classes(field.characteristic()), f_elements(alg, marks), {}, {}};
  std::vector<Vec<F>> f;
  for (const auto& x : sys.f) f.push_back(x.coeffs);
  const auto lifted = orthogonal_lift(field, descent_multiply(alg), alg.one().coeffs, f);
  for (const auto& v : lifted.fprime) sys.fprime.push_back(alg.from_vector(v));
  for (const auto& v : lifted.e) sys.e.push_back(alg.from_vector(v));
  return sys;
}

}  // namespace goodprime
