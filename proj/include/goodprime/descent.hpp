#pragma once

// Solomon's descent algebra: basis x_J (J ⊆ S), x_J x_K = Σ_L a_JKL x_L.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "goodprime/coxeter.hpp"
#include "goodprime/field.hpp"
#include "goodprime/linalg.hpp"
#include "goodprime/smith.hpp"

namespace goodprime {

/// a_JKL = #{w ∈ X_JK : w⁻¹Jw ∩ K = L}.
class StructureConstants {
 public:
  explicit StructureConstants(const CoxeterSystem& sys) : rank_(sys.rank()), nsub_(sys.num_subsets()) {
    dense_.assign(nsub_ * nsub_ * nsub_, 0);
    const Mask full = sys.full_mask();
    for (Element w = 0; w < sys.size(); ++w) {
      int conj[kMaxRank];
      for (int s = 0; s < rank_; ++s) conj[s] = sys.conjugate_simple(w, s);
      const Mask jfree = full & ~sys.left_descents(w);
      const Mask kfree = full & ~sys.right_descents(w);
      // Enumerate J ⊆ jfree, K ⊆ kfree.
      for (Mask j = jfree;; j = (j - 1) & jfree) {
        Mask img = 0;
        for (int s = 0; s < rank_; ++s)
          if ((j >> s & 1) && conj[s] >= 0) img |= Mask{1} << conj[s];
        for (Mask k = kfree;; k = (k - 1) & kfree) {
          ++dense_[index(j, k, img & k)];
          if (k == 0) break;
        }
        if (j == 0) break;
      }
    }
    sparse_.resize(nsub_ * nsub_);
    for (Mask j = 0; j < nsub_; ++j)
      for (Mask k = 0; k < nsub_; ++k)
        for (Mask l = 0; l < nsub_; ++l)
          if (const auto c = dense_[index(j, k, l)]) sparse_[j * nsub_ + k].emplace_back(l, c);
  }

  int rank() const { return rank_; }
  std::size_t num_subsets() const { return nsub_; }
  std::uint64_t operator()(Mask j, Mask k, Mask l) const { return dense_[index(j, k, l)]; }
  /// Nonzero (L, a_JKL) in increasing L.
  const std::vector<std::pair<Mask, std::uint64_t>>& terms(Mask j, Mask k) const { return sparse_[j * nsub_ + k]; }

 private:
  std::size_t index(Mask j, Mask k, Mask l) const { return (static_cast<std::size_t>(j) * nsub_ + k) * nsub_ + l; }

  int rank_;
  std::size_t nsub_;
  std::vector<std::uint64_t> dense_;
  std::vector<std::vector<std::pair<Mask, std::uint64_t>>> sparse_;
};

/// Coefficient vector over the 2^|S| subsets, tagged with its ring.
template <CommutativeRing R>
struct DescentElement {
  R ring;
  std::vector<typename R::value_type> coeffs;

  const typename R::value_type& operator[](Mask j) const { return coeffs[j]; }
  typename R::value_type& operator[](Mask j) { return coeffs[j]; }
};

template <CommutativeRing R>
bool operator==(const DescentElement<R>& a, const DescentElement<R>& b) {
  if (!(a.ring == b.ring) || a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (!a.ring.equal(a.coeffs[i], b.coeffs[i])) return false;
  return true;
}

template <CommutativeRing R>
class DescentAlgebra {
 public:
  using value_type = typename R::value_type;
  using Elem = DescentElement<R>;

  DescentAlgebra(std::shared_ptr<const StructureConstants> constants, R ring)
      : a_(std::move(constants)), ring_(std::move(ring)) {
    const std::size_t n = a_->num_subsets();
    table_.resize(n * n);
    for (Mask j = 0; j < n; ++j)
      for (Mask k = 0; k < n; ++k)
        for (const auto& [l, c] : a_->terms(j, k)) table_[j * n + k].emplace_back(l, from_count(ring_, c));
  }

  const R& ring() const { return ring_; }
  std::size_t dim() const { return a_->num_subsets(); }
  Mask full_mask() const { return static_cast<Mask>(dim() - 1); }
  const StructureConstants& constants() const { return *a_; }

  Elem zero() const { return Elem{ring_, std::vector<value_type>(dim(), ring_.zero())}; }
  Elem basis(Mask j) const {
    Elem e = zero();
    e[j] = ring_.one();
    return e;
  }
  Elem one() const { return basis(full_mask()); }

  /// Element with integer coefficients given as (J, c) pairs.
  Elem from_terms(const std::vector<std::pair<Mask, long>>& terms) const {
    Elem e = zero();
    for (const auto& [j, c] : terms) e[j] = ring_.add(e[j], ring_.from_integer(mpz_class(c)));
    return e;
  }

  Elem from_vector(std::vector<value_type> v) const {
    if (v.size() != dim()) fail(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
    return Elem{ring_, std::move(v)};
  }

  Elem add(const Elem& x, const Elem& y) const {
    check(x, y);
    Elem out = x;
    for (std::size_t i = 0; i < dim(); ++i) out.coeffs[i] = ring_.add(out.coeffs[i], y.coeffs[i]);
    return out;
  }
  Elem sub(const Elem& x, const Elem& y) const {
    check(x, y);
    Elem out = x;
    for (std::size_t i = 0; i < dim(); ++i) out.coeffs[i] = ring_.sub(out.coeffs[i], y.coeffs[i]);
    return out;
  }
  Elem scale(const value_type& c, const Elem& x) const {
    check(x, x);
    Elem out = x;
    for (auto& v : out.coeffs) v = ring_.mul(c, v);
    return out;
  }

  Elem multiply(const Elem& x, const Elem& y) const {
    check(x, y);
    Elem out = zero();
    const std::size_t n = dim();
    for (Mask j = 0; j < n; ++j) {
      if (ring_.is_zero(x.coeffs[j])) continue;
      for (Mask k = 0; k < n; ++k) {
        if (ring_.is_zero(y.coeffs[k])) continue;
        const value_type c = ring_.mul(x.coeffs[j], y.coeffs[k]);
        for (const auto& [l, a] : table_[j * n + k]) out.coeffs[l] = ring_.add(out.coeffs[l], ring_.mul(c, a));
      }
    }
    return out;
  }

  bool is_zero(const Elem& x) const {
    for (const auto& v : x.coeffs)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  /// θ(x)(c_J) = Σ_K x_K a_KJJ for J in the given list (class representatives).
  std::vector<value_type> theta(const Elem& x, const std::vector<Mask>& at) const {
    std::vector<value_type> out;
    for (Mask j : at) {
      value_type acc = ring_.zero();
      for (Mask k = 0; k < dim(); ++k) {
        if (ring_.is_zero(x.coeffs[k])) continue;
        const auto a = (*a_)(k, j, j);
        if (a) acc = ring_.add(acc, ring_.mul(x.coeffs[k], from_count(ring_, a)));
      }
      out.push_back(acc);
    }
    return out;
  }

 private:
  void check(const Elem& x, const Elem& y) const {
    if (!(x.ring == ring_) || !(y.ring == ring_))
      fail(ErrorCode::FieldMismatch, "operands over " + x.ring.name() + " and " + y.ring.name() + ", algebra over " +
                                         ring_.name());
    if (x.coeffs.size() != dim() || y.coeffs.size() != dim())
      fail(ErrorCode::InvalidArgument, "descent element has wrong length");
  }

  std::shared_ptr<const StructureConstants> a_;
  R ring_;
  std::vector<std::vector<std::pair<Mask, value_type>>> table_;
};

/// β_JK = a_JKK over class representatives, rows J and columns K.
struct MarkTable {
  CoxeterClasses classes;
  IntegerMatrix beta;

  std::size_t size() const { return classes.size(); }
  const mpz_class& gamma(std::size_t c) const { return beta(c, c); }
  /// Class indices c with q ∤ β_cc; q = 0 keeps all.
  std::vector<std::size_t> q_classes(std::uint64_t q) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < size(); ++c)
      if (q == 0 || !mpz_divisible_ui_p(beta(c, c).get_mpz_t(), static_cast<unsigned long>(q))) out.push_back(c);
    return out;
  }
};

/// |{w ∈ X_J : w⁻¹ g w ∈ W_J for every g in gens}|: fixed cosets of ⟨gens⟩ on W/W_J.
inline std::uint64_t fixed_cosets(const CoxeterSystem& sys, Mask j, const std::vector<Element>& gens) {
  std::uint64_t count = 0;
  for (Element w : sys.min_coset_reps(j)) {
    const Element wi = sys.inverse(w);
    bool fixed = true;
    for (Element g : gens)
      if (!sys.in_parabolic(sys.multiply(sys.multiply(wi, g), w), j)) {
        fixed = false;
        break;
      }
    count += fixed;
  }
  return count;
}

/// Marks from the structure constants, cross-checked against fixed-point counts
/// of c_K and of W_K on the coset space W/W_J unless cross_check is off.
inline MarkTable mark_table(const CoxeterSystem& sys, const StructureConstants& a, bool cross_check = true) {
  MarkTable t{coxeter_classes(sys), {}};
  const std::size_t n = t.classes.size();
  t.beta = IntegerMatrix(n, n, mpz_class(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Mask j = t.classes.reps[r], k = t.classes.reps[c];
      const std::uint64_t via_constants = a(j, k, k);
      t.beta(r, c) = mpz_class(static_cast<unsigned long>(via_constants));
      if (!cross_check) continue;
      const std::uint64_t via_coxeter = fixed_cosets(sys, j, {sys.coxeter_element(k)});
      std::vector<Element> gens;
      for (int s = 0; s < sys.rank(); ++s)
        if (k >> s & 1) gens.push_back(sys.generator(s));
      const std::uint64_t via_subgroup = fixed_cosets(sys, j, gens);
      if (via_constants != via_coxeter || via_constants != via_subgroup)
        fail(ErrorCode::CrossCheckFailed, "mark beta(" + mask_name(j) + "," + mask_name(k) + ") disagrees: " +
                                              std::to_string(via_constants) + " vs " + std::to_string(via_coxeter) +
                                              " vs " + std::to_string(via_subgroup));
    }
  return t;
}

/// The spanning set {x_J − x_K : J =_W K} ∪ {x_L : q | β_LL}, reduced to a
/// basis with the consecutive chain differences inserted first.
template <Field F>
std::vector<DescentElement<F>> radical_basis(const DescentAlgebra<F>& alg, const MarkTable& marks) {
  const F& field = alg.ring();
  const std::uint64_t q = field.characteristic();
  const auto& cls = marks.classes;
  std::vector<Vec<F>> candidates;
  auto diff = [&](Mask j, Mask k) {
    Vec<F> v = zero_vector(field, alg.dim());
    v[j] = field.one();
    v[k] = field.neg(field.one());
    return v;
  };
  for (const auto& members : cls.members)
    for (std::size_t i = 0; i + 1 < members.size(); ++i) candidates.push_back(diff(members[i], members[i + 1]));
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (q == 0 || !mpz_divisible_ui_p(marks.gamma(c).get_mpz_t(), static_cast<unsigned long>(q))) continue;
    for (Mask l : cls.members[c]) {
      Vec<F> v = zero_vector(field, alg.dim());
      v[l] = field.one();
      candidates.push_back(std::move(v));
    }
  }
  for (const auto& members : cls.members)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 2; k < members.size(); ++k) candidates.push_back(diff(members[i], members[k]));

  Subspace<F> span(field, alg.dim());
  std::vector<DescentElement<F>> out;
  for (auto& v : candidates)
    if (span.insert(v)) out.push_back(alg.from_vector(std::move(v)));
  return out;
}

}  // namespace goodprime
