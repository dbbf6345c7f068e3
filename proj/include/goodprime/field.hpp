#pragma once

// Coefficient rings used throughout the library.
//
// Arithmetic goes through a ring object rather than operator overloading so
// that residues mod a runtime prime carry their modulus. Every algorithm in the
// library is a template over one of these policies.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "goodprime/errors.hpp"

namespace goodprime {

template <class R>
concept CommutativeRing = requires(const R& r, const typename R::value_type& a, const mpz_class& z) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_integer(z) } -> std::same_as<typename R::value_type>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.sub(a, a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, a) } -> std::same_as<bool>;
  { r.name() } -> std::convertible_to<std::string>;
  { r.characteristic() } -> std::same_as<std::uint64_t>;
};

template <class F>
concept Field = CommutativeRing<F> && requires(const F& f, const typename F::value_type& a) {
  { f.inv(a) } -> std::same_as<typename F::value_type>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

/// ℤ with arbitrary precision.
struct IntegerRing {
  using value_type = mpz_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& z) const { return z; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string name() const { return "Z"; }
  std::uint64_t characteristic() const { return 0; }
  std::string format(const value_type& a) const { return a.get_str(); }
  bool operator==(const IntegerRing&) const = default;
};

/// ℚ with arbitrary precision; values are kept in lowest terms by GMP.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& z) const { return mpq_class(z); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) fail(ErrorCode::InvalidArgument, "division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
  /// Always "num/den", including integers ("3/1").
  std::string format(const value_type& a) const {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }
  bool operator==(const RationalField&) const = default;
};

/// 𝔽_p for a prime p < 2^61; residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 61) || !is_prime(p))
      fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^61");
  }

  std::uint64_t modulus() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_integer(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return r.get_ui();
  }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorCode::InvalidArgument, "division by zero in " + name());
    // Fermat: a^(p-2)
    value_type result = 1, base = a;
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string name() const { return "F" + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }
  std::string format(value_type a) const { return std::to_string(a); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// Map an integer count into the ring.
template <CommutativeRing R>
typename R::value_type from_count(const R& ring, std::uint64_t n) {
  return ring.from_integer(mpz_class(static_cast<unsigned long>(n)));
}

}  // namespace goodprime
