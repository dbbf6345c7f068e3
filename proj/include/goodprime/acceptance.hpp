#pragma once

// The acceptance suite: ten criteria, exact equality throughout. Shared by the
// acceptance test binary and `goodprime verify`.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "goodprime/bands.hpp"
#include "goodprime/check/oracles.hpp"
#include "goodprime/hecke.hpp"
#include "goodprime/nilcoxeter.hpp"
#include "goodprime/radical_invariants.hpp"

namespace goodprime::acceptance {

/// Collects the first few failed checks of one criterion.
class Probe {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    check(a == b, what);
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
    if (failures_ > notes_.size()) os << "; +" << failures_ - notes_.size() << " more";
    return os.str();
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Options {
  std::uint64_t seed = 20240611;
  Budgets budgets;
};

struct Criterion {
  int id;
  std::string key;
  std::string title;
  std::function<void(Probe&, const Options&)> run;
};

struct Result {
  int id;
  std::string key;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

namespace detail {

struct Group {
  CoxeterSystem sys;
  std::shared_ptr<const StructureConstants> a;
  Group(const std::string& f, int n, const Budgets& b)
      : sys(CoxeterSystem::build(f, n, b)), a(std::make_shared<StructureConstants>(sys)) {}
  std::string label() const { return sys.label(); }
};

template <Field F>
BasicAlgebra<F> descent_engine(const Group& g, const MarkTable& marks, const F& field) {
  return descent_basic_algebra(DescentAlgebra<F>(g.a, field), marks);
}

inline std::vector<std::size_t> layer_sizes(const std::vector<Matrix<std::size_t>>& layers) {
  std::vector<std::size_t> out;
  for (const auto& l : layers) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < l.rows(); ++i)
      for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
    out.push_back(s);
  }
  return out;
}

// |N_W(W_J)| / |W_J| by testing w s w⁻¹ ∈ W_J for every s ∈ J.
inline std::uint64_t normalizer_index(const CoxeterSystem& sys, Mask j) {
  std::uint64_t normalizer = 0, parabolic = 0;
  for (Element w = 0; w < sys.size(); ++w) {
    parabolic += sys.in_parabolic(w, j);
    bool keeps = true;
    for (int s = 0; s < sys.rank() && keeps; ++s)
      if (j >> s & 1)
        keeps = sys.in_parabolic(sys.multiply(sys.multiply(w, sys.generator(s)), sys.inverse(w)), j);
    normalizer += keeps;
  }
  return normalizer / parabolic;
}

template <Field F>
void idempotent_laws(Probe& p, const Group& g, const MarkTable& marks, const F& field) {
  const std::string where = g.label() + "/" + field.name();
  DescentAlgebra<F> alg(g.a, field);
  const auto idem = primitive_idempotents(alg, marks);
  p.equal(idem.e.size(), marks.q_classes(field.characteristic()).size(), where + ": idempotent count");
  std::vector<Mask> at;
  for (std::size_t c : idem.classes) at.push_back(marks.classes.reps[c]);
  auto sum = alg.zero();
  for (std::size_t i = 0; i < idem.e.size(); ++i) {
    sum = alg.add(sum, idem.e[i]);
    for (std::size_t j = 0; j < idem.e.size(); ++j)
      p.check(alg.multiply(idem.e[i], idem.e[j]) == (i == j ? idem.e[i] : alg.zero()), where + ": e_i e_j");
    const auto th = alg.theta(idem.e[i], at);
    for (std::size_t k = 0; k < at.size(); ++k)
      p.check(field.equal(th[k], k == i ? field.one() : field.zero()), where + ": theta(e_J)");
    const std::size_t cls = idem.classes[i];
    const Mask jm = marks.classes.reps[cls];
    p.check(field.equal(field.mul(idem.e[i][jm], field.from_integer(marks.gamma(cls))), field.one()),
            where + ": leading coefficient");
    for (Mask k = 0; k < alg.dim(); ++k)
      if (k != jm && !field.is_zero(idem.e[i][k]))
        p.check(marks.classes.contained(k, jm) && !marks.classes.equivalent(k, jm), where + ": support");
  }
  p.check(sum == alg.one(), where + ": sum");
}

}  // namespace detail

inline std::vector<Criterion> criteria() {
  using namespace detail;
  std::vector<Criterion> out;

  out.push_back({1, "nw-a3", "A3 invariants: |Omega| = 3, [J(2)] row (1,-1,0), d_{W,2} = 1, n_W = 24",
                 [](Probe& p, const Options& o) {
                   Group g("A", 3, o.budgets);
                   IntegerDescent z(g.a, IntegerRing{});
                   const auto omega = omega_basis(coxeter_classes(g.sys));
                   p.equal(omega.size(), std::size_t{3}, "|Omega|");
                   const auto d = z.from_terms({{0b011, 1}, {0b110, -1}});
                   p.check(z.multiply(d, d) == z.from_terms({{0b001, 1}, {0b010, -2}, {0b100, 1}}), "square");
                   const auto j2 = jn_matrix(z, omega, 2);
                   p.check(j2.rows() == 9 && j2.row(8) == std::vector<mpz_class>{1, -1, 0}, "[J(2)] row");
                   const auto r = nw_invariants(g.sys, z, omega, true, o.budgets);
                   p.check(r.per_n.size() == 2 && r.per_n[1].d == 1, "d_{W,2}");
                   p.check(r.n_w == 24, "n_W = " + r.n_w.get_str());
                 }});

  out.push_back({2, "nw-dihedral", "Dihedral sweep m = 3..12: Omega empty iff m even, n_W = 2m, [J(r)] = 0 for r >= 2",
                 [](Probe& p, const Options& o) {
                   for (int m = 3; m <= 12; ++m) {
                     Group g("I2", m, o.budgets);
                     IntegerDescent z(g.a, IntegerRing{});
                     const auto omega = omega_basis(coxeter_classes(g.sys));
                     const std::string where = g.label();
                     p.check((omega.size() == 0) == (m % 2 == 0), where + ": Omega");
                     const auto r = nw_invariants(g.sys, z, omega, true, o.budgets);
                     p.check(r.n_w == 2 * m, where + ": n_W = " + r.n_w.get_str());
                     if (m % 2)
                       for (std::size_t k = 2; k <= 4; ++k)
                         p.check(integer_rank(jn_matrix(z, omega, k, ChainBasis::Consecutive, o.budgets)) == 0,
                                 where + ": [J(" + std::to_string(k) + ")] nonzero");
                   }
                 }});

  out.push_back({3, "marks", "Mark-table laws on A2, A3, A4, B2, B3, D4, I2(5), H3",
                 [](Probe& p, const Options& o) {
                   for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{
                            {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"D", 4}, {"I2", 5}, {"H", 3}}) {
                     Group g(f, n, o.budgets);
                     const auto t = mark_table(g.sys, *g.a, true);
                     const std::string where = g.label();
                     for (std::size_t r = 0; r < t.size(); ++r) {
                       const Mask jr = t.classes.reps[r];
                       p.check(t.gamma(r) == static_cast<unsigned long>(normalizer_index(g.sys, jr)), where + ": beta_JJ");
                       for (std::size_t c = 0; c < t.size(); ++c) {
                         if (c > r) p.check(sgn(t.beta(r, c)) == 0, where + ": lower triangular");
                         p.check(mpz_divisible_p(t.beta(r, c).get_mpz_t(), t.gamma(r).get_mpz_t()) != 0,
                                 where + ": beta_JJ | beta_JK");
                       }
                     }
                     // a_JKK counts W_K-fixed cosets of W/W_J, for every pair of subsets.
                     for (Mask j = 0; j < g.sys.num_subsets(); ++j)
                       for (Mask k = 0; k < g.sys.num_subsets(); ++k) {
                         std::vector<Element> gens;
                         for (int s = 0; s < g.sys.rank(); ++s)
                           if (k >> s & 1) gens.push_back(g.sys.generator(s));
                         p.check((*g.a)(j, k, k) == fixed_cosets(g.sys, j, gens), where + ": a_JKK");
                       }
                   }
                 }});

  out.push_back({4, "idempotents", "Idempotent theorem over Q, F2, F3, F5, F7 on the mark-table groups",
                 [](Probe& p, const Options& o) {
                   for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{
                            {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"D", 4}, {"I2", 5}, {"H", 3}}) {
                     Group g(f, n, o.budgets);
                     const auto marks = mark_table(g.sys, *g.a);
                     idempotent_laws(p, g, marks, RationalField{});
                     for (std::uint64_t q : {2, 3, 5, 7}) idempotent_laws(p, g, marks, PrimeField(q));
                   }
                 }});

  out.push_back({5, "good-primes", "Good primes on A3 and B3: radical dims, graded Cartan and Ext (t <= 4) equal over Q and F_p",
                 [](Probe& p, const Options& o) {
                   for (const auto& [f, n, primes] : std::vector<std::tuple<std::string, int, std::vector<std::uint64_t>>>{
                            {"A", 3, {5, 7, 11, 13, 23}}, {"B", 3, {5, 7, 11}}}) {
                     Group g(f, n, o.budgets);
                     const auto marks = mark_table(g.sys, *g.a);
                     const auto q = descent_engine(g, marks, RationalField{});
                     q.validate(o.seed);
                     const auto dims = q.radical_dims();
                     const auto layers = q.graded_cartan();
                     const auto ext = q.ext_dims(4, o.budgets);
                     for (auto pr : primes) {
                       const std::string where = g.label() + "/F" + std::to_string(pr);
                       const auto fp = descent_engine(g, marks, PrimeField(pr));
                       fp.validate(o.seed);
                       p.check(fp.radical_dims() == dims, where + ": radical dims");
                       p.check(fp.graded_cartan() == layers, where + ": graded Cartan");
                       p.check(ext_table(q, fp, 4, o.budgets).second == ext, where + ": Ext");
                     }
                   }
                 }});

  out.push_back({6, "basis-independence", "d_{W,n} independent of the chain basis on A3 and B3; transition inverses in {-1,0,1}",
                 [](Probe& p, const Options& o) {
                   for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}}) {
                     Group g(f, n, o.budgets);
                     IntegerDescent z(g.a, IntegerRing{});
                     const auto omega = omega_basis(coxeter_classes(g.sys));
                     const auto c = nw_invariants(g.sys, z, omega, true, o.budgets, ChainBasis::Consecutive);
                     const auto a = nw_invariants(g.sys, z, omega, true, o.budgets, ChainBasis::Anchored);
                     const std::string where = g.label();
                     p.equal(c.per_n.size(), a.per_n.size(), where + ": radical length");
                     for (std::size_t i = 0; i < std::min(c.per_n.size(), a.per_n.size()); ++i)
                       p.check(c.per_n[i].d == a.per_n[i].d, where + ": d_{W," + std::to_string(i + 1) + "}");
                     const auto t = chain_transition(z, omega);
                     Matrix<mpq_class> tq(t.rows(), t.cols(), 0);
                     for (std::size_t i = 0; i < t.rows(); ++i)
                       for (std::size_t j = 0; j < t.cols(); ++j) tq(i, j) = t(i, j);
                     const auto inv = inverse(RationalField{}, tq);
                     p.check(inv.has_value(), where + ": transition invertible");
                     if (inv)
                       for (std::size_t i = 0; i < inv->rows(); ++i)
                         for (std::size_t j = 0; j < inv->cols(); ++j) {
                           const mpq_class& x = (*inv)(i, j);
                           p.check(x == 0 || x == 1 || x == -1, where + ": inverse entry " + x.get_str());
                         }
                   }
                 }});

  out.push_back({7, "nilcoxeter", "nilCoxeter: layers are length histograms; Ext(T,T) = (1,2,3,4,5) for A2 and (1,3,6,10) for A3 over Q, F2, F3",
                 [](Probe& p, const Options& o) {
                   for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"A", 3}, {"B", 2}, {"I2", 5}}) {
                     Group g(f, n, o.budgets);
                     const auto alg = build_nilcoxeter(g.sys, RationalField{});
                     alg.validate(o.seed);
                     p.check(layer_sizes(alg.graded_cartan()) == g.sys.length_histogram(), g.label() + ": layers");
                   }
                   for (const auto& [n, t, expected] : std::vector<std::tuple<int, std::size_t, std::vector<std::size_t>>>{
                            {2, 4, {1, 2, 3, 4, 5}}, {3, 3, {1, 3, 6, 10}}}) {
                     Group g("A", n, o.budgets);
                     const std::string where = g.label();
                     p.check(nilcoxeter_hilbert(build_nilcoxeter(g.sys, RationalField{}), t, o.budgets) == expected, where + "/Q");
                     for (std::uint64_t q : {2, 3})
                       p.check(nilcoxeter_hilbert(build_nilcoxeter(g.sys, PrimeField(q)), t, o.budgets) == expected,
                               where + "/F" + std::to_string(q));
                   }
                 }});

  out.push_back({8, "faces", "Face algebras of 2, 3, 4 concurrent lines: dim 4n+1, radical dims (3n-1, n-1, 0), fields agree, Ext quiver = Hasse diagram",
                 [](Probe& p, const Options& o) {
                   for (std::size_t n = 2; n <= 4; ++n) {
                     const std::string where = std::to_string(n) + " lines";
                     const auto b = enumerate_faces(concurrent_lines(n));
                     const auto lat = support_lattice(b);
                     const auto q = band_algebra(b, lat, RationalField{});
                     q.validate(o.seed);
                     p.equal(q.dim(), 4 * n + 1, where + ": dim");
                     const std::vector<std::size_t> dims{4 * n + 1, 3 * n - 1, n - 1, 0};
                     p.check(q.radical_dims() == dims, where + ": radical dims");
                     const auto ext = q.ext_dims(2, o.budgets);
                     p.check(ext_arrows(ext[1]) == hasse_arrows(lat), where + ": quiver");
                     for (std::uint64_t pr : {2, 3}) {
                       const auto fp = band_algebra(b, lat, PrimeField(pr));
                       fp.validate(o.seed);
                       p.check(fp.radical_dims() == dims, where + "/F" + std::to_string(pr) + ": radical dims");
                       p.check(ext_arrows(fp.ext_dims(1, o.budgets)[1]) == hasse_arrows(lat),
                               where + "/F" + std::to_string(pr) + ": quiver");
                     }
                   }
                 }});

  out.push_back({9, "hecke", "0-Hecke A2: monoid size 6, 4 simples, Ext (t <= 3) over Q equals F2 and F3",
                 [](Probe& p, const Options& o) {
                   Group g("A", 2, o.budgets);
                   const auto mon = hecke_monoid(g.sys, o.budgets.group);
                   p.equal(mon.size(), std::size_t{6}, "monoid size");
                   const auto q = hecke_monoid_algebra(g.sys, mon, RationalField{});
                   q.validate(o.seed);
                   p.equal(q.num_simples(), std::size_t{4}, "simples");
                   const auto ext = q.ext_dims(3, o.budgets);
                   for (std::uint64_t pr : {2, 3}) {
                     const auto fp = hecke_monoid_algebra(g.sys, mon, PrimeField(pr));
                     fp.validate(o.seed);
                     p.check(ext_table(q, fp, 3, o.budgets).second == ext, "Ext over F" + std::to_string(pr));
                   }
                 }});

  out.push_back({10, "oracles", "Oracles: gcd of minors vs enumeration on 200 random matrices; descent products vs coset sums",
                 [](Probe& p, const Options& o) {
                   std::mt19937_64 rng(o.seed);
                   std::uniform_int_distribution<int> dim(1, 6), entry(-6, 6);
                   for (int trial = 0; trial < 200; ++trial) {
                     const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
                     IntegerMatrix m(r, c, 0);
                     for (std::size_t i = 0; i < r; ++i)
                       for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
                     for (std::size_t s = 1; s <= std::min(r, c); ++s)
                       p.check(gcd_minors(m, s) == check::brute_gcd_minors(m, s), "gcd_minors trial " + std::to_string(trial));
                   }
                   for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"A", 3}, {"B", 2}, {"I2", 5}}) {
                     Group g(f, n, o.budgets);
                     for (Mask j = 0; j < g.sys.num_subsets(); ++j)
                       for (Mask k = 0; k < g.sys.num_subsets(); ++k) {
                         const auto oracle = check::coset_sum_product(g.sys, j, k);
                         for (Mask l = 0; l < g.sys.num_subsets(); ++l)
                           p.check(mpz_class(static_cast<unsigned long>((*g.a)(j, k, l))) == oracle[l],
                                   g.label() + ": a_JKL");
                       }
                   }
                 }});
  return out;
}

/// Runs the criteria whose key contains `filter` (all when empty).
inline std::vector<Result> run(const Options& opts, const std::string& filter = "") {
  std::vector<Result> out;
  for (const auto& c : criteria()) {
    if (!filter.empty() && c.key.find(filter) == std::string::npos) continue;
    Probe probe;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(probe, opts);
    } catch (const Error& e) {
      probe.check(false, std::string(to_string(e.code())) + ": " + e.message());
    } catch (const std::exception& e) {
      probe.check(false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({c.id, c.key, c.title, probe.passed(), probe.detail(), secs});
  }
  return out;
}

}  // namespace goodprime::acceptance
