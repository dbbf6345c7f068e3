#include <gtest/gtest.h>

#include "goodprime/check/oracles.hpp"
#include "goodprime/radical_invariants.hpp"

using namespace goodprime;

namespace {

struct Fixture {
  CoxeterSystem sys;
  std::shared_ptr<const StructureConstants> a;
  IntegerDescent z;
  OmegaBasis omega;
  Fixture(const std::string& f, int n)
      : sys(CoxeterSystem::build(f, n)),
        a(std::make_shared<StructureConstants>(sys)),
        z(a, IntegerRing{}),
        omega(omega_basis(coxeter_classes(sys))) {}
};

}  // namespace

TEST(Omega, A3Pairs) {
  Fixture s("A", 3);
  ASSERT_EQ(s.omega.size(), 3u);
  EXPECT_EQ(s.omega.pairs[0], (std::pair<Mask, Mask>{0b001, 0b010}));
  EXPECT_EQ(s.omega.pairs[1], (std::pair<Mask, Mask>{0b010, 0b100}));
  EXPECT_EQ(s.omega.pairs[2], (std::pair<Mask, Mask>{0b011, 0b110}));
}

TEST(JMatrix, A3SquareRow) {
  Fixture s("A", 3);
  const auto j2 = jn_matrix(s.z, s.omega, 2);
  ASSERT_EQ(j2.rows(), 9u);
  EXPECT_EQ(j2.row(8), (std::vector<mpz_class>{1, -1, 0}));
  const auto j1 = jn_matrix(s.z, s.omega, 1);
  EXPECT_EQ(integer_rank(j1), 3u);
  EXPECT_EQ(integer_rank(j2), 1u);
  EXPECT_EQ(integer_rank(jn_matrix(s.z, s.omega, 3)), 0u);
}

TEST(NW, A3) {
  Fixture s("A", 3);
  const auto r = nw_invariants(s.sys, s.z, s.omega);
  ASSERT_EQ(r.per_n.size(), 2u);
  EXPECT_EQ(r.per_n[1].d, 1);
  EXPECT_EQ(r.per_n[1].dim, 1u);
  EXPECT_EQ(r.radical_length, 2u);
  EXPECT_EQ(r.n_w, 24);
}

TEST(NW, A2) {
  Fixture s("A", 2);
  const auto r = nw_invariants(s.sys, s.z, s.omega);
  EXPECT_EQ(r.radical_length, 1u);
  EXPECT_EQ(r.n_w, 6);
  EXPECT_EQ(integer_rank(jn_matrix(s.z, s.omega, 2)), 0u);
}

TEST(NW, DihedralSweep) {
  for (int m = 3; m <= 12; ++m) {
    Fixture s("I2", m);
    EXPECT_EQ(s.omega.size() == 0, m % 2 == 0) << m;
    const auto r = nw_invariants(s.sys, s.z, s.omega);
    EXPECT_EQ(r.n_w, 2 * m) << m;
    if (m % 2)
      for (std::size_t k = 2; k <= 4; ++k) EXPECT_EQ(integer_rank(jn_matrix(s.z, s.omega, k)), 0u) << m;
  }
}

// Frozen from the lattice iteration; every d_{W,n} equals 1 at desk scale.
TEST(NW, FrozenValues) {
  struct Row {
    std::string f;
    int n;
    std::vector<std::size_t> dims;
  };
  for (const auto& [f, n, dims] : std::vector<Row>{{"A", 4, {9, 4, 1}}, {"B", 3, {1}}, {"B", 4, {4}},
                                                   {"D", 4, {5}}, {"H", 3, {2}}, {"I2", 5, {1}}}) {
    Fixture s(f, n);
    const auto r = nw_invariants(s.sys, s.z, s.omega);
    ASSERT_EQ(r.per_n.size(), dims.size()) << f << n;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      EXPECT_EQ(r.per_n[i].dim, dims[i]) << f << n;
      EXPECT_EQ(r.per_n[i].d, 1) << f << n;
    }
    EXPECT_EQ(r.n_w, static_cast<unsigned long>(s.sys.size()));
  }
}

// d_{W,n} against explicit enumeration of maximal minors of the full [J(n)].
TEST(NW, MatchesBruteForceMinors) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"A", 2}, {"I2", 7}, {"H", 3}}) {
    Fixture s(f, n);
    const auto r = nw_invariants(s.sys, s.z, s.omega, false);
    for (const auto& lv : r.per_n) {
      const auto full = jn_matrix(s.z, s.omega, lv.n);
      EXPECT_EQ(check::brute_gcd_minors(full, lv.dim), lv.d) << f << n << " n=" << lv.n;
    }
  }
}

TEST(NW, EnlargedRowsSameLattice) {
  Fixture s("A", 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto a = smith_normal_form(jn_matrix(s.z, s.omega, n));
    const auto b = smith_normal_form(enlarged_jn_matrix(s.z, s.omega, n));
    EXPECT_EQ(a.diag, b.diag) << n;
  }
}

TEST(NW, BasisIndependence) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}, {"A", 4}}) {
    Fixture s(f, n);
    const auto c = nw_invariants(s.sys, s.z, s.omega, true, {}, ChainBasis::Consecutive);
    const auto a = nw_invariants(s.sys, s.z, s.omega, true, {}, ChainBasis::Anchored);
    ASSERT_EQ(c.per_n.size(), a.per_n.size());
    for (std::size_t i = 0; i < c.per_n.size(); ++i) {
      EXPECT_EQ(c.per_n[i].d, a.per_n[i].d);
      EXPECT_EQ(c.per_n[i].dim, a.per_n[i].dim);
    }
    const auto t = chain_transition(s.z, s.omega);
    EXPECT_TRUE(signed_consecutive_ones(t));
    Matrix<mpq_class> tq(t.rows(), t.cols(), 0);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j) tq(i, j) = t(i, j);
    const auto inv = inverse(RationalField{}, tq);
    ASSERT_TRUE(inv.has_value());
    for (std::size_t i = 0; i < inv->rows(); ++i)
      for (std::size_t j = 0; j < inv->cols(); ++j) {
        const mpq_class& x = (*inv)(i, j);
        EXPECT_TRUE(x == 0 || x == 1 || x == -1);
      }
  }
}

TEST(NW, RowBudget) {
  Fixture s("A", 4);
  Budgets b;
  b.rows = 50;
  try {
    jn_matrix(s.z, s.omega, 2, ChainBasis::Consecutive, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(ChainCoordinates, RejectsNonRadical) {
  Fixture s("A", 3);
  try {
    chain_coordinates(s.z.basis(0b001), s.omega, ChainBasis::Consecutive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CrossCheckFailed);
  }
}

// dim Rad^n over F_p equals the rational dimension for p ∤ n_W.
TEST(RadicalDims, GoodPrimes) {
  for (const auto& [f, n, primes] : std::vector<std::tuple<std::string, int, std::vector<std::uint64_t>>>{
           {"A", 3, {5, 7, 11, 13, 23}}, {"B", 3, {5, 7, 11}}, {"A", 4, {7, 11}}}) {
    Fixture s(f, n);
    const auto marks = mark_table(s.sys, *s.a);
    const auto r = nw_invariants(s.sys, s.z, s.omega);
    DescentAlgebra<RationalField> q(s.a, RationalField{});
    const auto dq = descent_radical_dims(q, radical_basis(q, marks));
    ASSERT_EQ(dq.size(), r.per_n.size() + 1);
    for (std::size_t i = 0; i < r.per_n.size(); ++i) EXPECT_EQ(dq[i], r.per_n[i].dim);
    EXPECT_EQ(dq.back(), 0u);
    for (auto p : primes) {
      DescentAlgebra<PrimeField> fp(s.a, PrimeField(p));
      EXPECT_EQ(descent_radical_dims(fp, radical_basis(fp, marks)), dq) << f << n << " p=" << p;
    }
  }
}

// Bad primes can enlarge the radical.
TEST(RadicalDims, A2OverF2) {
  Fixture s("A", 2);
  const auto marks = mark_table(s.sys, *s.a);
  DescentAlgebra<PrimeField> f2(s.a, PrimeField(2));
  EXPECT_EQ(descent_radical_dims(f2, radical_basis(f2, marks)).front(), 2u);
}
