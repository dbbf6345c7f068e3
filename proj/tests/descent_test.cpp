#include <gtest/gtest.h>

#include "goodprime/check/oracles.hpp"
#include "goodprime/descent.hpp"

using namespace goodprime;

namespace {

struct Fixture {
  CoxeterSystem sys;
  std::shared_ptr<const StructureConstants> a;
  explicit Fixture(const std::string& f, int n)
      : sys(CoxeterSystem::build(f, n)), a(std::make_shared<StructureConstants>(sys)) {}
};

const std::vector<std::pair<std::string, int>> kSmall = {{"A", 2}, {"A", 3}, {"B", 2}, {"I2", 5}};

}  // namespace

TEST(StructureConstants, IdentityAndEmptySet) {
  for (const auto& [f, n] : kSmall) {
    Fixture s(f, n);
    const Mask full = s.sys.full_mask();
    for (Mask j = 0; j < s.sys.num_subsets(); ++j) {
      ASSERT_EQ(s.a->terms(full, j).size(), 1u);
      EXPECT_EQ(s.a->terms(full, j)[0], (std::pair<Mask, std::uint64_t>{j, 1}));
      ASSERT_EQ(s.a->terms(j, full).size(), 1u);
      EXPECT_EQ(s.a->terms(j, full)[0], (std::pair<Mask, std::uint64_t>{j, 1}));
    }
    EXPECT_EQ((*s.a)(0, 0, 0), s.sys.size());
  }
}

TEST(StructureConstants, SupportAndCount) {
  for (const auto& [f, n] : kSmall) {
    Fixture s(f, n);
    for (Mask j = 0; j < s.sys.num_subsets(); ++j)
      for (Mask k = 0; k < s.sys.num_subsets(); ++k) {
        std::uint64_t total = 0;
        for (const auto& [l, c] : s.a->terms(j, k)) {
          EXPECT_TRUE(is_subset(l, k));
          total += c;
        }
        EXPECT_EQ(total, s.sys.double_coset_reps(j, k).size());
      }
  }
}

TEST(StructureConstants, MatchesCosetSumProducts) {
  for (const auto& [f, n] : kSmall) {
    Fixture s(f, n);
    for (Mask j = 0; j < s.sys.num_subsets(); ++j)
      for (Mask k = 0; k < s.sys.num_subsets(); ++k) {
        const auto oracle = check::coset_sum_product(s.sys, j, k);
        for (Mask l = 0; l < s.sys.num_subsets(); ++l)
          ASSERT_EQ(mpz_class(static_cast<unsigned long>((*s.a)(j, k, l))), oracle[l]) << f << n << " " << j << k << l;
      }
  }
}

TEST(Multiply, A2Examples) {
  Fixture s("A", 2);
  DescentAlgebra<IntegerRing> alg(s.a, IntegerRing{});
  EXPECT_EQ(alg.multiply(alg.basis(0b01), alg.basis(0b10)), alg.from_terms({{0, 1}, {0b10, 1}}));
  const auto d = alg.from_terms({{0b01, 1}, {0b10, -1}});
  EXPECT_TRUE(alg.is_zero(alg.multiply(d, d)));
  EXPECT_EQ(alg.multiply(alg.basis(0), alg.basis(0)), alg.from_terms({{0, 6}}));
}

TEST(Multiply, A3SquareOfClassDifference) {
  Fixture s("A", 3);
  DescentAlgebra<IntegerRing> alg(s.a, IntegerRing{});
  const auto d = alg.from_terms({{0b011, 1}, {0b110, -1}});
  EXPECT_EQ(alg.multiply(d, d), alg.from_terms({{0b001, 1}, {0b010, -2}, {0b100, 1}}));
}

TEST(Multiply, IdentityAndFieldMismatch) {
  Fixture s("B", 2);
  DescentAlgebra<PrimeField> f3(s.a, PrimeField(3));
  DescentAlgebra<PrimeField> f5(s.a, PrimeField(5));
  const auto x = f3.from_terms({{0, 2}, {0b01, 1}, {0b10, 2}});
  EXPECT_EQ(f3.multiply(f3.one(), x), x);
  EXPECT_EQ(f3.multiply(x, f3.one()), x);
  try {
    f5.multiply(f5.one(), x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(Multiply, Associative) {
  for (const auto& [f, n] : kSmall) {
    Fixture s(f, n);
    DescentAlgebra<IntegerRing> alg(s.a, IntegerRing{});
    for (Mask j = 0; j < alg.dim(); ++j)
      for (Mask k = 0; k < alg.dim(); ++k)
        for (Mask l = 0; l < alg.dim(); ++l) {
          const auto x = alg.basis(j), y = alg.basis(k), z = alg.basis(l);
          ASSERT_EQ(alg.multiply(alg.multiply(x, y), z), alg.multiply(x, alg.multiply(y, z)));
        }
  }
}

// φ_J φ_K = Σ_L a_JKL φ_L evaluated at every c_I.
TEST(Multiply, MackeyFormula) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}, {"H", 3}, {"I2", 5}}) {
    Fixture s(f, n);
    const std::size_t N = s.sys.num_subsets();
    for (Mask j = 0; j < N; ++j)
      for (Mask k = 0; k < N; ++k)
        for (Mask i = 0; i < N; ++i) {
          std::uint64_t rhs = 0;
          for (const auto& [l, c] : s.a->terms(j, k)) rhs += c * (*s.a)(l, i, i);
          ASSERT_EQ((*s.a)(j, i, i) * (*s.a)(k, i, i), rhs);
        }
  }
}

TEST(Marks, A2Table) {
  Fixture s("A", 2);
  const auto t = mark_table(s.sys, *s.a);
  ASSERT_EQ(t.classes.reps, (std::vector<Mask>{0, 0b01, 0b11}));
  IntegerMatrix expected(3, 3, 0);
  expected(0, 0) = 6;
  expected(1, 0) = 3;
  expected(1, 1) = 1;
  expected(2, 0) = expected(2, 1) = expected(2, 2) = 1;
  EXPECT_EQ(t.beta, expected);
}

TEST(Marks, Laws) {
  for (const auto& [f, n] :
       std::vector<std::pair<std::string, int>>{{"A", 3}, {"A", 4}, {"B", 3}, {"D", 4}, {"H", 3}, {"I2", 5}}) {
    Fixture s(f, n);
    const auto t = mark_table(s.sys, *s.a);
    EXPECT_EQ(t.beta(0, 0), static_cast<unsigned long>(s.sys.size()));
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (c > r) EXPECT_EQ(t.beta(r, c), 0);
        if (sgn(t.beta(r, c)) != 0) EXPECT_TRUE(t.classes.contained(t.classes.reps[c], t.classes.reps[r]));
        EXPECT_TRUE(mpz_divisible_p(t.beta(r, c).get_mpz_t(), t.gamma(r).get_mpz_t()));
      }
  }
}

TEST(Marks, QClasses) {
  Fixture s("A", 2);
  const auto t = mark_table(s.sys, *s.a);
  EXPECT_EQ(t.q_classes(0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(t.q_classes(2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(t.q_classes(5), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Radical, A2Bases) {
  Fixture s("A", 2);
  const auto t = mark_table(s.sys, *s.a);
  DescentAlgebra<RationalField> q(s.a, RationalField{});
  const auto rq = radical_basis(q, t);
  ASSERT_EQ(rq.size(), 1u);
  EXPECT_EQ(rq[0], q.from_terms({{0b01, 1}, {0b10, -1}}));

  DescentAlgebra<PrimeField> f2(s.a, PrimeField(2));
  const auto r2 = radical_basis(f2, t);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0], f2.from_terms({{0b01, 1}, {0b10, -1}}));
  EXPECT_EQ(r2[1], f2.basis(0));
}

TEST(Radical, I24IsSemisimple) {
  Fixture s("I2", 4);
  DescentAlgebra<RationalField> q(s.a, RationalField{});
  EXPECT_TRUE(radical_basis(q, mark_table(s.sys, *s.a)).empty());
}

TEST(Radical, DimensionAndThetaKernel) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}, {"D", 4}, {"H", 3}}) {
    Fixture s(f, n);
    const auto t = mark_table(s.sys, *s.a);
    for (std::uint64_t p : {2, 3, 5}) {
      DescentAlgebra<PrimeField> alg(s.a, PrimeField(p));
      const auto rad = radical_basis(alg, t);
      EXPECT_EQ(rad.size(), alg.dim() - t.q_classes(p).size()) << f << n << " p=" << p;
      std::vector<Mask> at;
      for (std::size_t c : t.q_classes(p)) at.push_back(t.classes.reps[c]);
      for (const auto& r : rad)
        for (const auto& v : alg.theta(r, at)) EXPECT_EQ(v, 0u);
    }
  }
}
