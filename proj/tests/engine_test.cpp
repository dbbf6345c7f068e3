#include <gtest/gtest.h>

#include "engine_checks.hpp"
#include "goodprime/nilcoxeter.hpp"
#include "goodprime/radical_invariants.hpp"

using namespace goodprime;

namespace {

template <Field F>
BasicAlgebra<F> descent(const std::string& f, int n, const F& field) {
  auto sys = CoxeterSystem::build(f, n);
  auto a = std::make_shared<StructureConstants>(sys);
  DescentAlgebra<F> alg(a, field);
  return descent_basic_algebra(alg, mark_table(sys, *a));
}

}  // namespace

TEST(Validate, DescentA2) {
  const auto alg = descent("A", 2, RationalField{});
  EXPECT_EQ(alg.num_simples(), 3u);
  EXPECT_NO_THROW(alg.validate());
  expect_engine_properties(alg, 4, "A2");
}

TEST(Validate, RejectsNonNilpotentRadical) {
  // k × k with the "radical" k × 0.
  const RationalField q;
  using A = BasicAlgebra<RationalField>;
  std::vector<A::Sparse> prod(4);
  prod[0] = {{0, 1}};
  prod[3] = {{1, 1}};
  const A alg(q, 2, prod, {1, 1}, {{1, 1}}, {{1, 0}});
  try {
    alg.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAlgebra);
    EXPECT_NE(e.message().find("nilpotent"), std::string::npos);
  }
}

TEST(Validate, RejectsBadIdempotents) {
  const RationalField q;
  using A = BasicAlgebra<RationalField>;
  std::vector<A::Sparse> prod(4);
  prod[0] = {{0, 1}};
  prod[3] = {{1, 1}};
  const A alg(q, 2, prod, {1, 1}, {{1, 0}}, {});
  try {
    alg.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAlgebra);
  }
}

TEST(GradedCartan, DescentA1IsSemisimple) {
  const auto alg = descent("A", 1, RationalField{});
  const auto layers = alg.graded_cartan();
  ASSERT_EQ(layers.size(), 1u);
  EXPECT_EQ(layers[0], (Matrix<std::size_t>{{1, 0}, {0, 1}}));
}

TEST(GoodPrimes, DescentA3AndB3) {
  for (const auto& [f, n, primes] : std::vector<std::tuple<std::string, int, std::vector<std::uint64_t>>>{
           {"A", 3, {5, 7, 11, 13, 23}}, {"B", 3, {5, 7, 11}}}) {
    const auto q = descent(f, n, RationalField{});
    q.validate();
    const auto lq = q.graded_cartan();
    expect_engine_properties(q, 4, f + std::to_string(n));
    for (auto p : primes) {
      const auto fp = descent(f, n, PrimeField(p));
      fp.validate();
      EXPECT_EQ(fp.radical_dims(), q.radical_dims());
      EXPECT_EQ(fp.graded_cartan(), lq) << f << n << " p=" << p;
      const auto [a, b] = ext_table(q, fp, 4);
      EXPECT_EQ(a, b) << f << n << " p=" << p;
    }
  }
}

TEST(ExtTable, DegreeZeroAndLabels) {
  const auto q = descent("A", 2, RationalField{});
  const auto f2 = descent("A", 2, PrimeField(2));
  try {
    ext_table(q, f2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LabelMismatch);
  }
  const auto ext = q.ext_dims(2);
  EXPECT_EQ(ext[0], (Matrix<std::size_t>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Resolution, SyzygyBudget) {
  const auto sys = CoxeterSystem::build("A", 3);
  const auto alg = build_nilcoxeter(sys, RationalField{});
  Budgets b;
  b.syzygy = 10;
  try {
    alg.minimal_resolution(0, 3, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(NilCoxeter, DualNumbers) {
  const auto sys = CoxeterSystem::build("A", 1);
  const auto alg = build_nilcoxeter(sys, RationalField{});
  alg.validate();
  EXPECT_EQ(alg.dim(), 2u);
  EXPECT_EQ(alg.multiply(alg.basis(1), alg.basis(1)), (Vec<RationalField>{0, 0}));
}

TEST(NilCoxeter, S3LayersAndBraid) {
  const auto sys = CoxeterSystem::build("A", 2);
  const auto alg = build_nilcoxeter(sys, RationalField{});
  alg.validate();
  EXPECT_EQ(alg.radical_dims(), (std::vector<std::size_t>{6, 5, 3, 1, 0}));  // J^4 = 0
  std::vector<std::size_t> sizes;
  for (const auto& l : alg.graded_cartan()) sizes.push_back(l(0, 0));
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 1}));
  const auto x1 = alg.basis(sys.generator(0)), x2 = alg.basis(sys.generator(1));
  const auto a = alg.multiply(alg.multiply(x1, x2), x1), b = alg.multiply(alg.multiply(x2, x1), x2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, alg.basis(sys.longest_element()));
  EXPECT_TRUE(is_zero_vector(alg.field(), alg.multiply(x1, x1)));
}

TEST(NilCoxeter, LayersAreLengthHistograms) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"A", 3}, {"B", 2}, {"I2", 5}}) {
    const auto sys = CoxeterSystem::build(f, n);
    const auto alg = build_nilcoxeter(sys, PrimeField(3));
    alg.validate();
    std::vector<std::size_t> sizes;
    for (const auto& l : alg.graded_cartan()) sizes.push_back(l(0, 0));
    EXPECT_EQ(sizes, sys.length_histogram()) << f << n;
    expect_engine_properties(alg, 2, f + std::to_string(n));
  }
}

TEST(NilCoxeter, HilbertSeries) {
  struct Row {
    std::string f;
    int n;
    std::size_t t;
    std::vector<std::size_t> expected;  // empty: only compare fields
  };
  for (const auto& [f, n, t, expected] : std::vector<Row>{
           {"A", 2, 4, {1, 2, 3, 4, 5}}, {"A", 3, 3, {1, 3, 6, 10}}, {"B", 2, 4, {}}}) {
    const auto sys = CoxeterSystem::build(f, n);
    const auto q = nilcoxeter_hilbert(build_nilcoxeter(sys, RationalField{}), t);
    if (!expected.empty()) EXPECT_EQ(q, expected);
    for (std::uint64_t p : {2, 3, 5})
      EXPECT_EQ(nilcoxeter_hilbert(build_nilcoxeter(sys, PrimeField(p)), t), q) << f << n << " p=" << p;
  }
}

// Type A_{n-1}: dim Ext^t = binomial(n-2+t, t).
TEST(NilCoxeter, TypeABinomials) {
  const auto sys = CoxeterSystem::build("A", 4);
  const auto h = nilcoxeter_hilbert(build_nilcoxeter(sys, PrimeField(7)), 2);
  EXPECT_EQ(h, (std::vector<std::size_t>{1, 4, 10}));
}
