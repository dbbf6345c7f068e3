#include <gtest/gtest.h>

#include "engine_checks.hpp"
#include "goodprime/bands.hpp"
#include "goodprime/hecke.hpp"

using namespace goodprime;

namespace {

void expect_code(const std::function<void()>& f, ErrorCode code) {
  try {
    f();
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.message();
  }
}

}  // namespace

TEST(Faces, OneLine) {
  const auto b = enumerate_faces({{1, 0}});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.faces[0], (SignVector{0}));
  const auto lat = support_lattice(b);
  const auto alg = band_algebra(b, lat, RationalField{});
  alg.validate();
  EXPECT_EQ(alg.num_simples(), 2u);
  EXPECT_EQ(alg.radical_dims(), (std::vector<std::size_t>{3, 1, 0}));
}

TEST(Faces, CountsAndChambers) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto b = enumerate_faces(concurrent_lines(n));
    EXPECT_EQ(b.size(), 4 * n + 1);
    check_left_regular_band(b);
    for (std::uint32_t c = 0; c < b.size(); ++c) {
      if (b.zero_set[c] != 0) continue;
      for (std::uint32_t y = 0; y < b.size(); ++y) EXPECT_EQ(b.mul(c, y), c);
    }
  }
  // Three coordinate planes in space: the 27 sign vectors are all realizable.
  EXPECT_EQ(enumerate_faces({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).size(), 27u);
  // Braid arrangement of A2 in R^3: 13 faces.
  EXPECT_EQ(enumerate_faces({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}).size(), 13u);
}

TEST(Faces, Degenerate) {
  expect_code([] { enumerate_faces({{0, 0}, {1, 0}}); }, ErrorCode::DegenerateArrangement);
  expect_code([] { enumerate_faces({{1, 2}, {-2, -4}}); }, ErrorCode::DegenerateArrangement);
  expect_code([] { enumerate_faces({{1, 0}, {0, 1, 0}}); }, ErrorCode::DegenerateArrangement);
  expect_code([] { enumerate_faces({}); }, ErrorCode::DegenerateArrangement);
}

TEST(Faces, NotABand) {
  FaceSemigroup b = enumerate_faces({{1, 0}});
  b.product[1 * 3 + 1] = 2;  // x² ≠ x
  expect_code([&] { check_left_regular_band(b); }, ErrorCode::NotLeftRegularBand);
}

TEST(Faces, ParseNormals) {
  EXPECT_EQ(parse_normals("1,0;0,1;1,1"), (std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}}));
  expect_code([] { parse_normals("1,x"); }, ErrorCode::InvalidArgument);
}

TEST(Support, Homomorphism) {
  const auto b = enumerate_faces({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});
  const auto lat = support_lattice(b);
  for (std::uint32_t x = 0; x < b.size(); ++x)
    for (std::uint32_t y = 0; y < b.size(); ++y) {
      const std::uint32_t z = lat.zero_sets[lat.support_of[x]] & lat.zero_sets[lat.support_of[y]];
      EXPECT_EQ(lat.zero_sets[lat.support_of[b.mul(x, y)]], z);
    }
}

TEST(FaceAlgebra, ConcurrentLines) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto b = enumerate_faces(concurrent_lines(n));
    const auto lat = support_lattice(b);
    ASSERT_EQ(lat.size(), n + 2);
    const auto q = band_algebra(b, lat, RationalField{});
    q.validate();
    EXPECT_EQ(q.dim(), 4 * n + 1);
    EXPECT_EQ(q.radical_dims(), (std::vector<std::size_t>{4 * n + 1, 3 * n - 1, n - 1, 0}));
    expect_engine_properties(q, 3, "lines " + std::to_string(n));
    const auto ext = q.ext_dims(3);
    EXPECT_EQ(ext_arrows(ext[1]), hasse_arrows(lat));
    for (std::uint64_t p : {2, 3}) {
      const auto fp = band_algebra(b, lat, PrimeField(p));
      fp.validate();
      EXPECT_EQ(fp.radical_dims(), q.radical_dims());
      EXPECT_EQ(fp.graded_cartan(), q.graded_cartan());
      EXPECT_EQ(fp.ext_dims(3), ext);
    }
  }
}

// Resolving the chamber simple of two lines: the rays, then the origin.
TEST(FaceAlgebra, TwoLinesResolution) {
  const auto b = enumerate_faces(concurrent_lines(2));
  const auto lat = support_lattice(b);
  const auto q = band_algebra(b, lat, RationalField{});
  const auto res = q.minimal_resolution(3, 3);
  EXPECT_EQ(res.multiplicity[1], (std::vector<std::size_t>{0, 1, 1, 0}));
  EXPECT_EQ(res.multiplicity[2], (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_EQ(res.multiplicity[3], (std::vector<std::size_t>{0, 0, 0, 0}));
}

// One relation per interval of length 2: c^{(2)} = |(X, Z)| − 1.
TEST(FaceAlgebra, IntervalRelations) {
  const auto b = enumerate_faces({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});
  const auto lat = support_lattice(b);
  const auto q = band_algebra(b, lat, RationalField{});
  q.validate();
  const auto layers = q.graded_cartan();
  ASSERT_GE(layers.size(), 3u);
  const auto arrows = hasse_arrows(lat);
  EXPECT_EQ(ext_arrows(q.ext_dims(1)[1]), arrows);
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t z = 0; z < lat.size(); ++z) {
      std::size_t middle = 0;
      for (const auto& [a, c] : lat.hasse)
        if (a == x && std::count(lat.hasse.begin(), lat.hasse.end(), std::pair<std::size_t, std::size_t>{c, z})) ++middle;
      if (middle > 0) EXPECT_EQ(layers[2](z, x), middle - 1);
    }
}

TEST(Hecke, MonoidRelations) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 2}, {"A", 3}, {"B", 3}, {"I2", 5}}) {
    const auto sys = CoxeterSystem::build(f, n);
    const auto mon = hecke_monoid(sys, 100000);
    ASSERT_EQ(mon.size(), sys.size());
    std::vector<std::uint32_t> pi;
    for (int s = 0; s < sys.rank(); ++s) pi.push_back(mon.index[sys.generator(s)]);
    auto mul = [&](std::uint32_t a, std::uint32_t b) { return mon.product[a * mon.size() + b]; };
    for (int s = 0; s < sys.rank(); ++s) {
      EXPECT_EQ(mul(pi[s], pi[s]), pi[s]);
      for (int t = s + 1; t < sys.rank(); ++t) {
        std::uint32_t a = mon.index[CoxeterSystem::identity()], b = a;
        for (int k = 0; k < sys.m(s, t); ++k) {
          a = mul(a, pi[k % 2 ? t : s]);
          b = mul(b, pi[k % 2 ? s : t]);
        }
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(Hecke, ClosureBudget) {
  const auto sys = CoxeterSystem::build("A", 2);
  expect_code([&] { hecke_monoid(sys, 3); }, ErrorCode::ClosureBudgetExceeded);
}

TEST(Hecke, A1) {
  const auto sys = CoxeterSystem::build("A", 1);
  const auto alg = hecke_monoid_algebra(sys, hecke_monoid(sys, 100), RationalField{});
  alg.validate();
  EXPECT_EQ(alg.dim(), 2u);
  EXPECT_EQ(alg.num_simples(), 2u);
  EXPECT_TRUE(alg.radical().empty());
}

TEST(Hecke, A2) {
  const auto sys = CoxeterSystem::build("A", 2);
  const auto mon = hecke_monoid(sys, 100);
  const auto q = hecke_monoid_algebra(sys, mon, RationalField{});
  q.validate();
  EXPECT_EQ(q.dim(), 6u);
  EXPECT_EQ(q.num_simples(), 4u);
  EXPECT_EQ(q.radical().size(), 2u);
  // T_s² = −T_s.
  const auto ts = q.basis(mon.index[sys.generator(0)]);
  Vec<RationalField> neg = ts;
  for (auto& x : neg) x = -x;
  EXPECT_EQ(q.multiply(ts, ts), neg);
  expect_engine_properties(q, 3, "hecke A2");
  const auto ext = q.ext_dims(3);
  for (std::uint64_t p : {2, 3}) {
    const auto fp = hecke_monoid_algebra(sys, mon, PrimeField(p));
    fp.validate();
    EXPECT_EQ(ext_table(q, fp, 3).second, ext) << p;
    EXPECT_EQ(fp.graded_cartan(), q.graded_cartan());
  }
}

TEST(Hecke, RankThreeFieldEquality) {
  for (const auto& [f, n] : std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 3}}) {
    const auto sys = CoxeterSystem::build(f, n);
    const auto mon = hecke_monoid(sys, 100000);
    const auto q = hecke_monoid_algebra(sys, mon, RationalField{});
    q.validate();
    EXPECT_EQ(q.num_simples(), 8u);
    const auto ext = q.ext_dims(2);
    for (std::uint64_t p : {2, 3}) {
      const auto fp = hecke_monoid_algebra(sys, mon, PrimeField(p));
      EXPECT_EQ(fp.graded_cartan(), q.graded_cartan()) << f << n << p;
      EXPECT_EQ(fp.ext_dims(2), ext) << f << n << p;
    }
  }
}
