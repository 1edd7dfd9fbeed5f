#include <gtest/gtest.h>

#include "support.hpp"

using namespace greenseq;

namespace {

using Row = std::vector<std::int64_t>;

const Quiver a2 = quivers::linear_a(2);

}  // namespace

TEST(Frame, InitialState) {
  const auto s = frame(a2);
  EXPECT_EQ(s.principal(), a2);
  EXPECT_EQ(s.cmat(), SquareMatrix<std::int64_t>::identity(2));
  EXPECT_TRUE(s.history().empty());
  EXPECT_TRUE(is_green(s, 1));
  EXPECT_TRUE(is_green(s, 2));
  EXPECT_FALSE(is_all_red(s));
  EXPECT_EQ(frame(Quiver(1)).cmat().rows(), (std::vector<Row>{{1}}));
  for (Vertex i = 1; i <= 2; ++i) {
    const auto c = c_vector(s, i);
    EXPECT_TRUE(c.green());
    EXPECT_EQ(c.entries, (i == 1 ? Row{1, 0} : Row{0, 1}));
  }
}

TEST(MutateFramed, A2AfterTwo) {
  const auto s = mutate_framed(frame(a2), 2);
  EXPECT_EQ(c_vector(s, 1).entries, (Row{1, 1}));
  EXPECT_TRUE(is_green(s, 1));
  EXPECT_TRUE(is_red(s, 2));
  EXPECT_EQ(c_vector(s, 2).entries, (Row{0, -1}));
}

TEST(MutateFramed, A2GreenAnnotations) {
  const auto s = mutate_framed(frame(a2), MutationSequence{2, 1, 2});
  ASSERT_EQ(s.history().size(), 3u);
  const std::vector<Row> expected{{0, 1}, {1, 1}, {1, 0}};
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_TRUE(s.history()[t].green);
    EXPECT_EQ(s.history()[t].c.entries, expected[t]);
  }
  EXPECT_EQ(s.sequence(), (MutationSequence{2, 1, 2}));
  EXPECT_TRUE(is_all_red(s));
}

TEST(MutateFramed, IntermediateCVectors) {
  const auto s = mutate_framed(frame(a2), MutationSequence{2, 1});
  EXPECT_EQ(c_vector(s, 2).entries, (Row{1, 0}));
  EXPECT_TRUE(is_green(s, 2));
  const auto done = mutate_framed(frame(a2), MutationSequence{1, 2});
  EXPECT_TRUE(is_red(done, 1));
  EXPECT_TRUE(is_red(done, 2));
}

TEST(MutateFramed, TwiceReturnsToStart) {
  const auto s0 = frame(quivers::linear_a(3));
  const auto s2 = mutate_framed(s0, MutationSequence{2, 2});
  EXPECT_TRUE(s2.same_position(s0));
  EXPECT_EQ(s2.history().size(), 2u);
  EXPECT_TRUE(s2.history()[0].green);
  EXPECT_FALSE(s2.history()[1].green);
}

TEST(MutateFramed, Errors) {
  EXPECT_THROW(mutate_framed(frame(a2), 3), invalid_vertex);
  EXPECT_THROW(c_vector(frame(a2), 0), invalid_vertex);
}

TEST(ExtractPermutation, A2Endpoints) {
  EXPECT_TRUE(extract_permutation(mutate_framed(frame(a2), MutationSequence{1, 2})).is_identity());
  EXPECT_EQ(extract_permutation(mutate_framed(frame(a2), MutationSequence{2, 1, 2})), (Permutation{{2, 1}}));
}

TEST(ExtractPermutation, NotCoframed) {
  EXPECT_THROW(extract_permutation(frame(a2)), not_coframed);
  EXPECT_THROW(extract_permutation(mutate_framed(frame(a2), 1)), not_coframed);
  EXPECT_FALSE(try_extract_permutation(frame(a2)).has_value());
}

TEST(ExtractPermutation, PrincipalPartIsConjugated) {
  const auto a3 = quivers::linear_a(3);
  for (const MutationSequence& seq : {MutationSequence{1, 2, 3}, MutationSequence{3, 2, 1, 2, 3}}) {
    const auto s = mutate_framed(frame(a3), seq);
    const auto sigma = extract_permutation(s);
    for (Vertex i = 1; i <= 3; ++i) {
      EXPECT_EQ(s.cmat()(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(sigma(i) - 1)), -1);
      for (Vertex j = 1; j <= 3; ++j) EXPECT_EQ(s.principal().arrows(i, j), a3.arrows(sigma(i), sigma(j)));
    }
  }
}

TEST(FramedProperty, AgreesWithBigMatrixOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = gs_test::random_size(rng, 1, 5);
    const Quiver q = gs_test::random_quiver(rng, n, 2);
    auto s = frame(q);
    gs_test::BigFrame oracle(q);
    const auto len = gs_test::random_size(rng, 1, 8);
    for (std::size_t t = 0; t < len; ++t) {
      const auto k = static_cast<Vertex>(gs_test::random_size(rng, 1, n));
      ASSERT_EQ(s.is_green(k), oracle.green(k));
      s = s.mutated(k);
      oracle.mutate(k);
      for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i) {
        ASSERT_EQ(s.c_vector(i).entries, oracle.c(i));
        for (Vertex j = 1; static_cast<std::size_t>(j) <= n; ++j)
          ASSERT_EQ(s.principal().arrows(i, j), oracle.b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      }
      ASSERT_EQ(s.is_all_red(), oracle.all_red());
    }
  }
}

TEST(FramedProperty, SignCoherenceAlongRandomWalks) {
  using Big = boost::multiprecision::cpp_int;
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = gs_test::random_size(rng, 1, 5);
    const Quiver q64 = gs_test::random_quiver(rng, n, 2);
    BasicQuiver<Big> q(n);
    for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i)
      for (Vertex j = i + 1; static_cast<std::size_t>(j) <= n; ++j) q.add_arrows(i, j, Big(q64.arrows(i, j)));
    auto s = frame(q);
    const auto len = gs_test::random_size(rng, 1, 20);
    for (std::size_t t = 0; t < len; ++t) {
      s = s.mutated(static_cast<Vertex>(gs_test::random_size(rng, 1, n)));  // throws on incoherence
      for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i) ASSERT_NE(s.c_vector(i).sign, 0);
    }
  }
}

TEST(CVector, Support) {
  const CVector<std::int64_t> c{{0, 2, 1}, 1};
  EXPECT_TRUE(c.supported_on({2, 3}));
  EXPECT_TRUE(c.supported_on({1, 2, 3}));
  EXPECT_FALSE(c.supported_on({1, 2}));
}
