#include <gtest/gtest.h>

#include "support.hpp"

namespace mz = majorize;
using mz::Rational;
using mz::RMatrix;
using mz::RVector;

namespace {
RMatrix mat(std::vector<std::vector<Rational>> rows) { return RMatrix(std::move(rows)); }

void add_scaled_permutation(RMatrix& m, const Rational& w, const mz::Permutation& sigma) {
  for (std::size_t j = 0; j < m.order(); ++j) m.at(sigma(j), j) += w;
}
}  // namespace

TEST(Chain, SingleTransfer) {
  auto c = mz::build_chain({10, 0}, {5, 5});
  ASSERT_EQ(c.length(), 1u);
  EXPECT_EQ(c.vectors.front(), (RVector{10, 0}));
  EXPECT_EQ(c.vectors.back(), (RVector{5, 5}));
  const auto& s = c.steps[0];
  EXPECT_EQ(s.j, 0u);
  EXPECT_EQ(s.k, 1u);
  EXPECT_EQ(s.rho, 5);
  EXPECT_EQ(s.Delta, 5);
  EXPECT_EQ(s.delta, 0);
  EXPECT_EQ(s.lambda, Rational(1, 2));
}

TEST(Chain, ExerciseChainIsStepwiseStrict) {
  std::vector<RVector> seq{{10, 0}, {9, 1}, {8, 2}, {7, 3}, {6, 4}, {5, 5}};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    EXPECT_TRUE(mz::majorizes(seq[i - 1], seq[i]).strict());
    auto c = mz::build_chain(seq[i - 1], seq[i]);
    EXPECT_EQ(c.length(), 1u);
    EXPECT_FALSE(mz::check_chain(c, seq[i - 1], seq[i]).has_value());
  }
}

TEST(Chain, ThreeCoordinates) {
  auto c = mz::build_chain({3, 2, 1}, {2, 2, 2});
  ASSERT_EQ(c.length(), 1u);
  EXPECT_EQ(c.steps[0].j, 0u);
  EXPECT_EQ(c.steps[0].k, 2u);
  EXPECT_EQ(mz::hamming_distance(c.vectors[0], c.vectors[1]), 2u);
}

TEST(Chain, KeepsDecreasingOrderWhereFirstSurplusWouldNot) {
  auto c = mz::build_chain({3, 3, 0}, {2, 2, 2});
  EXPECT_FALSE(mz::check_chain(c, {3, 3, 0}, {2, 2, 2}).has_value());
  for (const auto& v : c.vectors) EXPECT_TRUE(mz::is_decreasing(v));
  EXPECT_EQ(c.length(), 2u);
}

TEST(Chain, Errors) {
  EXPECT_THROW(mz::build_chain({6, 4}, {7, 3}), mz::InputError);
  EXPECT_THROW(mz::build_chain({5, 5}, {5, 5}), mz::InputError);
  EXPECT_THROW(mz::build_chain({4, -1}, {2, 1}), mz::InputError);
}

TEST(Chain, CheckChainRejectsTampering) {
  auto c = mz::build_chain({10, 0}, {6, 4});
  auto bad = c;
  bad.steps[0].lambda = Rational(1, 2);
  EXPECT_TRUE(mz::check_chain(bad, {10, 0}, {6, 4}).has_value());
  bad = c;
  bad.vectors.back() = RVector{7, 3};
  EXPECT_TRUE(mz::check_chain(bad, {10, 0}, {6, 4}).has_value());
}

TEST(TTransform, Examples) {
  mz::TransferStep id{0, 1, 5, 5, 5, 1};
  EXPECT_EQ(mz::step_to_ttransform(id, 2).matrix(), RMatrix::identity(2));
  mz::TransferStep half{0, 1, 5, 5, 0, Rational(1, 2)};
  EXPECT_EQ(mz::step_to_ttransform(half, 2).matrix(),
            mat({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}));

  auto c = mz::build_chain({10, 0}, {6, 4});
  ASSERT_EQ(c.length(), 1u);
  EXPECT_EQ(c.steps[0].Delta, 5);
  EXPECT_EQ(c.steps[0].delta, 1);
  EXPECT_EQ(c.steps[0].lambda, Rational(3, 5));
  auto t = mz::step_to_ttransform(c.steps[0], 2);
  EXPECT_EQ(t.matrix(), mat({{Rational(3, 5), Rational(2, 5)}, {Rational(2, 5), Rational(3, 5)}}));
  EXPECT_EQ(t.matrix() * RVector({10, 0}), (RVector{6, 4}));
  EXPECT_THROW(mz::step_to_ttransform(c.steps[0], 1), mz::InputError);
}

TEST(Hlp, Examples) {
  EXPECT_EQ(mz::hlp_matrix({10, 0}, {5, 5}).matrix(),
            mat({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}));
  EXPECT_EQ(mz::hlp_matrix({3, 1, 2}, {3, 1, 2}).matrix(), RMatrix::identity(3));
  auto p = mz::hlp_matrix({3, 1, 2}, {1, 2, 3}).matrix();
  EXPECT_EQ(p * RVector({3, 1, 2}), (RVector{1, 2, 3}));
  EXPECT_EQ(mz::birkhoff_decompose(mz::DoublyStochastic(p)).terms.size(), 1u);
  auto s = mz::hlp_matrix({3, 2, 1}, {2, 2, 2});
  EXPECT_EQ(s.matrix() * RVector({3, 2, 1}), (RVector{2, 2, 2}));
  EXPECT_THROW(mz::hlp_matrix({6, 4}, {7, 3}), mz::InputError);
}

TEST(Birkhoff, Examples) {
  auto sigma = mz::Permutation::parse_cycles("(1,3)(2,4)", 4);
  auto one = mz::birkhoff_decompose(mz::DoublyStochastic(RMatrix::permutation(sigma)));
  ASSERT_EQ(one.terms.size(), 1u);
  EXPECT_EQ(one.terms[0].weight, 1);
  EXPECT_EQ(one.terms[0].sigma, sigma);

  auto half = mz::birkhoff_decompose(
      mz::DoublyStochastic(mat({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}})));
  ASSERT_EQ(half.terms.size(), 2u);
  EXPECT_EQ(half.terms[0].weight, Rational(1, 2));
  EXPECT_TRUE(half.terms[0].sigma.is_identity());
  EXPECT_EQ(half.terms[1].weight, Rational(1, 2));
  EXPECT_EQ(half.terms[1].sigma.to_cycle_string(), "(1,2)");
}

TEST(Birkhoff, RejectsNonDoublyStochastic) {
  EXPECT_THROW(mz::DoublyStochastic(mat({{1, 0}, {1, 0}})), mz::InputError);
  EXPECT_THROW(mz::DoublyStochastic(mat({{2, -1}, {-1, 2}})), mz::InputError);
}

TEST(BirkhoffProperty, RandomConvexCombinationsReconstruct) {
  mz::testing::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = mz::testing::uniform_size(rng, 1, 5);
    RMatrix m(n);
    Rational left = 1;
    for (int k = 0; k < 3; ++k) {
      Rational w = k == 2 ? left : Rational(mz::testing::uniform(rng, 0, 4), 12);
      if (w > left) w = left;
      left -= w;
      add_scaled_permutation(m, w, mz::testing::random_permutation(rng, n));
    }
    auto d = mz::birkhoff_decompose(mz::DoublyStochastic(m));
    EXPECT_EQ(d.reconstruct(n), m);
    EXPECT_EQ(d.total_weight(), 1);
    EXPECT_LE(d.terms.size(), (n - 1) * (n - 1) + 1);
  }
}

TEST(ChainProperty, RandomStrictPairs) {
  mz::testing::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = mz::testing::uniform_size(rng, 2, 6);
    auto [a, b] = mz::testing::strict_integer_pair(rng, n, 12);
    const Rational f(1, mz::testing::uniform(rng, 1, 5));
    RVector ar = f * a, br = f * b;
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{ar, br}}) {
      auto c = mz::build_chain(x, y);
      auto problem = mz::check_chain(c, x, y);
      EXPECT_FALSE(problem.has_value()) << *problem;
      EXPECT_LE(c.length(), n - 1);
    }
  }
}

TEST(ChainProperty, MeansDecreaseAlongChain) {
  mz::testing::Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = mz::testing::uniform_size(rng, 2, 4);
    auto [a, b] = mz::testing::strict_integer_pair(rng, n, 8);
    auto c = mz::build_chain(a, b);
    auto g = mz::full_symmetric_group(n);
    RVector x = mz::testing::nonconstant_positive_vector(rng, n);
    for (std::size_t i = 1; i < c.vectors.size(); ++i) {
      auto cmp = mz::compare_means(x, mz::ExponentVector(c.vectors[i - 1]), mz::ExponentVector(c.vectors[i]), g,
                                   mz::MeanMode::exact);
      EXPECT_EQ(cmp.order, mz::Ordering::less);
    }
  }
}

TEST(HlpProperty, ExactAndRoundTripsThroughMembership) {
  mz::testing::Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = mz::testing::uniform_size(rng, 1, 5);
    auto [a, b] = n == 1 ? std::pair{RVector{3}, RVector{3}} : mz::testing::strict_integer_pair(rng, n, 10);
    auto s = mz::hlp_matrix(a, b);
    EXPECT_EQ(s.matrix() * a, b);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(s.matrix().row_sum(i), 1);
      EXPECT_EQ(s.matrix().col_sum(i), 1);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_GE(s.at(i, j), 0);
        EXPECT_LE(s.at(i, j), 1);
      }
    }
    auto d = mz::birkhoff_decompose(s);
    // b = Σ t_σ P_σ a = Σ t_σ σa: the Birkhoff terms are convex weights on the orbit.
    mz::MembershipCertificate cert;
    for (const auto& term : d.terms) cert.weights.emplace_back(term.sigma, term.weight);
    EXPECT_FALSE(mz::check_membership(cert, a, b, mz::full_symmetric_group(n)).has_value());
  }
}
