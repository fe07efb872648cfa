#include <gtest/gtest.h>

#include "support.hpp"

namespace mz = majorize;
using mz::ExponentVector;
using mz::Integer;
using mz::Ordering;
using mz::Rational;
using mz::RVector;

TEST(Rado, ScaleIsSmallestExactBase) {
  EXPECT_EQ(mz::rado_scale(2, 2), Integer(2));         // 2^2 = 4 > 2
  EXPECT_EQ(mz::rado_scale(1, 6), Integer(7));         // 7 > 6
  EXPECT_EQ(mz::rado_scale(Rational(1, 2), 2), Integer(5));  // 5 > 2^2
  EXPECT_EQ(mz::rado_scale(3, 1), Integer(2));
  EXPECT_EQ(mz::rado_scale(2, 24), Integer(5));        // 25 > 24
  EXPECT_THROW(mz::rado_scale(0, 2), mz::InputError);
}

TEST(Rado, WitnessExample) {
  auto g = mz::full_symmetric_group(2);
  mz::SeparationCertificate cert{{1, -1}, 2, 2};
  auto w = mz::build_rado_witness(cert, {6, 4}, {7, 3}, g);
  EXPECT_EQ(w.M, Integer(2));
  EXPECT_EQ(w.x, (RVector{2, Rational(1, 2)}));
  EXPECT_EQ(w.lhs.rational(), Rational(257, 32));
  EXPECT_EQ(w.rhs.rational(), Rational(17, 8));
  EXPECT_FALSE(mz::check_rado_witness(w, {6, 4}, {7, 3}, g).has_value());
}

TEST(Rado, ToyTranslatedTarget) {
  // b = a + margin·e1 with u = e1 separates; totals differ.
  auto g = mz::full_symmetric_group(3);
  ExponentVector a{2, 1, 0};
  ExponentVector b{5, 1, 0};
  mz::SeparationCertificate cert{{1, 0, 0}, 2, 3};
  auto w = mz::build_rado_witness(cert, a, b, g);
  EXPECT_EQ(mz::compare(w.lhs, w.rhs), Ordering::greater);
}

TEST(Rado, RationalCertificateIsScaledToIntegers) {
  auto g = mz::full_symmetric_group(2);
  mz::SeparationCertificate cert{{Rational(1, 2), Rational(-1, 2)}, 1, 1};
  auto w = mz::build_rado_witness(cert, {6, 4}, {7, 3}, g);
  EXPECT_EQ(w.certificate.u, (RVector{1, -1}));
  EXPECT_EQ(w.certificate.margin, 2);
}

TEST(Rado, FractionalExponentsUseFloatMode) {
  auto g = mz::full_symmetric_group(2);
  ExponentVector a{Rational(3, 2), Rational(1, 2)};
  ExponentVector b{Rational(7, 4), Rational(1, 4)};
  auto r = mz::membership(b.vec(), a.vec(), g);
  ASSERT_FALSE(r.member());
  auto w = mz::build_rado_witness(r.separation(), a, b, g);
  EXPECT_FALSE(w.lhs.is_exact());
  EXPECT_EQ(mz::compare(w.lhs, w.rhs), Ordering::greater);
}

TEST(Rado, RejectsInvalidCertificate) {
  auto g = mz::full_symmetric_group(2);
  mz::SeparationCertificate wrong{{-1, 1}, 2, 2};
  EXPECT_THROW(mz::build_rado_witness(wrong, {6, 4}, {7, 3}, g), mz::InputError);
}

TEST(Rado, CheckerRejectsTamperedWitness) {
  auto g = mz::full_symmetric_group(2);
  auto w = mz::build_rado_witness({{1, -1}, 2, 2}, {6, 4}, {7, 3}, g);
  auto bad = w;
  bad.M = 1;
  EXPECT_TRUE(mz::check_rado_witness(bad, {6, 4}, {7, 3}, g).has_value());
  bad = w;
  bad.x = RVector{1, 1};
  EXPECT_TRUE(mz::check_rado_witness(bad, {6, 4}, {7, 3}, g).has_value());
}

TEST(Probe, Constant) {
  auto p = mz::probe_constant({7, 3}, {6, 4}, 2);
  EXPECT_EQ(p.means_order, Ordering::equal);
  EXPECT_EQ(p.totals_order, Ordering::equal);
  EXPECT_EQ(p.mean_a.rational(), 1024);

  auto q = mz::probe_constant({5, 0}, {2, 2}, 2);
  EXPECT_EQ(q.mean_b.rational(), 16);
  EXPECT_EQ(q.mean_a.rational(), 32);
  EXPECT_EQ(q.totals_order, Ordering::less);

  auto r = mz::probe_constant({5, 0}, {2, 2}, Rational(1, 2));
  EXPECT_EQ(r.means_order, Ordering::greater);
  EXPECT_EQ(r.totals_order, Ordering::less);

  EXPECT_THROW(mz::probe_constant({1, 0}, {0, 1}, 1), mz::InputError);
  EXPECT_THROW(mz::probe_constant({1, 0}, {0, 1}, 0), mz::InputError);
}

TEST(Probe, StepVectors) {
  auto s = mz::probe_step_vectors({7, 3}, {6, 4}, 1000);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].at_w, Ordering::less);
  EXPECT_EQ(s[0].leading, Ordering::less);
  EXPECT_EQ(s[0].prefix_a, 7);
  EXPECT_EQ(s[0].prefix_b, 6);

  for (const auto& p : mz::probe_step_vectors({3, 1, 2}, {2, 3, 1}, 2)) {
    EXPECT_EQ(p.at_w, Ordering::equal);
    EXPECT_EQ(p.leading, Ordering::equal);
  }

  auto rev = mz::probe_step_vectors({2, 2, 2}, {3, 2, 1}, 10);
  EXPECT_EQ(rev[0].leading, Ordering::greater);
  EXPECT_EQ(rev[0].at_w, Ordering::greater);

  EXPECT_THROW(mz::probe_step_vectors({1, 0}, {0, 1}, 1), mz::InputError);
}

TEST(RadoProperty, WitnessForRandomNonMembers) {
  mz::testing::Rng rng(61);
  int built = 0;
  while (built < 60) {
    std::size_t n = mz::testing::uniform_size(rng, 2, 4);
    auto g = mz::testing::random_subgroup(rng, n);
    ExponentVector a(mz::testing::integer_vector(rng, n, 0, 6));
    ExponentVector b(mz::testing::integer_vector(rng, n, 0, 6));
    auto r = mz::membership(b.vec(), a.vec(), g);
    if (r.member()) continue;
    auto w = mz::build_rado_witness(r.separation(), a, b, g);
    EXPECT_EQ(mz::compare(w.lhs, w.rhs), Ordering::greater);
    EXPECT_FALSE(mz::check_rado_witness(w, a, b, g).has_value());
    ++built;
  }
}

TEST(RadoProperty, ProbesReconstructMajorization) {
  mz::testing::Rng rng(62);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = mz::testing::uniform_size(rng, 2, 4);
    ExponentVector a(mz::testing::integer_vector(rng, n, 0, 6));
    ExponentVector b(mz::testing::integer_vector(rng, n, 0, 6));
    // The probes say "b ⪯ a" when totals tie on constants and no step vector
    // ever has [x^b] > [x^a] for large w.
    auto up = mz::probe_constant(a, b, 2);
    bool dominated = up.totals_order == Ordering::equal;
    for (const auto& p : mz::probe_step_vectors(a, b, 1000)) dominated = dominated && p.at_w != Ordering::greater;
    EXPECT_EQ(dominated, mz::majorizes(a.vec(), b.vec()).majorized()) << mz::to_string(a.vec()) << mz::to_string(b.vec());
  }
}
