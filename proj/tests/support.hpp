#ifndef MAJORIZE_TESTS_SUPPORT_HPP
#define MAJORIZE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "majorize/majorize.hpp"

namespace majorize::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// p/q with 1 <= p <= max_num, 1 <= q <= max_den.
inline Rational positive_rational(Rng& rng, long long max_num = 9, long long max_den = 9) {
  return Rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

inline RVector integer_vector(Rng& rng, std::size_t n, long long lo, long long hi) {
  std::vector<Rational> c(n);
  for (auto& v : c) v = uniform(rng, lo, hi);
  return RVector(std::move(c));
}

inline RVector positive_vector(Rng& rng, std::size_t n) {
  std::vector<Rational> c(n);
  for (auto& v : c) v = positive_rational(rng);
  return RVector(std::move(c));
}

inline RVector nonconstant_positive_vector(Rng& rng, std::size_t n) {
  for (;;) {
    RVector x = positive_vector(rng, n);
    if (!is_constant(x)) return x;
  }
}

inline RVector shuffled(Rng& rng, const RVector& v) {
  std::vector<Rational> c(v.begin(), v.end());
  std::shuffle(c.begin(), c.end(), rng);
  return RVector(std::move(c));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

/// Integer pair with b ≺ a strictly, entries in [0, max]. b is produced from a
/// by one to three Robin Hood transfers of 0 < t < a_i - a_j, then shuffled.
inline std::pair<RVector, RVector> strict_integer_pair(Rng& rng, std::size_t n, long long max) {
  for (;;) {
    RVector a = integer_vector(rng, n, 0, max);
    std::vector<Rational> c(a.begin(), a.end());
    const long long transfers = uniform(rng, 1, 3);
    for (long long t = 0; t < transfers; ++t) {
      std::size_t i = uniform_size(rng, 0, n - 1), j = uniform_size(rng, 0, n - 1);
      if (c[i] < c[j]) std::swap(i, j);
      const Rational gap = c[i] - c[j];
      if (gap < 2) continue;
      const Rational amount = uniform(rng, 1, gap.convert_to<long long>() - 1);
      c[i] -= amount;
      c[j] += amount;
    }
    RVector b = shuffled(rng, RVector(std::move(c)));
    if (majorizes(a, b).strict()) return {a, b};
  }
}

/// One transfer of 0 < t < c_i - c_j from a larger to a smaller coordinate,
/// if some gap is at least 2.
inline std::optional<RVector> robin_hood(Rng& rng, const RVector& v) {
  std::vector<std::pair<std::size_t, std::size_t>> gaps;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i] - v[j] >= 2) gaps.emplace_back(i, j);
  if (gaps.empty()) return std::nullopt;
  auto [i, j] = gaps[uniform_size(rng, 0, gaps.size() - 1)];
  std::vector<Rational> c(v.begin(), v.end());
  const Rational gap = c[i] - c[j];
  const Rational amount = uniform(rng, 1, gap.convert_to<long long>() - 1);
  c[i] -= amount;
  c[j] += amount;
  return RVector(std::move(c));
}

/// Equal-total integer pair where b is not majorized by a.
inline std::pair<RVector, RVector> incomparable_integer_pair(Rng& rng, std::size_t n, long long max) {
  for (;;) {
    RVector a = integer_vector(rng, n, 0, max);
    RVector b = integer_vector(rng, n, 0, max);
    if (a.sum() != b.sum()) continue;
    if (majorizes(a, b).relation == Relation::incomparable) return {a, b};
  }
}

/// Subgroup of S_n generated by one or two random permutations.
inline PermGroup random_subgroup(Rng& rng, std::size_t n) {
  std::vector<Permutation> gens{random_permutation(rng, n)};
  if (uniform(rng, 0, 1) == 1) gens.push_back(random_permutation(rng, n));
  return generate_group(n, gens);
}

/// A point of K_G(a) with integral coordinates: a has entries in scale·{0..3}
/// and the convex weights are k/scale.
inline std::pair<RVector, RVector> integral_hull_point(Rng& rng, const PermGroup& group, long long scale) {
  const std::size_t n = group.degree();
  RVector a = integer_vector(rng, n, 0, 3);
  a = Rational(scale) * a;
  std::vector<long long> parts(group.order(), 0);
  for (long long k = 0; k < scale; ++k) ++parts[uniform_size(rng, 0, group.order() - 1)];
  std::vector<Rational> b(n, Rational(0));
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (parts[g] == 0) continue;
    RVector p = act_on_vector(group.elements()[g], a);
    for (std::size_t i = 0; i < n; ++i) b[i] += Rational(parts[g], scale) * p[i];
  }
  return {a, RVector(std::move(b))};
}

/// Decreasing positive rationals.
inline RVector decreasing_positive(Rng& rng, std::size_t n) {
  return decreasing_rearrangement(positive_vector(rng, n));
}

/// Valid multiplicative pair (u, v) with u != v.
inline std::pair<RVector, RVector> multiplicative_pair(Rng& rng, std::size_t n) {
  static const Rational factors[] = {Rational(1, 2), Rational(2, 3), Rational(1), Rational(1), Rational(3, 2),
                                     Rational(2)};
  for (;;) {
    RVector u = decreasing_positive(rng, n);
    std::vector<Rational> c(u.begin(), u.end());
    for (auto& v : c) v *= factors[uniform_size(rng, 0, 5)];
    RVector v = decreasing_rearrangement(RVector(std::move(c)));
    if (u == v) continue;
    if (check_prefix_products(u, v).ok) return {u, v};
  }
}

inline Rational schur_expression(const Rational& x, const Rational& y, const Rational& z, long long r) {
  return pow(x, r) * (x - y) * (x - z) + pow(y, r) * (y - x) * (y - z) + pow(z, r) * (z - x) * (z - y);
}

}  // namespace majorize::testing

#endif  // MAJORIZE_TESTS_SUPPORT_HPP
