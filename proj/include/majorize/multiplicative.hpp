#ifndef MAJORIZE_MULTIPLICATIVE_HPP
#define MAJORIZE_MULTIPLICATIVE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/vector.hpp"

namespace majorize {

struct PrefixProductCheck {
  bool ok;
  /// 1-based j of the first violation Π_{i<=j} v_i > Π_{i<=j} u_i.
  std::optional<std::size_t> failing_j;
};

namespace detail {

inline void require_positive_decreasing(const RVector& s, const char* name) {
  require(is_positive(s), std::string(name) + " must be strictly positive");
  require(is_decreasing(s), std::string(name) + " must be non-increasing");
}

}  // namespace detail

inline PrefixProductCheck check_prefix_products(const RVector& u, const RVector& v) {
  require_same_length(u, v, "check_prefix_products");
  detail::require_positive_decreasing(u, "u");
  detail::require_positive_decreasing(v, "v");
  Rational pu = 1, pv = 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    pu *= u[j];
    pv *= v[j];
    if (pv > pu) return {false, j + 1};
  }
  return {true, std::nullopt};
}

/// Decreasing positive u, v with Π_{i<=j} v_i <= Π_{i<=j} u_i for every j.
class MultiplicativePair {
public:
  MultiplicativePair(RVector u, RVector v) : u_(std::move(u)), v_(std::move(v)) {
    auto check = check_prefix_products(u_, v_);
    require(check.ok, "prefix-product dominance fails at j = " + std::to_string(check.failing_j.value_or(0)));
  }

  const RVector& u() const { return u_; }
  const RVector& v() const { return v_; }

  /// Smallest 1-based i0 with u_{i0} != v_{i0}, if any.
  std::optional<std::size_t> diverging_index() const {
    for (std::size_t i = 0; i < u_.size(); ++i)
      if (u_[i] != v_[i]) return i + 1;
    return std::nullopt;
  }

private:
  RVector u_;
  RVector v_;
};

/// (n+1)-th terms that equalise the full products, and a power-of-two scale
/// lifting all 2(n+1) terms above 1 so their logs are positive.
struct Augmentation {
  Rational u_next;
  Rational v_next;
  Rational lambda_scale;

  RVector augmented_u(const MultiplicativePair& p) const { return extend(p.u(), u_next); }
  RVector augmented_v(const MultiplicativePair& p) const { return extend(p.v(), v_next); }

private:
  static RVector extend(const RVector& s, const Rational& last) {
    std::vector<Rational> c(s.begin(), s.end());
    c.push_back(last);
    return RVector(std::move(c));
  }
};

inline Augmentation augment(const MultiplicativePair& pair) {
  const RVector& u = pair.u();
  const RVector& v = pair.v();
  const std::size_t n = u.size();
  Rational pu = 1, pv = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pu *= u[i];
    pv *= v[i];
  }
  Augmentation aug;
  aug.v_next = std::min(v[n - 1], u[n - 1]);
  aug.u_next = aug.v_next * (pv / pu);
  ensure(aug.u_next > 0 && aug.u_next <= aug.v_next, "augment: u_{n+1} outside (0, v_{n+1}]");
  ensure(pu * aug.u_next == pv * aug.v_next, "augment: full products differ");

  Rational smallest = std::min(aug.u_next, aug.v_next);
  for (std::size_t i = 0; i < n; ++i) smallest = std::min({smallest, u[i], v[i]});
  aug.lambda_scale = 1;
  while (aug.lambda_scale * smallest <= 1) aug.lambda_scale *= 2;
  return aug;
}

struct SumDominance {
  Rational sum_u;
  Rational sum_v;
  bool strict;  // sum_v < sum_u
  Augmentation augmentation;
  /// log(λ v_i) and log(λ u_i) over the augmented sequences; diagnostic only.
  std::vector<double> log_v;
  std::vector<double> log_u;
  /// log_v ⪯ log_u on prefix sums within 1e-9.
  bool log_majorized;
};

/// Σ v_i < Σ u_i, certified by exact summation. The log-majorization of the
/// augmented sequences is reported in binary64 for cross-checking.
inline SumDominance sum_dominance(const MultiplicativePair& pair) {
  require(!(pair.u() == pair.v()), "sum_dominance: u = v, no strict conclusion");
  SumDominance out{pair.u().sum(), pair.v().sum(), false, augment(pair), {}, {}, true};
  out.strict = out.sum_v < out.sum_u;

  const RVector au = out.augmentation.augmented_u(pair);
  const RVector av = out.augmentation.augmented_v(pair);
  for (std::size_t i = 0; i < au.size(); ++i) {
    out.log_u.push_back(std::log(to_double(out.augmentation.lambda_scale * au[i])));
    out.log_v.push_back(std::log(to_double(out.augmentation.lambda_scale * av[i])));
  }
  constexpr double tol = 1e-9;
  double su = 0.0, sv = 0.0;
  for (std::size_t i = 0; i < au.size(); ++i) {
    su += out.log_u[i];
    sv += out.log_v[i];
    if (sv > su + tol) out.log_majorized = false;
  }
  if (std::fabs(su - sv) > tol * std::max(1.0, std::fabs(su))) out.log_majorized = false;
  return out;
}

}  // namespace majorize

#endif  // MAJORIZE_MULTIPLICATIVE_HPP
