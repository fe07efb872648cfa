#ifndef MAJORIZE_RADO_HPP
#define MAJORIZE_RADO_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/monomial.hpp"
#include "majorize/permutation.hpp"
#include "majorize/permutohedron.hpp"
#include "majorize/vector.hpp"

namespace majorize {

/// Positive point x with x_i = M^{u_i} on which [x^b]_G > [x^a]_G.
struct RadoWitness {
  SeparationCertificate certificate;  // with integral u
  Integer M;
  RVector x;
  MeanValue lhs;  // [x^b]_G
  MeanValue rhs;  // [x^a]_G
};

namespace detail {

/// floor(value^(1/p)) for value >= 0, p >= 1.
inline Integer integer_root(const Integer& value, unsigned p) {
  if (value < 2 || p == 1) return value;
  Integer lo = 1, hi = 2;
  while (pow(hi, p) <= value) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pow(mid, p) <= value)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline unsigned small_unsigned(const Integer& v, const char* what) {
  require(v >= 0 && v <= 1'000'000, std::string(what) + " is too large");
  return v.convert_to<unsigned>();
}

}  // namespace detail

/// Smallest integer M >= 2 with M^margin > order, decided exactly as
/// M^p > order^q for margin = p/q.
inline Integer rado_scale(const Rational& margin, std::size_t order) {
  require(margin > 0, "rado_scale: margin must be positive");
  const unsigned p = detail::small_unsigned(num(margin), "margin numerator");
  const unsigned q = detail::small_unsigned(den(margin), "margin denominator");
  Integer bound = pow(Integer(static_cast<unsigned long long>(order)), q);
  Integer m = detail::integer_root(bound, p) + 1;
  return m < 2 ? Integer(2) : m;
}

/// Turns a hyperplane separating b from K_G(a) into an explicit positive x
/// with [x^b]_G > [x^a]_G. Means are exact when a and b are integral and
/// binary64 otherwise.
inline RadoWitness build_rado_witness(const SeparationCertificate& cert, const ExponentVector& a,
                                      const ExponentVector& b, const PermGroup& group,
                                      const FloatTolerance& tol = {}) {
  require_same_length(a.vec(), b.vec(), "build_rado_witness");
  auto problem = check_separation(cert, a.vec(), b.vec(), group);
  require(!problem, "build_rado_witness: certificate fails re-verification: " + problem.value_or(""));

  SeparationCertificate scaled = cert;
  Integer common = 1;
  for (const auto& v : cert.u) common = lcm(common, den(v));
  if (common != 1) {
    Rational f(common);
    scaled = {f * cert.u, cert.c * f, cert.margin * f};
  }

  Integer m = rado_scale(scaled.margin, group.order());
  std::vector<Rational> xs;
  xs.reserve(scaled.u.size());
  for (const auto& ui : scaled.u) xs.push_back(pow(Rational(m), to_exponent(ui)));
  RVector x(std::move(xs));

  const MeanMode mode = a.all_integral() && b.all_integral() ? MeanMode::exact : MeanMode::float_;
  auto cmp = compare_means(x, a, b, group, mode, tol);
  ensure(cmp.order == Ordering::greater,
         "build_rado_witness: [x^b]_G > [x^a]_G failed (" + cmp.lhs.str() + " vs " + cmp.rhs.str() + ")");
  return {std::move(scaled), std::move(m), std::move(x), std::move(cmp.lhs), std::move(cmp.rhs)};
}

/// Re-checks a witness from its stored data only.
inline std::optional<std::string> check_rado_witness(const RadoWitness& w, const ExponentVector& a,
                                                     const ExponentVector& b, const PermGroup& group,
                                                     const FloatTolerance& tol = {}) {
  if (auto p = check_separation(w.certificate, a.vec(), b.vec(), group)) return "certificate: " + *p;
  if (!w.certificate.u.all_integral()) return "u is not integral";
  if (w.M < 2) return "M < 2";
  const unsigned p = detail::small_unsigned(num(w.certificate.margin), "margin numerator");
  const unsigned q = detail::small_unsigned(den(w.certificate.margin), "margin denominator");
  if (!(pow(w.M, p) > pow(Integer(static_cast<unsigned long long>(group.order())), q))) return "M^margin <= |G|";
  if (w.x.size() != a.size()) return "x has wrong length";
  for (std::size_t i = 0; i < w.x.size(); ++i)
    if (w.x[i] != pow(Rational(w.M), to_exponent(w.certificate.u[i]))) return "x_i != M^{u_i}";
  const MeanMode mode = a.all_integral() && b.all_integral() ? MeanMode::exact : MeanMode::float_;
  auto cmp = compare_means(w.x, a, b, group, mode, tol);
  if (cmp.order != Ordering::greater) return "[x^b]_G is not greater than [x^a]_G";
  return std::nullopt;
}

struct ConstantProbe {
  MeanValue mean_b;        // [w^b] = w^{Σb}
  MeanValue mean_a;        // [w^a] = w^{Σa}
  Ordering means_order;    // mean_b vs mean_a
  Ordering totals_order;   // Σb vs Σa implied by means_order
};

namespace detail {

inline MeanValue power_of(const Rational& w, const Rational& exponent) {
  if (is_integral(exponent)) return MeanValue(pow(w, to_exponent(exponent)));
  return MeanValue(std::pow(to_double(w), to_double(exponent)));
}

}  // namespace detail

/// Evaluates both means on the constant vector (w, ..., w) and reads off the
/// order of the totals: same direction for w > 1, reversed for w < 1.
inline ConstantProbe probe_constant(const ExponentVector& a, const ExponentVector& b, const Rational& w,
                                    const FloatTolerance& tol = {}) {
  require_same_length(a.vec(), b.vec(), "probe_constant");
  require(w > 0, "probe_constant: w must be positive");
  require(w != 1, "probe_constant: w = 1 carries no information");
  MeanValue mb = detail::power_of(w, b.vec().sum());
  MeanValue ma = detail::power_of(w, a.vec().sum());
  Ordering order = compare(mb, ma, tol);
  return {mb, ma, order, w > 1 ? order : reverse(order)};
}

struct StepProbe {
  std::size_t k;       // number of leading w's
  MeanValue mean_b;
  MeanValue mean_a;
  Ordering at_w;       // mean_b vs mean_a at the given w
  Rational prefix_b;   // Σ_{i<=k} b↓_i, exponent of the leading power of w
  Rational prefix_a;
  Ordering leading;    // prefix_b vs prefix_a: the order as w -> ∞
};

/// For k = 1..n-1 evaluates [w_k^b] and [w_k^a] on w_k = (w, ..., w, 1, ..., 1)
/// with k leading w's, and reports the leading-power comparison.
inline std::vector<StepProbe> probe_step_vectors(const ExponentVector& a, const ExponentVector& b, const Rational& w,
                                                 const FloatTolerance& tol = {}) {
  require_same_length(a.vec(), b.vec(), "probe_step_vectors");
  require(w > 1, "probe_step_vectors: w must exceed 1");
  const std::size_t n = a.size();
  const ExponentVector ad(decreasing_rearrangement(a.vec()));
  const ExponentVector bd(decreasing_rearrangement(b.vec()));
  const PermGroup sn = full_symmetric_group(n);
  const MeanMode mode = ad.all_integral() && bd.all_integral() ? MeanMode::exact : MeanMode::float_;

  std::vector<StepProbe> out;
  Rational pa = 0, pb = 0;
  for (std::size_t k = 1; k < n; ++k) {
    pa += ad[k - 1];
    pb += bd[k - 1];
    std::vector<Rational> coords(n, Rational(1));
    for (std::size_t i = 0; i < k; ++i) coords[i] = w;
    RVector wk(std::move(coords));
    auto cmp = compare_means(wk, ad, bd, sn, mode, tol);
    out.push_back({k, std::move(cmp.lhs), std::move(cmp.rhs), cmp.order, pb, pa, compare_exact(pb, pa)});
  }
  return out;
}

}  // namespace majorize

#endif  // MAJORIZE_RADO_HPP
