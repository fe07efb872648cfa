#ifndef MAJORIZE_MONOMIAL_HPP
#define MAJORIZE_MONOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/permutation.hpp"
#include "majorize/vector.hpp"

namespace majorize {

/// Nonnegative exponent vector a of a monomial x^a.
class ExponentVector {
public:
  explicit ExponentVector(RVector a) : a_(std::move(a)) {
    require(is_nonnegative(a_), "exponent vector " + to_string(a_) + " has a negative coordinate");
  }
  ExponentVector(std::initializer_list<Rational> a) : ExponentVector(RVector(a)) {}

  const RVector& vec() const { return a_; }
  operator const RVector&() const { return a_; }
  std::size_t size() const { return a_.size(); }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  bool all_integral() const { return a_.all_integral(); }

private:
  RVector a_;
};

enum class MeanMode { exact, float_ };

inline std::string_view mode_name(MeanMode m) { return m == MeanMode::exact ? "exact" : "float"; }

/// Comparison tolerance used in float mode.
struct FloatTolerance {
  double relative = 1e-9;
  double absolute = 1e-12;
};

/// Shortest round-trip decimal for a double.
inline std::string format_double(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

/// Value of a symmetric mean: exact rational or binary64.
class MeanValue {
public:
  explicit MeanValue(Rational v) : value_(std::move(v)) {}
  explicit MeanValue(double v) : value_(v) {}

  MeanMode mode() const { return std::holds_alternative<Rational>(value_) ? MeanMode::exact : MeanMode::float_; }
  bool is_exact() const { return mode() == MeanMode::exact; }
  const Rational& rational() const {
    require(is_exact(), "mean value is not exact");
    return std::get<Rational>(value_);
  }
  double approx() const { return is_exact() ? to_double(std::get<Rational>(value_)) : std::get<double>(value_); }
  std::string str() const { return is_exact() ? to_string(std::get<Rational>(value_)) : format_double(approx()); }

private:
  std::variant<Rational, double> value_;
};

enum class Ordering { less, equal, greater };

inline std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

inline Ordering reverse(Ordering o) {
  return o == Ordering::less ? Ordering::greater : o == Ordering::greater ? Ordering::less : Ordering::equal;
}

template <class T>
Ordering compare_exact(const T& lhs, const T& rhs) {
  return lhs < rhs ? Ordering::less : rhs < lhs ? Ordering::greater : Ordering::equal;
}

inline Ordering compare_float(double lhs, double rhs, const FloatTolerance& tol) {
  double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  if (std::fabs(lhs - rhs) <= std::max(tol.relative * scale, tol.absolute)) return Ordering::equal;
  return lhs < rhs ? Ordering::less : Ordering::greater;
}

/// Exact when both sides are exact, otherwise tolerance-based on binary64.
inline Ordering compare(const MeanValue& lhs, const MeanValue& rhs, const FloatTolerance& tol = {}) {
  if (lhs.is_exact() && rhs.is_exact()) return compare_exact(lhs.rational(), rhs.rational());
  return compare_float(lhs.approx(), rhs.approx(), tol);
}

namespace detail {

inline void check_mean_inputs(const RVector& x, const ExponentVector& a, MeanMode mode) {
  require_same_length(x, a.vec(), "monomial");
  require(is_positive(x), "base vector " + to_string(x) + " must be strictly positive");
  if (mode == MeanMode::exact)
    require(a.all_integral(), "exact mode requires integral exponents, got " + to_string(a.vec()));
}

/// Neumaier-compensated sum in the given order.
class CompensatedSum {
public:
  void add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Σ_{σ∈G} Π_i x_{σ(i)}^{a_i} over exact rationals. x is rewritten over a
/// common denominator D as x_j = P_j / D so the inner loop is integer-only.
inline Rational exact_orbit_sum(const RVector& x, const ExponentVector& a, const PermGroup& group) {
  const std::size_t n = x.size();
  Integer common = 1;
  for (const auto& c : x) common = lcm(common, den(c));
  std::vector<Integer> scaled(n);
  for (std::size_t j = 0; j < n; ++j) scaled[j] = num(x[j] * common);

  std::vector<unsigned> exps(n);
  unsigned total = 0;
  std::map<unsigned, std::size_t> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = to_exponent(a[i]);
    require(e <= 1'000'000, "exponent too large for exact evaluation");
    exps[i] = static_cast<unsigned>(e);
    total += exps[i];
    distinct.emplace(exps[i], 0);
  }
  std::size_t slot = 0;
  for (auto& [e, idx] : distinct) idx = slot++;

  // powers[j][slot(e)] = P_j^e
  std::vector<std::vector<Integer>> powers(n, std::vector<Integer>(distinct.size()));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [e, idx] : distinct) powers[j][idx] = pow(scaled[j], e);
  std::vector<std::size_t> slot_of(n);
  for (std::size_t i = 0; i < n; ++i) slot_of[i] = distinct.at(exps[i]);

  Integer sum = 0;
  Integer term;
  for (const auto& sigma : group) {
    term = powers[sigma(0)][slot_of[0]];
    for (std::size_t i = 1; i < n; ++i) term *= powers[sigma(i)][slot_of[i]];
    sum += term;
  }
  return Rational(sum, pow(common, total));
}

inline double float_orbit_sum(const RVector& x, const ExponentVector& a, const PermGroup& group) {
  const std::size_t n = x.size();
  std::vector<double> logs(n), exps(n);
  for (std::size_t j = 0; j < n; ++j) logs[j] = std::log(to_double(x[j]));
  for (std::size_t i = 0; i < n; ++i) exps[i] = to_double(a[i]);
  CompensatedSum sum;
  for (const auto& sigma : group) {
    double log_term = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (exps[i] != 0.0) log_term += exps[i] * logs[sigma(i)];
    sum.add(std::exp(log_term));
  }
  return sum.value();
}

}  // namespace detail

/// x^a = x_1^{a_1} ... x_n^{a_n}.
inline MeanValue monomial_eval(const RVector& x, const ExponentVector& a, MeanMode mode) {
  detail::check_mean_inputs(x, a, mode);
  auto trivial = PermGroup::from_sorted_elements(x.size(), {Permutation::identity(x.size())});
  if (mode == MeanMode::exact) return MeanValue(detail::exact_orbit_sum(x, a, trivial));
  return MeanValue(detail::float_orbit_sum(x, a, trivial));
}

/// [x^a]_G = (1/|G|) Σ_{σ∈G} x_{σ(1)}^{a_1} ... x_{σ(n)}^{a_n}.
///
/// Exact mode needs integral exponents and returns a canonical rational. Float
/// mode accepts rational exponents; terms are summed in group-element order
/// with compensation, so results are reproducible run to run.
inline MeanValue symmetric_mean(const RVector& x, const ExponentVector& a, const PermGroup& group, MeanMode mode) {
  detail::check_mean_inputs(x, a, mode);
  require(group.degree() == x.size(), "group degree does not match vector length");
  if (mode == MeanMode::exact)
    return MeanValue(detail::exact_orbit_sum(x, a, group) / Rational(static_cast<unsigned long long>(group.order())));
  return MeanValue(detail::float_orbit_sum(x, a, group) / static_cast<double>(group.order()));
}

struct MeanComparison {
  Ordering order;  // [x^b]_G compared with [x^a]_G
  MeanValue lhs;   // [x^b]_G
  MeanValue rhs;   // [x^a]_G
};

/// Compares [x^b]_G against [x^a]_G: "less" is the Muirhead direction.
inline MeanComparison compare_means(const RVector& x, const ExponentVector& a, const ExponentVector& b,
                                    const PermGroup& group, MeanMode mode, const FloatTolerance& tol = {}) {
  require_same_length(a.vec(), b.vec(), "compare_means");
  MeanValue lhs = symmetric_mean(x, b, group, mode);
  MeanValue rhs = symmetric_mean(x, a, group, mode);
  Ordering order = compare(lhs, rhs, tol);
  return {order, std::move(lhs), std::move(rhs)};
}

struct AmGmCertificate {
  RVector c;     // a - b, Σc = 0
  bool nonzero;  // some c_i != 0
};

inline AmGmCertificate amgm_certificate(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a.vec(), b.vec(), "amgm_certificate");
  require(a.vec().sum() == b.vec().sum(), "amgm_certificate: totals differ (" + to_string(a.vec().sum()) + " vs " +
                                              to_string(b.vec().sum()) + ")");
  RVector c = a.vec() - b.vec();
  bool nonzero = std::any_of(c.begin(), c.end(), [](const Rational& v) { return v != 0; });
  return {std::move(c), nonzero};
}

}  // namespace majorize

#endif  // MAJORIZE_MONOMIAL_HPP
