#ifndef MAJORIZE_PERMUTOHEDRON_HPP
#define MAJORIZE_PERMUTOHEDRON_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/permutation.hpp"
#include "majorize/simplex.hpp"
#include "majorize/vector.hpp"

namespace majorize {

/// b = Σ t_γ γa with t_γ > 0, Σ t_γ = 1. Zero weights are omitted.
struct MembershipCertificate {
  std::vector<std::pair<Permutation, Rational>> weights;
};

/// ⟨u, γa⟩ <= c for all γ ∈ G and ⟨u, b⟩ >= c + margin, margin > 0.
struct SeparationCertificate {
  RVector u;
  Rational c;
  Rational margin;
};

struct MembershipOptions {
  /// The Rado setting assumes nonnegative exponent vectors; the geometry does not.
  bool require_nonnegative = true;
};

class MembershipResult {
public:
  explicit MembershipResult(MembershipCertificate m) : value_(std::move(m)) {}
  explicit MembershipResult(SeparationCertificate s) : value_(std::move(s)) {}

  bool member() const { return std::holds_alternative<MembershipCertificate>(value_); }
  const MembershipCertificate& weights() const { return std::get<MembershipCertificate>(value_); }
  const SeparationCertificate& separation() const { return std::get<SeparationCertificate>(value_); }

private:
  std::variant<MembershipCertificate, SeparationCertificate> value_;
};

struct OrbitPoint {
  RVector point;
  /// Lexicographically smallest γ ∈ G with γa = point.
  Permutation representative;
};

/// Distinct points of {γa : γ ∈ G}, in first-occurrence order over the sorted group.
inline std::vector<OrbitPoint> orbit_points(const RVector& a, const PermGroup& group) {
  require(group.degree() == a.size(), "orbit: group degree does not match vector length");
  std::vector<OrbitPoint> out;
  std::map<RVector, std::size_t> seen;
  for (const auto& gamma : group) {
    RVector p = act_on_vector(gamma, a);
    if (seen.emplace(p, out.size()).second) out.push_back({std::move(p), gamma});
  }
  return out;
}

inline std::vector<RVector> orbit(const RVector& a, const PermGroup& group) {
  std::vector<RVector> out;
  for (auto& p : orbit_points(a, group)) out.push_back(std::move(p.point));
  return out;
}

inline std::optional<std::string> check_membership(const MembershipCertificate& cert, const RVector& a,
                                                   const RVector& b, const PermGroup& group) {
  if (a.size() != b.size()) return "length mismatch";
  Rational total = 0;
  std::vector<Rational> combo(a.size(), Rational(0));
  for (const auto& [gamma, t] : cert.weights) {
    if (!group.contains(gamma)) return "weight on " + gamma.to_cycle_string() + " which is not in G";
    if (t < 0) return "negative weight on " + gamma.to_cycle_string();
    total += t;
    RVector p = act_on_vector(gamma, a);
    for (std::size_t i = 0; i < p.size(); ++i) combo[i] += t * p[i];
  }
  if (total != 1) return "weights sum to " + to_string(total) + ", not 1";
  if (!(RVector(combo) == b)) return "weighted orbit combination " + to_string(RVector(combo)) + " != b";
  return std::nullopt;
}

inline std::optional<std::string> check_separation(const SeparationCertificate& cert, const RVector& a,
                                                   const RVector& b, const PermGroup& group) {
  if (cert.u.size() != a.size() || b.size() != a.size()) return "length mismatch";
  if (std::all_of(cert.u.begin(), cert.u.end(), [](const Rational& v) { return v == 0; })) return "u is zero";
  if (cert.margin <= 0) return "margin is not positive";
  for (const auto& p : orbit_points(a, group))
    if (dot(cert.u, p.point) > cert.c)
      return "orbit point " + to_string(p.point) + " violates <u, x> <= c";
  if (dot(cert.u, b) < cert.c + cert.margin) return "<u, b> < c + margin";
  return std::nullopt;
}

namespace detail {

/// Centres u when totals agree, sets c to the orbit maximum, then scales
/// (u, c, margin) to coprime integers.
inline SeparationCertificate normalize_separation(std::vector<Rational> u, const RVector& a, const RVector& b,
                                                  const std::vector<OrbitPoint>& points) {
  const std::size_t n = u.size();
  if (a.sum() == b.sum()) {
    Rational mean = 0;
    for (const auto& v : u) mean += v;
    mean /= static_cast<unsigned long long>(n);
    for (auto& v : u) v -= mean;
  }
  RVector uv(u);
  Rational c = dot(uv, points.front().point);
  for (const auto& p : points) c = std::max(c, dot(uv, p.point));
  Rational margin = dot(uv, b) - c;
  ensure(margin > 0, "separation: non-positive margin after normalisation");

  Integer scale = den(c);
  scale = lcm(scale, den(margin));
  for (const auto& v : u) scale = lcm(scale, den(v));
  Integer g = num(abs(c * scale));
  g = gcd(g, num(margin * scale));
  for (const auto& v : u) g = gcd(g, num(abs(v * scale)));
  Rational factor(scale, g);
  for (auto& v : u) v *= factor;
  return {RVector(std::move(u)), c * factor, margin * factor};
}

}  // namespace detail

/// Decides b ∈ K_G(a) = conv{γa : γ ∈ G} by exact LP over the distinct orbit
/// points. Returns convex weights or a hyperplane separating b from the
/// hull; either certificate is re-verified before it is returned.
inline MembershipResult membership(const RVector& b, const RVector& a, const PermGroup& group,
                                   const MembershipOptions& options = {}) {
  require_same_length(a, b, "membership");
  require(group.degree() == a.size(), "membership: group degree does not match vector length");
  if (options.require_nonnegative)
    require(is_nonnegative(a) && is_nonnegative(b), "membership: vectors must be nonnegative");

  const std::size_t n = a.size();
  auto points = orbit_points(a, group);

  // Row 0: Σ t = 1. Rows 1..n: Σ t_p p_i = b_i.
  std::vector<std::vector<Rational>> columns;
  columns.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> col(n + 1);
    col[0] = 1;
    for (std::size_t i = 0; i < n; ++i) col[i + 1] = p.point[i];
    columns.push_back(std::move(col));
  }
  std::vector<Rational> rhs(n + 1);
  rhs[0] = 1;
  for (std::size_t i = 0; i < n; ++i) rhs[i + 1] = b[i];

  auto lp = solve_feasibility(columns, rhs);
  if (lp.feasible) {
    MembershipCertificate cert;
    for (std::size_t p = 0; p < points.size(); ++p)
      if (lp.solution[p] != 0) cert.weights.emplace_back(points[p].representative, lp.solution[p]);
    std::sort(cert.weights.begin(), cert.weights.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    auto problem = check_membership(cert, a, b, group);
    ensure(!problem, "membership certificate failed re-verification: " + problem.value_or(""));
    return MembershipResult(std::move(cert));
  }

  std::vector<Rational> u(lp.farkas.begin() + 1, lp.farkas.end());
  auto cert = detail::normalize_separation(std::move(u), a, b, points);
  auto problem = check_separation(cert, a, b, group);
  ensure(!problem, "separation certificate failed re-verification: " + problem.value_or(""));
  return MembershipResult(std::move(cert));
}

/// b ∈ K_{S_n}(a) via b ⪯ a. Only valid for the full symmetric group.
inline bool membership_via_majorization(const RVector& b, const RVector& a) {
  require_same_length(a, b, "membership_via_majorization");
  require(is_nonnegative(a) && is_nonnegative(b), "membership_via_majorization: vectors must be nonnegative");
  return majorizes(a, b).majorized();
}

}  // namespace majorize

#endif  // MAJORIZE_PERMUTOHEDRON_HPP
