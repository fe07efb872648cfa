#ifndef MAJORIZE_VECTOR_HPP
#define MAJORIZE_VECTOR_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/rational.hpp"

namespace majorize {

/// Fixed-length vector of exact rationals (length >= 1).
class RVector {
public:
  explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    require(!coords_.empty(), "vectors must have at least one coordinate");
  }
  RVector(std::initializer_list<Rational> coords) : RVector(std::vector<Rational>(coords)) {}

  /// Convenience for tests and literals: every entry parsed with parse_rational.
  static RVector parse(std::initializer_list<std::string_view> texts) {
    std::vector<Rational> c;
    c.reserve(texts.size());
    for (auto t : texts) c.push_back(parse_rational(t));
    return RVector(std::move(c));
  }

  static RVector constant(std::size_t n, const Rational& value) {
    require(n >= 1, "vectors must have at least one coordinate");
    return RVector(std::vector<Rational>(n, value));
  }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Rational sum() const { return std::accumulate(coords_.begin(), coords_.end(), Rational(0)); }

  std::vector<Rational> prefix_sums() const {
    std::vector<Rational> out(coords_.size());
    std::partial_sum(coords_.begin(), coords_.end(), out.begin());
    return out;
  }

  bool all_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return is_integral(r); });
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(to_double(c));
    return out;
  }

  friend bool operator==(const RVector&, const RVector&) = default;
  friend bool operator<(const RVector& a, const RVector& b) { return a.coords_ < b.coords_; }

private:
  std::vector<Rational> coords_;
};

inline void require_same_length(const RVector& u, const RVector& v, std::string_view what) {
  if (u.size() != v.size())
    throw InputError(std::string(what) + ": length mismatch (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
}

inline RVector operator-(const RVector& u, const RVector& v) {
  require_same_length(u, v, "subtract");
  std::vector<Rational> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return RVector(std::move(out));
}

inline RVector operator*(const Rational& s, const RVector& v) {
  std::vector<Rational> out(v.begin(), v.end());
  for (auto& c : out) c *= s;
  return RVector(std::move(out));
}

inline Rational dot(const RVector& u, const RVector& v) {
  require_same_length(u, v, "dot");
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

inline std::string to_string(const RVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

/// Indices that sort v non-increasingly; ties keep their original order.
inline std::vector<std::size_t> decreasing_order(const RVector& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
  return idx;
}

inline RVector decreasing_rearrangement(const RVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto i : decreasing_order(v)) out.push_back(v[i]);
  return RVector(std::move(out));
}

inline bool is_decreasing(const RVector& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

inline bool is_constant(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& c) { return c == v[0]; });
}
inline bool is_nonnegative(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c >= 0; });
}
inline bool is_positive(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c > 0; });
}

inline std::size_t hamming_distance(const RVector& u, const RVector& v) {
  require_same_length(u, v, "hamming_distance");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

enum class Relation {
  equal,                 // a↓ == b↓
  strict_major,          // b ≺ a
  weak_only_equal_case,  // reserved; never produced (weak majorization with equal totals is equal or strict)
  incomparable,          // totals agree but some prefix of b↓ exceeds a↓
  sum_mismatch,
};

inline std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::strict_major: return "strict_major";
    case Relation::weak_only_equal_case: return "weak_only_equal_case";
    case Relation::incomparable: return "incomparable";
    case Relation::sum_mismatch: return "sum_mismatch";
  }
  return "?";
}

struct MajorizationVerdict {
  Relation relation;
  /// 1-based prefix length k of the first violated inequality (incomparable only).
  std::optional<std::size_t> failing_prefix;

  /// b ⪯ a (strict or equal).
  bool majorized() const { return relation == Relation::strict_major || relation == Relation::equal; }
  bool strict() const { return relation == Relation::strict_major; }
};

/// Decides whether a majorizes b, i.e. b ⪯ a, on decreasing rearrangements.
inline MajorizationVerdict majorizes(const RVector& a, const RVector& b) {
  require_same_length(a, b, "majorizes");
  const RVector ad = decreasing_rearrangement(a);
  const RVector bd = decreasing_rearrangement(b);
  if (ad.sum() != bd.sum()) return {Relation::sum_mismatch, std::nullopt};
  if (ad == bd) return {Relation::equal, std::nullopt};
  Rational pa = 0, pb = 0;
  for (std::size_t k = 0; k + 1 < ad.size(); ++k) {
    pa += ad[k];
    pb += bd[k];
    if (pb > pa) return {Relation::incomparable, k + 1};
  }
  return {Relation::strict_major, std::nullopt};
}

}  // namespace majorize

#endif  // MAJORIZE_VECTOR_HPP
