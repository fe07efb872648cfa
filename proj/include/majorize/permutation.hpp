#ifndef MAJORIZE_PERMUTATION_HPP
#define MAJORIZE_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/vector.hpp"

namespace majorize {

inline constexpr std::size_t kDefaultGroupCap = 50'000;
inline constexpr std::size_t kDefaultMaxSymmetricDegree = 8;

/// A bijection of {0..n-1} in one-line image form: images()[j] = σ(j).
/// External formats (cycle strings, JSON) are 1-based.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    require(!images_.empty(), "permutation degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      require(v < images_.size() && !seen[v], "images do not form a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return Permutation(std::move(img));
  }

  /// Transposition swapping 0-based points j and k.
  static Permutation transposition(std::size_t n, std::size_t j, std::size_t k) {
    require(j < n && k < n, "transposition point out of range");
    auto p = identity(n);
    std::swap(p.images_[j], p.images_[k]);
    return p;
  }

  /// Parses disjoint-cycle notation with 1-based points: "(1,2,3)(4,5)", or "e" for the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t j) const { return images_[j]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != j) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    return Permutation(std::move(inv));
  }

  /// Canonical cycle string: each cycle starts at its smallest point, cycles
  /// ordered by that point, fixed points omitted, "e" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (done[start] || images_[start] == start) continue;
      out += '(';
      std::size_t j = start;
      bool first = true;
      do {
        if (!first) out += ',';
        out += std::to_string(j + 1);
        done[j] = true;
        first = false;
        j = images_[j];
      } while (j != start);
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

private:
  std::vector<std::size_t> images_;
};

/// στ, i.e. (στ)(j) = σ(τ(j)); P_σ P_τ = P_{στ}.
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  require(sigma.degree() == tau.degree(), "compose: degree mismatch");
  std::vector<std::size_t> img(sigma.degree());
  for (std::size_t j = 0; j < img.size(); ++j) img[j] = sigma(tau(j));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

/// σx with (σx)_j = x_{σ⁻¹(j)}, equivalently P_σ x.
inline RVector act_on_vector(const Permutation& sigma, const RVector& x) {
  require(sigma.degree() == x.size(), "act_on_vector: degree mismatch");
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[sigma(i)] = x[i];
  return RVector(std::move(out));
}

/// Entry (i, j) of P_σ is 1 iff i = σ(j).
struct PermutationMatrix {
  Permutation sigma;
  int entry(std::size_t i, std::size_t j) const { return sigma(j) == i ? 1 : 0; }
};

inline Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  const std::string shown(text);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  require(n >= 1, "permutation degree must be at least 1");
  auto img = identity(n).images_;
  if (s == "e" || s == "()" || s.empty()) return identity(n);

  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  while (pos < s.size()) {
    require(s[pos] == '(', "expected '(' in cycle notation '" + shown + "'");
    auto close = s.find(')', pos);
    require(close != std::string::npos, "unbalanced parentheses in '" + shown + "'");
    std::vector<std::size_t> cycle;
    std::string_view body(s.data() + pos + 1, close - pos - 1);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto tok = body.substr(0, comma);
      require(detail::all_digits(tok) && tok.size() < 10, "bad point '" + std::string(tok) + "' in '" + shown + "'");
      std::size_t point = std::stoul(std::string(tok));
      require(point >= 1 && point <= n,
              "point " + std::to_string(point) + " out of range 1.." + std::to_string(n) + " in '" + shown + "'");
      require(!used[point - 1], "cycles are not disjoint in '" + shown + "'");
      used[point - 1] = true;
      cycle.push_back(point - 1);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      require(!body.empty(), "trailing comma in '" + shown + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

/// A finite subgroup of S_n. Elements are kept sorted by image vector, so the
/// identity comes first and iteration order is reproducible.
class PermGroup {
public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
  }

  /// Index of p in elements(), or order() when absent.
  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return elements_.size();
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// Trusts its input; use generate_group for closure.
  static PermGroup from_sorted_elements(std::size_t n, std::vector<Permutation> elements) {
    PermGroup g;
    g.degree_ = n;
    g.elements_ = std::move(elements);
    return g;
  }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Breadth-first closure of the generators (plus the identity) under composition.
inline PermGroup generate_group(std::size_t n, const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultGroupCap) {
  require(n >= 1, "group degree must be at least 1");
  require(cap >= 1, "group cap must be positive");
  for (const auto& g : generators) require(g.degree() == n, "generator degree does not match n");

  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation h = compose(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw InputError("group order exceeds cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(h));
      }
    }
  }
  return PermGroup::from_sorted_elements(n, std::vector<Permutation>(seen.begin(), seen.end()));
}

inline PermGroup full_symmetric_group(std::size_t n, std::size_t max_degree = kDefaultMaxSymmetricDegree) {
  require(n >= 1, "group degree must be at least 1");
  require(n <= max_degree,
          "S_" + std::to_string(n) + " exceeds the maximum degree " + std::to_string(max_degree));
  std::vector<Permutation> elements;
  auto img = Permutation::identity(n).images();
  do {
    elements.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_sorted_elements(n, std::move(elements));
}

/// Group spec: "S" (full S_n), "e" (trivial), or generators in cycle
/// notation separated by ';', e.g. "(1,2);(1,2,3)".
inline PermGroup parse_group(std::string_view text, std::size_t n, std::size_t cap = kDefaultGroupCap) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "S" || s == "S_n" || s == "S" + std::to_string(n) || s == "S_" + std::to_string(n)) {
    std::size_t order = 1;
    for (std::size_t i = 2; i <= n && order <= cap; ++i) order *= i;
    require(order <= cap, "group order exceeds cap of " + std::to_string(cap) + " elements");
    return full_symmetric_group(n);
  }
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    auto piece = std::string_view(s).substr(start, end - start);
    require(!piece.empty() || s.empty(), "empty generator in group spec '" + std::string(text) + "'");
    gens.push_back(Permutation::parse_cycles(piece, n));
    start = end + 1;
  }
  return generate_group(n, gens, cap);
}

}  // namespace majorize

#endif  // MAJORIZE_PERMUTATION_HPP
