#ifndef MAJORIZE_CHAIN_HPP
#define MAJORIZE_CHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/matrix.hpp"
#include "majorize/permutation.hpp"
#include "majorize/vector.hpp"

namespace majorize {

/// One Robin Hood transfer between coordinates j < k of a decreasing vector.
/// Before the move c_j = rho + Delta, c_k = rho - Delta; after it
/// c_j = rho + delta, c_k = rho - delta, with 0 <= delta < Delta.
struct TransferStep {
  std::size_t j;
  std::size_t k;
  Rational rho;
  Rational Delta;
  Rational delta;
  Rational lambda;  // (Delta + delta) / (2 Delta), weight of the identity in the T-transform
};

/// a↓ = c_0 ≻ c_1 ≻ ... ≻ c_r = b↓, consecutive vectors at Hamming distance 2.
struct MajorizationChain {
  std::vector<RVector> vectors;
  std::vector<TransferStep> steps;

  std::size_t length() const { return steps.size(); }
};

/// Builds a strict majorization chain from a↓ down to b↓.
///
/// Each step takes k = first index with c_k < b_k and j = last index before k
/// with c_j > b_j; coordinates strictly between them already agree with b↓.
/// Moving min(c_j - b_j, b_k - c_k) from j to k keeps c decreasing, so no
/// re-sorting happens and the Hamming distance between consecutive sorted
/// vectors is exactly 2. Every step settles at least one coordinate, hence at
/// most n - 1 steps.
inline MajorizationChain build_chain(const RVector& a, const RVector& b) {
  require_same_length(a, b, "build_chain");
  require(is_nonnegative(a) && is_nonnegative(b), "build_chain: vectors must be nonnegative");
  auto verdict = majorizes(a, b);
  require(verdict.strict(), std::string("build_chain: b is not strictly majorized by a (relation ") +
                                std::string(relation_name(verdict.relation)) + ")");

  const RVector target = decreasing_rearrangement(b);
  RVector current = decreasing_rearrangement(a);
  const std::size_t n = a.size();
  MajorizationChain chain;
  chain.vectors.push_back(current);

  while (!(current == target)) {
    ensure(chain.steps.size() < n, "build_chain: step bound exceeded");
    std::size_t k = 0;
    while (k < n && current[k] >= target[k]) ++k;
    ensure(k < n, "build_chain: no deficit coordinate");
    std::optional<std::size_t> j;
    for (std::size_t i = k; i-- > 0;)
      if (current[i] > target[i]) {
        j = i;
        break;
      }
    ensure(j.has_value(), "build_chain: no surplus coordinate before the first deficit");

    const Rational surplus = current[*j] - target[*j];
    const Rational deficit = target[k] - current[k];
    const Rational amount = std::min(surplus, deficit);

    TransferStep step{*j, k, (current[*j] + current[k]) / 2, (current[*j] - current[k]) / 2, 0, 0};
    std::vector<Rational> next(current.begin(), current.end());
    next[*j] -= amount;
    next[k] += amount;
    step.delta = (next[*j] - next[k]) / 2;
    step.lambda = (step.Delta + step.delta) / (2 * step.Delta);

    RVector next_vec(std::move(next));
    ensure(is_decreasing(next_vec), "build_chain: transfer broke decreasing order");
    ensure(step.delta >= 0 && step.delta < step.Delta, "build_chain: half-gap did not shrink");
    chain.steps.push_back(std::move(step));
    chain.vectors.push_back(next_vec);
    current = std::move(next_vec);
  }
  return chain;
}

/// Checks every chain invariant against the endpoints a, b. Returns the first
/// violation, or nullopt if the chain is valid.
inline std::optional<std::string> check_chain(const MajorizationChain& chain, const RVector& a, const RVector& b) {
  if (chain.vectors.empty()) return "chain has no vectors";
  if (chain.vectors.size() != chain.steps.size() + 1) return "vector/step count mismatch";
  if (!(chain.vectors.front() == decreasing_rearrangement(a))) return "chain does not start at a↓";
  if (!(chain.vectors.back() == decreasing_rearrangement(b))) return "chain does not end at b↓";
  const std::size_t n = a.size();
  if (chain.steps.size() + 1 > std::max<std::size_t>(n, 1)) return "chain longer than n - 1";
  for (std::size_t i = 1; i < chain.vectors.size(); ++i) {
    const auto& prev = chain.vectors[i - 1];
    const auto& cur = chain.vectors[i];
    const auto& s = chain.steps[i - 1];
    const std::string at = " at step " + std::to_string(i);
    if (prev.size() != n || cur.size() != n) return "wrong vector length" + at;
    if (!majorizes(prev, cur).strict()) return "not strictly majorized" + at;
    if (hamming_distance(prev, cur) != 2) return "Hamming distance is not 2" + at;
    if (s.j >= n || s.k >= n || s.j >= s.k) return "bad step indices" + at;
    if (prev[s.j] != s.rho + s.Delta || prev[s.k] != s.rho - s.Delta) return "rho/Delta inconsistent" + at;
    if (cur[s.j] != s.rho + s.delta || cur[s.k] != s.rho - s.delta) return "rho/delta inconsistent" + at;
    if (!(s.delta >= 0 && s.delta < s.Delta)) return "delta out of [0, Delta)" + at;
    if (s.lambda != (s.Delta + s.delta) / (2 * s.Delta)) return "lambda inconsistent" + at;
  }
  return std::nullopt;
}

/// λI + (1 - λ) P_(j,k).
inline DoublyStochastic step_to_ttransform(const TransferStep& step, std::size_t n) {
  require(step.j < n && step.k < n && step.j != step.k, "step_to_ttransform: indices out of range");
  require(step.lambda >= 0 && step.lambda <= 1, "step_to_ttransform: lambda outside [0, 1]");
  RMatrix m = RMatrix::identity(n);
  m.at(step.j, step.j) = step.lambda;
  m.at(step.k, step.k) = step.lambda;
  m.at(step.j, step.k) = 1 - step.lambda;
  m.at(step.k, step.j) = 1 - step.lambda;
  return DoublyStochastic(std::move(m));
}

/// Permutation π with act_on_vector(π, v) = v↓ (stable on ties).
inline Permutation sorting_permutation(const RVector& v) {
  auto order = decreasing_order(v);
  std::vector<std::size_t> img(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) img[order[i]] = i;
  return Permutation(std::move(img));
}

/// Doubly stochastic S with b = S a, built as P_{π_b}^{-1} T_r ... T_1 P_{π_a}
/// where π_a, π_b sort a and b and T_i are the chain's T-transforms.
inline DoublyStochastic hlp_matrix(const RVector& a, const RVector& b) {
  require_same_length(a, b, "hlp_matrix");
  auto verdict = majorizes(a, b);
  require(verdict.majorized(), std::string("hlp_matrix: b is not majorized by a (relation ") +
                                   std::string(relation_name(verdict.relation)) + ")");
  const std::size_t n = a.size();
  RMatrix product = RMatrix::permutation(sorting_permutation(a));
  if (verdict.strict()) {
    for (const auto& step : build_chain(a, b).steps) product = step_to_ttransform(step, n).matrix() * product;
  }
  product = RMatrix::permutation(sorting_permutation(b).inverse()) * product;
  ensure(product * a == b, "hlp_matrix: S a != b");
  return DoublyStochastic(std::move(product));
}

struct BirkhoffTerm {
  Rational weight;
  Permutation sigma;
};

/// S = Σ t_σ P_σ with t_σ > 0 and Σ t_σ = 1.
struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  RMatrix reconstruct(std::size_t n) const {
    RMatrix m(n);
    for (const auto& t : terms)
      for (std::size_t j = 0; j < n; ++j) m.at(t.sigma(j), j) += t.weight;
    return m;
  }

  Rational total_weight() const {
    Rational s = 0;
    for (const auto& t : terms) s += t.weight;
    return s;
  }
};

namespace detail {

/// Kuhn augmenting path: can column `col` be matched given the current row assignment?
inline bool augment_column(const std::vector<std::vector<bool>>& support, std::size_t col,
                           std::vector<bool>& row_visited, std::vector<std::size_t>& row_match,
                           const std::vector<bool>& row_blocked) {
  const std::size_t n = support.size();
  for (std::size_t row = 0; row < n; ++row) {
    if (!support[row][col] || row_visited[row] || row_blocked[row]) continue;
    row_visited[row] = true;
    if (row_match[row] == n || augment_column(support, row_match[row], row_visited, row_match, row_blocked)) {
      row_match[row] = col;
      return true;
    }
  }
  return false;
}

/// True if columns [first_col, n) can be perfectly matched to unblocked rows.
inline bool has_perfect_matching(const std::vector<std::vector<bool>>& support, std::size_t first_col,
                                 const std::vector<bool>& row_blocked) {
  const std::size_t n = support.size();
  std::vector<std::size_t> row_match(n, n);
  for (std::size_t col = first_col; col < n; ++col) {
    std::vector<bool> visited(n, false);
    if (!augment_column(support, col, visited, row_match, row_blocked)) return false;
  }
  return true;
}

/// Lexicographically smallest σ (in image form) with support[σ(j)][j] for all j.
inline std::optional<Permutation> smallest_support_permutation(const std::vector<std::vector<bool>>& support) {
  const std::size_t n = support.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> img(n);
  for (std::size_t col = 0; col < n; ++col) {
    bool placed = false;
    for (std::size_t row = 0; row < n && !placed; ++row) {
      if (used[row] || !support[row][col]) continue;
      used[row] = true;
      if (has_perfect_matching(support, col + 1, used)) {
        img[col] = row;
        placed = true;
      } else {
        used[row] = false;
      }
    }
    if (!placed) return std::nullopt;
  }
  return Permutation(std::move(img));
}

}  // namespace detail

/// Greedy Birkhoff-von Neumann decomposition. Each round picks the
/// lexicographically smallest permutation inside the positive support and
/// subtracts the smallest entry it covers, zeroing at least one entry.
inline BirkhoffDecomposition birkhoff_decompose(const DoublyStochastic& s) {
  const std::size_t n = s.order();
  RMatrix residual = s.matrix();
  BirkhoffDecomposition out;
  while (!residual.is_zero()) {
    std::vector<std::vector<bool>> support(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) support[i][j] = residual.at(i, j) > 0;
    auto sigma = detail::smallest_support_permutation(support);
    ensure(sigma.has_value(), "birkhoff_decompose: no perfect matching in the support");
    Rational weight = residual.at((*sigma)(0), 0);
    for (std::size_t j = 1; j < n; ++j) weight = std::min(weight, residual.at((*sigma)(j), j));
    for (std::size_t j = 0; j < n; ++j) residual.at((*sigma)(j), j) -= weight;
    out.terms.push_back({weight, *sigma});
    ensure(out.terms.size() <= (n - 1) * (n - 1) + 1, "birkhoff_decompose: term bound exceeded");
  }
  ensure(out.total_weight() == 1, "birkhoff_decompose: weights do not sum to 1");
  ensure(out.reconstruct(n) == s.matrix(), "birkhoff_decompose: reconstruction mismatch");
  return out;
}

}  // namespace majorize

#endif  // MAJORIZE_CHAIN_HPP
