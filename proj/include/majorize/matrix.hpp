#ifndef MAJORIZE_MATRIX_HPP
#define MAJORIZE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "majorize/error.hpp"
#include "majorize/permutation.hpp"
#include "majorize/vector.hpp"

namespace majorize {

/// Dense square matrix of exact rationals, row-major.
class RMatrix {
public:
  explicit RMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) { require(n >= 1, "matrix order must be >= 1"); }

  explicit RMatrix(std::vector<std::vector<Rational>> rows) : RMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      require(rows[i].size() == n_, "matrix must be square");
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i][j];
    }
  }

  static RMatrix identity(std::size_t n) {
    RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// P_σ with (P_σ)_{i,j} = 1 iff i = σ(j).
  static RMatrix permutation(const Permutation& sigma) {
    RMatrix m(sigma.degree());
    for (std::size_t j = 0; j < sigma.degree(); ++j) m.at(sigma(j), j) = 1;
    return m;
  }

  std::size_t order() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Rational row_sum(std::size_t i) const {
    Rational s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += at(i, j);
    return s;
  }
  Rational col_sum(std::size_t j) const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += at(i, j);
    return s;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_doubly_stochastic() const {
    for (const auto& v : data_)
      if (v < 0) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (row_sum(i) != 1 || col_sum(i) != 1) return false;
    return true;
  }

  std::vector<std::vector<Rational>> rows() const {
    std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
  }

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Rational> data_;
};

inline RMatrix operator*(const RMatrix& lhs, const RMatrix& rhs) {
  require(lhs.order() == rhs.order(), "matrix product: order mismatch");
  const std::size_t n = lhs.order();
  RMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& l = lhs.at(i, k);
      if (l == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rhs.at(k, j) != 0) out.at(i, j) += l * rhs.at(k, j);
    }
  return out;
}

inline RVector operator*(const RMatrix& m, const RVector& v) {
  require(m.order() == v.size(), "matrix-vector product: dimension mismatch");
  std::vector<Rational> out(v.size(), Rational(0));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out[i] += m.at(i, j) * v[j];
  return RVector(std::move(out));
}

inline RMatrix transpose(const RMatrix& m) {
  RMatrix t(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

/// Nonnegative square matrix whose rows and columns each sum to exactly 1.
class DoublyStochastic {
public:
  explicit DoublyStochastic(RMatrix m) : m_(std::move(m)) {
    require(m_.is_doubly_stochastic(), "matrix is not doubly stochastic");
  }

  const RMatrix& matrix() const { return m_; }
  std::size_t order() const { return m_.order(); }
  const Rational& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  friend bool operator==(const DoublyStochastic&, const DoublyStochastic&) = default;

private:
  RMatrix m_;
};

}  // namespace majorize

#endif  // MAJORIZE_MATRIX_HPP
