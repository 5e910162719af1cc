#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/scalar.hpp"

namespace braidkit {

/// Element of Q(q) as a reduced quotient of Laurent polynomials. Only used
/// inside linear solves; results are converted back to Scalar.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Scalar& s) : num_(s), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Scalar num, Scalar den);

  const Scalar& num() const noexcept { return num_; }
  const Scalar& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// The value as a Laurent polynomial, when it is one.
  std::optional<Scalar> to_scalar() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void reduce();

  Scalar num_;
  Scalar den_;
};

/// Sparse linear system over Q(q) with Laurent-polynomial input data.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rows_.size(); }

  /// sum_j coeffs[j] * x_j = rhs. Zero rows are kept (they may be inconsistent).
  void add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs);

  struct Solution {
    bool consistent = false;
    std::size_t rank = 0;
    bool unique = false;
    /// Particular solution (free unknowns set to 0); empty if inconsistent.
    std::vector<RatFunc> values;
  };

  Solution solve() const;

 private:
  struct Row {
    std::map<std::size_t, RatFunc> coeffs;
    RatFunc rhs;
  };

  std::size_t unknowns_;
  std::vector<Row> rows_;
};

}  // namespace braidkit
