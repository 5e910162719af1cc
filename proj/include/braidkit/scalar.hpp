#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace braidkit {

/// Exact Laurent polynomial in q with rational coefficients.
///
/// Stored as exponent -> coefficient with no zero coefficients, so two
/// scalars are equal iff their term maps are equal. Only unit monomials
/// c*q^n are invertible.
class Scalar {
 public:
  using Terms = std::map<int, mpq_class>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& value);

  static Scalar monomial(const mpq_class& coefficient, int exponent);
  /// q^n
  static Scalar q(int exponent = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_unit_monomial() const noexcept { return terms_.size() == 1; }
  bool is_monomial() const noexcept { return terms_.size() <= 1; }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of q^exponent.
  mpq_class coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// c^-1 q^-n for a unit monomial c q^n; throws NotAUnit otherwise.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Deterministic total order (not an ordering of values).
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Canonical text: terms in descending exponent, e.g. "q^2 - 1", "-3/2*q^-1".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void add_term(int exponent, const mpq_class& coefficient);

  Terms terms_;
};

Scalar scalar_inv(const Scalar& a);

/// Greatest common divisor in Q[q, q^-1], normalized so that the lowest
/// exponent is 0 and the leading coefficient is 1. gcd(0, 0) = 0.
Scalar scalar_gcd(const Scalar& a, const Scalar& b);

/// a / b when b divides a in Q[q, q^-1]; nullopt otherwise. b must be nonzero.
std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b);

}  // namespace braidkit
