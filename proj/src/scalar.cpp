#include "braidkit/scalar.hpp"

#include <functional>
#include <vector>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::BadGrouping: return "BadGrouping";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::CompletionBudgetExceeded: return "CompletionBudgetExceeded";
    case ErrorKind::UnorientablePair: return "UnorientablePair";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::CrossedModuleViolation: return "CrossedModuleViolation";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::SingularSystem: return "SingularSystem";
  }
  return "Error";
}

Scalar::Scalar(long value) {
  if (value != 0) terms_.emplace(0, mpq_class(value));
}

Scalar::Scalar(const mpq_class& value) {
  if (value != 0) terms_.emplace(0, value);
}

Scalar Scalar::monomial(const mpq_class& coefficient, int exponent) {
  Scalar s;
  if (coefficient != 0) s.terms_.emplace(exponent, coefficient);
  return s;
}

Scalar Scalar::q(int exponent) { return monomial(1, exponent); }

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpq_class Scalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Scalar::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Scalar::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) {
    throw Error(ErrorKind::NotAUnit, "cannot invert '" + to_string() + "'");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

void Scalar::add_term(int exponent, const mpq_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator<(const Scalar& a, const Scalar& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

namespace {

std::string q_power(int e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpq_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else if (c == 1) {
      os << q_power(e);
    } else {
      os << c.get_str() << '*' << q_power(e);
    }
  }
  return os.str();
}

std::size_t Scalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.get_str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

namespace {

/// Dense polynomial, index = degree, no trailing zeros.
using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// a = q^shift * dense with dense(0) != 0.
Dense to_dense(const Scalar& a, int& shift) {
  Dense out;
  if (a.is_zero()) {
    shift = 0;
    return out;
  }
  shift = a.min_exponent();
  out.assign(static_cast<std::size_t>(a.max_exponent() - shift + 1), mpq_class(0));
  for (const auto& [e, c] : a.terms()) out[static_cast<std::size_t>(e - shift)] = c;
  return out;
}

Scalar from_dense(const Dense& p, int shift) {
  Scalar out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) out += Scalar::monomial(p[i], static_cast<int>(i) + shift);
  }
  return out;
}

/// Polynomial long division; returns quotient, leaves remainder in num.
Dense divmod(Dense& num, const Dense& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  Dense quot(num.size() - den.size() + 1, mpq_class(0));
  const mpq_class& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class f = num[k + den.size() - 1] / lead;
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
  }
  trim(num);
  trim(quot);
  return quot;
}

}  // namespace

Scalar scalar_gcd(const Scalar& a, const Scalar& b) {
  int sa = 0;
  int sb = 0;
  Dense x = to_dense(a, sa);
  Dense y = to_dense(b, sb);
  if (x.empty() && y.empty()) return Scalar();
  if (x.empty()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = x;
    divmod(r, y);
    x = std::move(y);
    y = std::move(r);
  }
  // Strip q factors (units) and make monic.
  std::size_t low = 0;
  while (low < x.size() && x[low] == 0) ++low;
  x.erase(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(low));
  const mpq_class lead = x.back();
  for (auto& c : x) c /= lead;
  return from_dense(x, 0);
}

std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotAUnit, "division by zero");
  if (a.is_zero()) return Scalar();
  int sa = 0;
  int sb = 0;
  Dense num = to_dense(a, sa);
  const Dense den = to_dense(b, sb);
  Dense quot = divmod(num, den);
  if (!num.empty()) return std::nullopt;
  return from_dense(quot, sa - sb);
}

}  // namespace braidkit
