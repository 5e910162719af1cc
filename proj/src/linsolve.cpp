#include "braidkit/linsolve.hpp"

#include "braidkit/error.hpp"

namespace braidkit {

RatFunc::RatFunc(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::NotAUnit, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const Scalar g = scalar_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  // Normalize the denominator: lowest exponent 0, leading coefficient 1.
  const Scalar unit = Scalar::monomial(den_.terms().rbegin()->second, den_.min_exponent());
  const Scalar inv = unit.inverse();
  num_ *= inv;
  den_ *= inv;
}

std::optional<Scalar> RatFunc::to_scalar() const {
  if (!den_.is_unit_monomial()) return std::nullopt;
  return num_ * den_.inverse();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotAUnit, "division by zero in Q(q)");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

void LinearSystem::add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs) {
  Row row;
  for (const auto& [j, c] : coeffs) {
    if (j >= unknowns_) throw Error(ErrorKind::SingularSystem, "unknown index out of range");
    if (!c.is_zero()) row.coeffs.emplace(j, RatFunc(c));
  }
  row.rhs = RatFunc(rhs);
  rows_.push_back(std::move(row));
}

LinearSystem::Solution LinearSystem::solve() const {
  std::vector<Row> rows = rows_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::vector<bool> used(rows.size(), false);

  for (std::size_t col = 0; col < unknowns_; ++col) {
    // Prefer the pivot with the simplest entry; keeps fill-in small.
    std::optional<std::size_t> pick;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].coeffs.find(col);
      if (it == rows[r].coeffs.end()) continue;
      const std::size_t cost = it->second.num().size() + it->second.den().size() + rows[r].coeffs.size();
      if (!pick || cost < best_cost) {
        pick = r;
        best_cost = cost;
      }
    }
    if (!pick) continue;
    used[*pick] = true;
    pivots.emplace_back(*pick, col);
    Row& prow = rows[*pick];
    const RatFunc inv = RatFunc(1) / prow.coeffs.at(col);
    for (auto& [j, c] : prow.coeffs) c = c * inv;
    prow.rhs = prow.rhs * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == *pick) continue;
      auto it = rows[r].coeffs.find(col);
      if (it == rows[r].coeffs.end()) continue;
      const RatFunc f = it->second;
      for (const auto& [j, c] : prow.coeffs) {
        RatFunc updated = rows[r].coeffs[j] - f * c;
        if (updated.is_zero()) {
          rows[r].coeffs.erase(j);
        } else {
          rows[r].coeffs[j] = updated;
        }
      }
      rows[r].rhs = rows[r].rhs - f * prow.rhs;
    }
  }

  Solution sol;
  sol.rank = pivots.size();
  sol.consistent = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && rows[r].coeffs.empty() && !rows[r].rhs.is_zero()) sol.consistent = false;
  }
  if (!sol.consistent) return sol;
  sol.unique = sol.rank == unknowns_;
  sol.values.assign(unknowns_, RatFunc());
  // Reduced form: each pivot row reads x_col + sum(free terms) = rhs; free unknowns are 0.
  for (const auto& [r, col] : pivots) sol.values[col] = rows[r].rhs;
  return sol;
}

}  // namespace braidkit
