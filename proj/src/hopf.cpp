#include "braidkit/hopf.hpp"

#include "braidkit/error.hpp"

namespace braidkit {

HopfAlgebra::HopfAlgebra(PresentationPtr algebra, HopfTables tables)
    : algebra_(std::move(algebra)), tables_(std::move(tables)) {
  check_complete();
}

void HopfAlgebra::set_tables(HopfTables tables) {
  tables_ = std::move(tables);
  check_complete();
}

void HopfAlgebra::check_complete() const {
  const Alphabet& a = alphabet();
  for (std::size_t g = 0; g < a.size(); ++g) {
    const auto id = static_cast<GenId>(g);
    const std::string& name = a.generator(id);
    if (!tables_.coproduct.count(id)) throw Error(ErrorKind::MissingEntry, "no coproduct for " + name);
    if (!tables_.counit.count(id)) throw Error(ErrorKind::MissingEntry, "no counit for " + name);
    if (!tables_.antipode.count(id)) throw Error(ErrorKind::MissingEntry, "no antipode for " + name);
  }
}

NcElement HopfAlgebra::coproduct_word(const Word& w) const {
  NcElement out = NcElement::one(signature(2));
  for (GenId g : w) out = tensor_mul(out, tables_.coproduct.at(g));
  return out;
}

NcElement HopfAlgebra::coproduct(const NcElement& u) const {
  NcElement d = map_slots(u, 0, 1, signature(2), [&](std::span<const Word> w) { return coproduct_word(w[0]); });
  return algebra_->normal_form(d);
}

NcElement HopfAlgebra::iterated_coproduct(const NcElement& u, std::size_t legs) const {
  NcElement out = u;
  for (std::size_t n = 1; n < legs; ++n) {
    out = map_slots(out, n - 1, 1, signature(2), [&](std::span<const Word> w) { return coproduct_word(w[0]); });
  }
  return algebra_->normal_form(out);
}

Scalar HopfAlgebra::counit_word(const Word& w) const {
  Scalar s = 1;
  for (GenId g : w) {
    s *= tables_.counit.at(g);
    if (s.is_zero()) break;
  }
  return s;
}

Scalar HopfAlgebra::counit(const NcElement& u) const {
  Scalar s;
  for (const auto& [w, c] : u.terms()) s += c * counit_word(w[0]);
  return s;
}

NcElement HopfAlgebra::antipode_word(const Word& w) const {
  NcElement out = NcElement::one(signature());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = algebra_->multiply(out, tables_.antipode.at(*it));
  return out;
}

NcElement HopfAlgebra::antipode(const NcElement& u) const {
  NcElement out(signature());
  for (const auto& [w, c] : u.terms()) out += c * antipode_word(w[0]);
  return out;
}

bool HopfAlgebra::is_grouplike(GenId g) const {
  const Signature sig = signature(2);
  return tables_.coproduct.at(g) == NcElement::term(sig, {Word(1, g), Word(1, g)});
}

std::optional<GenId> HopfAlgebra::grouplike_inverse_of(GenId g) const {
  if (!is_grouplike(g)) return std::nullopt;
  const NcElement& s = tables_.antipode.at(g);
  if (s.size() != 1) return std::nullopt;
  const auto& [w, c] = *s.terms().begin();
  if (!c.is_one() || w[0].size() != 1 || w[0][0] == g || !is_grouplike(w[0][0])) return std::nullopt;
  return w[0][0];
}

DqtHopf::DqtHopf(PresentationPtr algebra, HopfTables tables, RTable r)
    : HopfAlgebra(std::move(algebra), std::move(tables)), r_(std::move(r)), definitions_(algebra_->definitions()) {}

void DqtHopf::set_r_table(RTable r) {
  const std::lock_guard lock(memo_mutex_);
  r_ = std::move(r);
  memo_[0].clear();
  memo_[1].clear();
}

void DqtHopf::set_tables(HopfTables tables) {
  HopfAlgebra::set_tables(std::move(tables));
  const std::lock_guard lock(memo_mutex_);
  memo_[0].clear();
  memo_[1].clear();
}

bool DqtHopf::is_primary(GenId g) const {
  if (definitions_.count(g)) return true;
  for (const auto& [key, value] : r_) {
    if (key.first == g || key.second == g) return true;
  }
  return false;
}

Scalar DqtHopf::eval_pair(GenId a, GenId b, RStrategy strategy) const {
  if (auto it = r_.find({a, b}); it != r_.end()) return it->second;
  // Grouplike letters and their inverses: R(g^±1 (x) h^±1) = R(g(x)h)^(±1·±1).
  auto base = [&](GenId g) -> std::optional<std::pair<GenId, int>> {
    if (!is_grouplike(g)) return std::nullopt;
    if (is_primary(g)) return std::pair{g, 1};
    if (auto inv = grouplike_inverse_of(g); inv && is_primary(*inv)) return std::pair{*inv, -1};
    return std::nullopt;
  };
  const auto ba = base(a);
  const auto bb = base(b);
  if (ba && bb && (ba->second < 0 || bb->second < 0)) {
    const Scalar r = eval_pair(ba->first, bb->first, strategy);
    return ba->second * bb->second > 0 ? r : r.inverse();
  }
  if (auto it = definitions_.find(a); it != definitions_.end()) {
    return eval_element_word(it->second, Word(1, b), strategy);
  }
  if (auto it = definitions_.find(b); it != definitions_.end()) {
    return eval_word_element(Word(1, a), it->second, strategy);
  }
  const std::string pair = alphabet().generator(a) + "," + alphabet().generator(b);
  if (ba && ba->second < 0) {
    return eval_word_element(Word(1, ba->first), tables_.antipode.at(b), strategy);
  }
  if (bb && bb->second < 0) {
    return eval_element_word(tables_.antipode.at(a), Word(1, bb->first), strategy);
  }
  throw Error(ErrorKind::MissingEntry, "R has no entry for " + pair);
}

Scalar DqtHopf::eval_word_element(const Word& u, const NcElement& v, RStrategy strategy) const {
  Scalar s;
  for (const auto& [w, c] : v.terms()) s += c * eval_R(u, w[0], strategy);
  return s;
}

Scalar DqtHopf::eval_element_word(const NcElement& u, const Word& v, RStrategy strategy) const {
  Scalar s;
  for (const auto& [w, c] : u.terms()) s += c * eval_R(w[0], v, strategy);
  return s;
}

Scalar DqtHopf::eval_R(const Word& u, const Word& v, RStrategy strategy) const {
  if (u.empty()) return counit_word(v);
  if (v.empty()) return counit_word(u);
  auto& memo = memo_[strategy == RStrategy::PeelSecond ? 0 : 1];
  {
    const std::lock_guard lock(memo_mutex_);
    if (auto it = memo.find({u, v}); it != memo.end()) return it->second;
  }

  const bool split_second = v.size() >= 2 && (strategy == RStrategy::PeelSecond || u.size() == 1);
  const bool split_first = !split_second && u.size() >= 2;
  Scalar result;
  if (split_second) {
    // R(u (x) g f) = sum R(u1 (x) f) R(u2 (x) g), f the last letter.
    const Word g = v.substr(0, v.size() - 1);
    const Word f = v.substr(v.size() - 1);
    for (const auto& [w, c] : coproduct_word(u).terms()) {
      const Scalar left = eval_R(w[0], f, strategy);
      if (left.is_zero()) continue;
      result += c * left * eval_R(w[1], g, strategy);
    }
  } else if (split_first) {
    // R(f g (x) v) = sum R(f (x) v1) R(g (x) v2), f the first letter.
    const Word f = u.substr(0, 1);
    const Word g = u.substr(1);
    for (const auto& [w, c] : coproduct_word(v).terms()) {
      const Scalar left = eval_R(f, w[0], strategy);
      if (left.is_zero()) continue;
      result += c * left * eval_R(g, w[1], strategy);
    }
  } else {
    result = eval_pair(u[0], v[0], strategy);
  }

  const std::lock_guard lock(memo_mutex_);
  memo.emplace(std::pair{u, v}, result);
  return result;
}

Scalar DqtHopf::eval_R(const NcElement& u, const NcElement& v, RStrategy strategy) const {
  Scalar s;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) s += cu * cv * eval_R(wu[0], wv[0], strategy);
  }
  return s;
}

Scalar DqtHopf::eval_R(const NcElement& uv, RStrategy strategy) const {
  Scalar s;
  for (const auto& [w, c] : uv.terms()) s += c * eval_R(w[0], w[1], strategy);
  return s;
}

Scalar DqtHopf::eval_R_inverse(const Word& u, const Word& v) const {
  return eval_R(antipode_word(u), NcElement::term(signature(), {v}));
}

Scalar DqtHopf::eval_R_inverse(const NcElement& u, const NcElement& v) const { return eval_R(antipode(u), v); }

}  // namespace braidkit
