#include "braidkit/ncpoly.hpp"

#include <numeric>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

Alphabet::Alphabet(std::string name, std::vector<std::string> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {}

std::optional<GenId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<GenId>(i);
  }
  return std::nullopt;
}

std::string Alphabet::format(const Word& word) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    out += generators_.at(word[i]);
  }
  return out;
}

std::string format_tensor_word(const Signature& signature, const TensorWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "(x)";
    out += signature[i]->format(word[i]);
  }
  return out;
}

NcElement NcElement::one(Signature signature) { return scalar(std::move(signature), 1); }

NcElement NcElement::scalar(Signature signature, const Scalar& s) {
  NcElement e(std::move(signature));
  e.add_term(TensorWord(e.slots()), s);
  return e;
}

NcElement NcElement::term(Signature signature, TensorWord word, const Scalar& coefficient) {
  if (word.size() != signature.size()) {
    throw Error(ErrorKind::SignatureMismatch, "tensor word has wrong number of slots");
  }
  NcElement e(std::move(signature));
  e.add_term(std::move(word), coefficient);
  return e;
}

NcElement NcElement::generator(const Alphabet& alphabet, GenId id) {
  return term({&alphabet}, {Word(1, id)});
}

Scalar NcElement::coefficient(const TensorWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar NcElement::constant() const { return coefficient(TensorWord(slots())); }

void NcElement::add_term(const TensorWord& word, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcElement::add_term(TensorWord&& word, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(std::move(word), coefficient);
  } else {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same(const Signature& a, const Signature& b, const char* op) {
  if (a != b) throw Error(ErrorKind::SignatureMismatch, std::string(op) + ": signatures differ");
}

}  // namespace

NcElement& NcElement::operator+=(const NcElement& other) {
  if (signature_.empty() && terms_.empty()) signature_ = other.signature_;
  require_same(signature_, other.signature_, "add");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& other) {
  if (signature_.empty() && terms_.empty()) signature_ = other.signature_;
  require_same(signature_, other.signature_, "subtract");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcElement& NcElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string NcElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool lone = terms_.size() == 1;
  for (const auto& [word, c] : terms_) {
    bool unit_word = true;
    for (const auto& w : word) unit_word = unit_word && w.empty();
    const std::string body = unit_word ? std::string() : format_tensor_word(signature_, word);

    if (c.is_monomial()) {
      const auto& [e, coeff] = *c.terms().begin();
      const bool negative = coeff < 0;
      Scalar magnitude = negative ? -c : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      if (unit_word) {
        os << magnitude.to_string();
      } else if (magnitude.is_one()) {
        os << body;
      } else {
        os << magnitude.to_string() << '*' << body;
      }
    } else {
      if (!first) os << " + ";
      if (unit_word) {
        if (lone) {
          os << c.to_string();
        } else {
          os << '(' << c.to_string() << ')';
        }
      } else {
        os << '(' << c.to_string() << ")*" << body;
      }
    }
    first = false;
  }
  return os.str();
}

NcElement tensor_mul(const NcElement& u, const NcElement& v) {
  require_same(u.signature(), v.signature(), "tensor_mul");
  NcElement out(u.signature());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      TensorWord w = wu;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wv[i];
      out.add_term(std::move(w), cu * cv);
    }
  }
  return out;
}

NcElement tensor(const NcElement& u, const NcElement& v) {
  Signature sig = u.signature();
  sig.insert(sig.end(), v.signature().begin(), v.signature().end());
  NcElement out(sig);
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      TensorWord w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      out.add_term(std::move(w), cu * cv);
    }
  }
  return out;
}

NcElement embed(const NcElement& u, const Signature& target, std::span<const std::size_t> assignment) {
  if (assignment.size() != u.slots()) {
    throw Error(ErrorKind::SignatureMismatch, "embed: assignment size differs from slot count");
  }
  std::vector<bool> used(target.size(), false);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const std::size_t t = assignment[i];
    if (t >= target.size() || used[t] || target[t] != u.signature()[i]) {
      throw Error(ErrorKind::SignatureMismatch, "embed: slot " + std::to_string(i) + " cannot be placed");
    }
    used[t] = true;
  }
  NcElement out(target);
  for (const auto& [w, c] : u.terms()) {
    TensorWord tw(target.size());
    for (std::size_t i = 0; i < assignment.size(); ++i) tw[assignment[i]] = w[i];
    out.add_term(std::move(tw), c);
  }
  return out;
}

NcElement permute_slots(const NcElement& u, std::span<const std::size_t> order) {
  if (order.size() != u.slots()) throw Error(ErrorKind::SignatureMismatch, "permute_slots: bad order");
  Signature sig(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sig[i] = u.signature().at(order[i]);
  NcElement out(sig);
  for (const auto& [w, c] : u.terms()) {
    TensorWord tw(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) tw[i] = w[order[i]];
    out.add_term(std::move(tw), c);
  }
  return out;
}

NcElement map_slots(const NcElement& u, std::size_t first, std::size_t count, const Signature& image,
                    const std::function<NcElement(std::span<const Word>)>& f) {
  if (first + count > u.slots()) throw Error(ErrorKind::SignatureMismatch, "map_slots: slot range out of bounds");
  Signature sig(u.signature().begin(), u.signature().begin() + static_cast<std::ptrdiff_t>(first));
  sig.insert(sig.end(), image.begin(), image.end());
  sig.insert(sig.end(), u.signature().begin() + static_cast<std::ptrdiff_t>(first + count), u.signature().end());
  NcElement out(sig);
  std::map<TensorWord, NcElement, TensorWordLess> cache;
  for (const auto& [w, c] : u.terms()) {
    TensorWord key(w.begin() + static_cast<std::ptrdiff_t>(first),
                   w.begin() + static_cast<std::ptrdiff_t>(first + count));
    auto it = cache.find(key);
    if (it == cache.end()) {
      NcElement value = f(std::span<const Word>(key));
      if (value.signature() != image && !(value.is_zero() && value.slots() == 0)) {
        throw Error(ErrorKind::SignatureMismatch, "map_slots: image has the wrong signature");
      }
      it = cache.emplace(std::move(key), std::move(value)).first;
    }
    for (const auto& [iw, ic] : it->second.terms()) {
      TensorWord tw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(first));
      tw.insert(tw.end(), iw.begin(), iw.end());
      tw.insert(tw.end(), w.begin() + static_cast<std::ptrdiff_t>(first + count), w.end());
      out.add_term(std::move(tw), c * ic);
    }
  }
  return out;
}

std::size_t Grouping::total() const { return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}); }

GroupedElement split(const NcElement& u, const Grouping& grouping) {
  for (auto b : grouping.blocks) {
    if (b == 0) throw Error(ErrorKind::BadGrouping, "empty block");
  }
  if (grouping.total() != u.slots()) {
    throw Error(ErrorKind::BadGrouping,
                "blocks cover " + std::to_string(grouping.total()) + " slots, element has " + std::to_string(u.slots()));
  }
  return {u, grouping};
}

NcElement flatten(const GroupedElement& g) { return g.element; }

std::vector<Signature> block_signatures(const GroupedElement& g) {
  std::vector<Signature> out;
  std::size_t at = 0;
  for (auto b : g.grouping.blocks) {
    out.emplace_back(g.element.signature().begin() + static_cast<std::ptrdiff_t>(at),
                     g.element.signature().begin() + static_cast<std::ptrdiff_t>(at + b));
    at += b;
  }
  return out;
}

}  // namespace braidkit
