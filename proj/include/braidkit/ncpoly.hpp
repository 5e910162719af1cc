#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/scalar.hpp"

namespace braidkit {

/// Index of a generator within its alphabet; declaration order is precedence.
using GenId = char16_t;

/// A word in the generators of one algebra. Empty word is the unit.
using Word = std::u16string;

/// Names of the generators of one algebra. Identity of an Alphabet object is
/// the algebra tag carried by every tensor slot.
class Alphabet {
 public:
  Alphabet(std::string name, std::vector<std::string> generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::string& generator(GenId id) const { return generators_.at(id); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::optional<GenId> find(std::string_view name) const;

  /// "x*y", or "1" for the empty word.
  std::string format(const Word& word) const;

 private:
  std::string name_;
  std::vector<std::string> generators_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Algebra tag per tensor slot. Slots compare by Alphabet identity.
using Signature = std::vector<const Alphabet*>;

/// Degree-lexicographic order: shorter words first, then lexicographic by
/// generator precedence.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// One word per tensor slot.
using TensorWord = std::vector<Word>;

struct TensorWordLess {
  bool operator()(const TensorWord& a, const TensorWord& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return word_less(a[i], b[i]);
    }
    return a.size() < b.size();
  }
};

/// Finite linear combination of tensor words with Scalar coefficients.
///
/// Multiplication here is the slotwise (unbraided) tensor product algebra.
/// Equality of algebra elements requires normal forms; see Presentation.
class NcElement {
 public:
  using Terms = std::map<TensorWord, Scalar, TensorWordLess>;

  NcElement() = default;
  explicit NcElement(Signature signature) : signature_(std::move(signature)) {}

  /// The unit 1(x)...(x)1 in the given signature.
  static NcElement one(Signature signature);
  static NcElement scalar(Signature signature, const Scalar& s);
  /// coefficient * (w_1 (x) ... (x) w_n)
  static NcElement term(Signature signature, TensorWord word, const Scalar& coefficient = 1);
  /// Single generator in a one-slot signature.
  static NcElement generator(const Alphabet& alphabet, GenId id);

  const Signature& signature() const noexcept { return signature_; }
  std::size_t slots() const noexcept { return signature_.size(); }
  const Terms& terms() const& noexcept { return terms_; }
  // By value on temporaries so range-for over f().terms() stays valid.
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of a tensor word (zero when absent).
  Scalar coefficient(const TensorWord& word) const;
  /// Constant term, i.e. coefficient of 1(x)...(x)1.
  Scalar constant() const;

  void add_term(const TensorWord& word, const Scalar& coefficient);
  void add_term(TensorWord&& word, const Scalar& coefficient);

  NcElement& operator+=(const NcElement& other);
  NcElement& operator-=(const NcElement& other);
  NcElement& operator*=(const Scalar& s);

  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator-(NcElement a) { return a *= Scalar(-1); }
  friend NcElement operator*(const Scalar& s, NcElement a) { return a *= s; }
  friend NcElement operator*(NcElement a, const Scalar& s) { return a *= s; }

  /// Term-map equality; meaningful as algebra equality only on normal forms.
  friend bool operator==(const NcElement& a, const NcElement& b) {
    return a.signature_ == b.signature_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcElement& a, const NcElement& b) { return !(a == b); }

  /// Canonical text, e.g. "q*x(x)y + (q^2 - 1)*y(x)x".
  std::string to_string() const;

 private:
  Signature signature_;
  Terms terms_;
};

/// Slotwise concatenation, extended bilinearly. Throws SignatureMismatch.
NcElement tensor_mul(const NcElement& u, const NcElement& v);

/// Outer tensor product u (x) v with concatenated signatures.
NcElement tensor(const NcElement& u, const NcElement& v);

/// Places u into `target` with u's slot i going to slot `assignment[i]`;
/// unassigned target slots get the unit word. Throws SignatureMismatch.
NcElement embed(const NcElement& u, const Signature& target, std::span<const std::size_t> assignment);

/// Applies a slot permutation: result slot i is u's slot `order[i]`.
NcElement permute_slots(const NcElement& u, std::span<const std::size_t> order);

/// Replaces slots [first, first+count) of every term by f(those words),
/// which lives in `image`; `image` may be empty (a scalar-valued map) or
/// longer than `count`. Results of f are cached per distinct argument.
NcElement map_slots(const NcElement& u, std::size_t first, std::size_t count, const Signature& image,
                    const std::function<NcElement(std::span<const Word>)>& f);

/// Grouping of flat slots into contiguous tensor factors, e.g. {2,2} reads
/// H(x)B(x)H(x)B as (H(x)B)(x)(H(x)B).
struct Grouping {
  std::vector<std::size_t> blocks;

  std::size_t total() const;
  friend bool operator==(const Grouping&, const Grouping&) = default;
};

/// An element together with a grouping of its slots.
struct GroupedElement {
  NcElement element;
  Grouping grouping;
};

/// Regroups without touching terms. Throws BadGrouping when blocks are empty
/// or do not cover the slots exactly.
GroupedElement split(const NcElement& u, const Grouping& grouping);
/// Forgets the grouping (every slot its own factor).
NcElement flatten(const GroupedElement& g);

/// Extracts the slots of one block as an element in its own signature.
/// Requires a valid grouping.
std::vector<Signature> block_signatures(const GroupedElement& g);

/// Formats a single slot word; helper shared by printers.
std::string format_tensor_word(const Signature& signature, const TensorWord& word);

}  // namespace braidkit
