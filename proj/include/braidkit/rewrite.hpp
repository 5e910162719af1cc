#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "braidkit/ncpoly.hpp"

namespace braidkit {

/// lhs -> rhs with every word of rhs strictly below lhs in degree-lex order.
struct RewriteRule {
  Word lhs;
  NcElement rhs;  // one slot, same alphabet
};

/// A defining relation as written, lhs = rhs, with an optional provenance note.
struct Relation {
  NcElement lhs;
  NcElement rhs;
  std::string note;

  NcElement difference() const { return lhs - rhs; }
};

/// Choice of redex when a word contains several.
enum class Strategy {
  LeftmostOutermost,  // smallest start position, longest match
  LeftmostInnermost,  // smallest end position, shortest match
};

struct RewriteOptions {
  std::size_t step_budget = 1'000'000;
  std::size_t degree_bound = 4;
};

class Presentation;

/// Outcome of a bounded completion run.
struct ConfluenceReport {
  std::string algebra;
  std::size_t degree_bound = 0;
  std::size_t initial_rules = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_beyond_bound = 0;
  std::vector<std::string> rules_added;
  std::vector<std::string> final_rules;

  /// Every critical pair up to the bound resolves and none lies beyond it.
  bool confluent() const { return pairs_beyond_bound == 0; }
  std::string to_string() const;
};

/// Generators + oriented rewrite rules, defining an associative unital
/// algebra by normal forms.
class Presentation {
 public:
  /// Orients `relations` by the term order and inter-reduces them; no
  /// critical pairs are resolved until complete() runs.
  Presentation(AlphabetPtr alphabet, std::vector<Relation> relations, RewriteOptions options = {});

  static Presentation free(AlphabetPtr alphabet, RewriteOptions options = {});

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  Signature signature(std::size_t slots = 1) const { return Signature(slots, alphabet_.get()); }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  /// Rule indices bucketed by the first letter of their lhs.
  const std::vector<std::vector<std::size_t>>& rule_index() const noexcept { return rules_by_first_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const RewriteOptions& options() const noexcept { return options_; }

  /// Generator by name; throws UnknownGenerator.
  NcElement gen(std::string_view name) const;
  GenId gen_id(std::string_view name) const;

  /// Reduces every slot (all slots must carry this alphabet).
  /// Throws NonTerminating when the step budget runs out.
  NcElement normal_form(const NcElement& u, Strategy strategy = Strategy::LeftmostOutermost) const;
  bool is_zero(const NcElement& u) const { return normal_form(u).is_zero(); }
  /// Normal form of u*v.
  NcElement multiply(const NcElement& u, const NcElement& v) const { return normal_form(tensor_mul(u, v)); }

  /// True when no rule's lhs occurs in the word.
  bool is_normal(const Word& w) const;

  /// All normal words of length <= max_length, degree-lex ascending.
  std::vector<Word> normal_words(std::size_t max_length) const;

  /// Relations of the form g = (expression without g), keyed by g.
  std::map<GenId, NcElement> definitions() const;

  std::string rule_string(const RewriteRule& rule) const;

 private:
  friend std::pair<Presentation, ConfluenceReport> complete(const Presentation&);
  Presentation() = default;

  AlphabetPtr alphabet_;
  std::vector<Relation> relations_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> rules_by_first_;
  RewriteOptions options_;

  void index_rules();
};

/// Resolves critical pairs with overlap word length <= degree bound,
/// adjoining every non-resolving pair as a new rule, to a fixpoint.
/// Throws CompletionBudgetExceeded or UnorientablePair.
std::pair<Presentation, ConfluenceReport> complete(const Presentation& p);

/// Slotwise normal form where slot i uses per_slot[i] (nullptr = free).
NcElement normal_form(const NcElement& u, std::span<const Presentation* const> per_slot,
                      Strategy strategy = Strategy::LeftmostOutermost, std::size_t step_budget = 1'000'000);

}  // namespace braidkit
