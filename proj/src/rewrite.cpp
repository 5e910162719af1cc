#include "braidkit/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

struct Redex {
  std::size_t position;
  std::size_t rule;
};

std::optional<Redex> find_redex(const std::vector<RewriteRule>& rules,
                                const std::vector<std::vector<std::size_t>>& by_first, const Word& w,
                                Strategy strategy) {
  std::optional<Redex> best;
  std::size_t best_end = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (strategy == Strategy::LeftmostOutermost && best) break;
    if (strategy == Strategy::LeftmostInnermost && best && p >= best_end) break;
    const GenId first = w[p];
    if (first >= by_first.size()) continue;
    for (std::size_t r : by_first[first]) {
      const Word& lhs = rules[r].lhs;
      if (p + lhs.size() > w.size()) continue;
      if (w.compare(p, lhs.size(), lhs) != 0) continue;
      const std::size_t end = p + lhs.size();
      if (strategy == Strategy::LeftmostOutermost) {
        if (!best || lhs.size() > rules[best->rule].lhs.size()) best = Redex{p, r};
      } else if (!best || end < best_end) {
        best = Redex{p, r};
        best_end = end;
      }
    }
  }
  return best;
}

struct TensorWordGreater {
  bool operator()(const TensorWord& a, const TensorWord& b) const { return TensorWordLess{}(b, a); }
};

/// Rule tables a slot reduces against.
struct SlotRules {
  const std::vector<RewriteRule>* rules = nullptr;
  const std::vector<std::vector<std::size_t>>* by_first = nullptr;
};

NcElement reduce(const NcElement& u, std::span<const SlotRules> slot_rules, Strategy strategy, std::size_t budget) {
  NcElement out(u.signature());
  std::map<TensorWord, Scalar, TensorWordGreater> todo(u.terms().begin(), u.terms().end());
  std::size_t steps = 0;
  while (!todo.empty()) {
    auto node = todo.extract(todo.begin());
    TensorWord& word = node.key();
    const Scalar& coeff = node.mapped();
    bool reduced = false;
    for (std::size_t slot = 0; slot < word.size() && !reduced; ++slot) {
      const SlotRules& sr = slot_rules[slot];
      if (!sr.rules || sr.rules->empty()) continue;
      auto redex = find_redex(*sr.rules, *sr.by_first, word[slot], strategy);
      if (!redex) continue;
      if (++steps > budget) {
        throw Error(ErrorKind::NonTerminating, "normal form exceeded " + std::to_string(budget) + " reduction steps");
      }
      const RewriteRule& rule = (*sr.rules)[redex->rule];
      const Word prefix = word[slot].substr(0, redex->position);
      const Word suffix = word[slot].substr(redex->position + rule.lhs.size());
      for (const auto& [rw, rc] : rule.rhs.terms()) {
        TensorWord next = word;
        next[slot] = prefix + rw[0] + suffix;
        Scalar c = coeff * rc;
        auto [it, inserted] = todo.try_emplace(std::move(next), c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) todo.erase(it);
        }
      }
      reduced = true;
    }
    if (!reduced) out.add_term(std::move(word), coeff);
  }
  return out;
}

std::vector<std::vector<std::size_t>> index_by_first(const std::vector<RewriteRule>& rules, std::size_t alphabet_size) {
  std::vector<std::vector<std::size_t>> by_first(alphabet_size);
  for (std::size_t i = 0; i < rules.size(); ++i) by_first[rules[i].lhs.front()].push_back(i);
  return by_first;
}

/// Divides out the gcd of all coefficients (a nonzero constant for generic q).
NcElement primitive_part(const NcElement& d) {
  Scalar g;
  for (const auto& [w, c] : d.terms()) g = scalar_gcd(g, c);
  if (g.is_zero() || g.is_one()) return d;
  NcElement out(d.signature());
  for (const auto& [w, c] : d.terms()) out.add_term(w, *divide_exact(c, g));
  return out;
}

/// Turns a nonzero one-slot element into a rule for its leading word.
RewriteRule orient(const NcElement& relation, const Alphabet& alphabet) {
  const NcElement d = primitive_part(relation);
  const auto& [lead_word, lead_coeff] = *d.terms().rbegin();
  const Word& lhs = lead_word[0];
  if (lhs.empty()) {
    throw Error(ErrorKind::UnorientablePair, "relation reduces to a nonzero scalar " + d.to_string() + " = 0");
  }
  if (!lead_coeff.is_unit_monomial()) {
    throw Error(ErrorKind::UnorientablePair, "leading coefficient of " + d.to_string() + " (word " +
                                                 alphabet.format(lhs) + ") is not a unit");
  }
  const Scalar inv = lead_coeff.inverse();
  NcElement rhs(d.signature());
  for (const auto& [w, c] : d.terms()) {
    if (w[0] == lhs) continue;
    rhs.add_term(w, -(c * inv));
  }
  return RewriteRule{lhs, std::move(rhs)};
}

bool contains(const Word& haystack, const Word& needle) { return haystack.find(needle) != Word::npos; }

struct TrackedRule {
  RewriteRule rule;
  std::size_t id;
  bool from_pair;
};

class Completion {
 public:
  Completion(const Alphabet& alphabet, const RewriteOptions& options) : alphabet_(alphabet), options_(options) {}

  void push(NcElement d, bool from_pair) { pending_.emplace_back(std::move(d), from_pair); }

  /// Orients all pending relations, keeping the system inter-reduced.
  void drain() {
    while (!pending_.empty()) {
      auto [d, from_pair] = std::move(pending_.front());
      pending_.pop_front();
      refresh_index();
      d = nf(d);
      if (d.is_zero()) continue;
      RewriteRule rule = orient(d, alphabet_);
      for (auto it = rules_.begin(); it != rules_.end();) {
        if (contains(it->rule.lhs, rule.lhs)) {
          pending_.emplace_back(NcElement::term(d.signature(), {it->rule.lhs}) - it->rule.rhs, it->from_pair);
          it = rules_.erase(it);
        } else {
          ++it;
        }
      }
      rules_.push_back({std::move(rule), next_id_++, from_pair});
      if (rules_.size() > kMaxRules) {
        throw Error(ErrorKind::CompletionBudgetExceeded, "more than " + std::to_string(kMaxRules) + " rules");
      }
      refresh_index();
      for (auto& r : rules_) r.rule.rhs = nf(r.rule.rhs);
    }
    refresh_index();
  }

  /// Checks all unchecked critical pairs; returns false when nothing new was found.
  bool resolve_pairs(ConfluenceReport& report) {
    bool added = false;
    const std::vector<TrackedRule> snapshot = rules_;
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        const Word& la = a.rule.lhs;
        const Word& lb = b.rule.lhs;
        for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
          if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
          auto key = std::make_tuple(a.id, b.id, k);
          if (!seen_.insert(key).second) continue;
          const Word overlap = la + lb.substr(k);
          if (overlap.size() > options_.degree_bound) {
            ++report.pairs_beyond_bound;
            continue;
          }
          ++report.pairs_checked;
          if (++pairs_total_ > kMaxPairs) {
            throw Error(ErrorKind::CompletionBudgetExceeded, "more than " + std::to_string(kMaxPairs) + " pairs");
          }
          const Signature sig{&alphabet_};
          NcElement left = tensor_mul(a.rule.rhs, NcElement::term(sig, {lb.substr(k)}));
          NcElement right = tensor_mul(NcElement::term(sig, {la.substr(0, la.size() - k)}), b.rule.rhs);
          NcElement diff = nf(left) - nf(right);
          if (!diff.is_zero()) {
            push(std::move(diff), true);
            added = true;
          }
        }
      }
    }
    return added;
  }

  const std::vector<TrackedRule>& rules() const { return rules_; }

 private:
  static constexpr std::size_t kMaxRules = 2000;
  static constexpr std::size_t kMaxPairs = 200000;

  void refresh_index() {
    plain_.clear();
    for (const auto& r : rules_) plain_.push_back(r.rule);
    by_first_ = index_by_first(plain_, alphabet_.size());
  }

  NcElement nf(const NcElement& u) const {
    SlotRules sr{&plain_, &by_first_};
    return reduce(u, std::span<const SlotRules>(&sr, 1), Strategy::LeftmostOutermost, options_.step_budget);
  }

  const Alphabet& alphabet_;
  RewriteOptions options_;
  std::deque<std::pair<NcElement, bool>> pending_;
  std::vector<TrackedRule> rules_;
  std::vector<RewriteRule> plain_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_;
  std::size_t next_id_ = 0;
  std::size_t pairs_total_ = 0;
};

std::vector<RewriteRule> sorted_rules(const std::vector<TrackedRule>& tracked) {
  std::vector<RewriteRule> out;
  for (const auto& t : tracked) out.push_back(t.rule);
  std::sort(out.begin(), out.end(), [](const RewriteRule& a, const RewriteRule& b) { return word_less(a.lhs, b.lhs); });
  return out;
}

}  // namespace

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Relation> relations, RewriteOptions options)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), options_(options) {
  Completion c(*alphabet_, options_);
  for (const auto& r : relations_) c.push(r.difference(), false);
  c.drain();
  rules_ = sorted_rules(c.rules());
  index_rules();
}

Presentation Presentation::free(AlphabetPtr alphabet, RewriteOptions options) {
  return Presentation(std::move(alphabet), {}, options);
}

void Presentation::index_rules() { rules_by_first_ = index_by_first(rules_, alphabet_->size()); }

GenId Presentation::gen_id(std::string_view name) const {
  auto id = alphabet_->find(name);
  if (!id) {
    throw Error(ErrorKind::UnknownGenerator, "'" + std::string(name) + "' is not a generator of " + alphabet_->name());
  }
  return *id;
}

NcElement Presentation::gen(std::string_view name) const { return NcElement::generator(*alphabet_, gen_id(name)); }

NcElement Presentation::normal_form(const NcElement& u, Strategy strategy) const {
  if (u.is_zero()) return u;
  for (const Alphabet* a : u.signature()) {
    if (a != alphabet_.get()) {
      throw Error(ErrorKind::SignatureMismatch, "element is not in " + alphabet_->name());
    }
  }
  std::vector<SlotRules> sr(u.slots(), SlotRules{&rules_, &rules_by_first_});
  return reduce(u, sr, strategy, options_.step_budget);
}

bool Presentation::is_normal(const Word& w) const {
  return !find_redex(rules_, rules_by_first_, w, Strategy::LeftmostOutermost).has_value();
}

std::vector<Word> Presentation::normal_words(std::size_t max_length) const {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t g = 0; g < alphabet_->size(); ++g) {
        Word ext = w + static_cast<GenId>(g);
        if (is_normal(ext)) next.push_back(std::move(ext));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::map<GenId, NcElement> Presentation::definitions() const {
  std::map<GenId, NcElement> out;
  auto single_generator = [](const NcElement& e) -> std::optional<GenId> {
    if (e.size() != 1) return std::nullopt;
    const auto& [w, c] = *e.terms().begin();
    if (!c.is_one() || w[0].size() != 1) return std::nullopt;
    return w[0][0];
  };
  auto mentions = [](const NcElement& e, GenId g) {
    for (const auto& [w, c] : e.terms()) {
      if (w[0].find(g) != Word::npos) return true;
    }
    return false;
  };
  for (const auto& r : relations_) {
    if (auto g = single_generator(r.lhs); g && !mentions(r.rhs, *g)) {
      out.emplace(*g, r.rhs);
    } else if (auto h = single_generator(r.rhs); h && !mentions(r.lhs, *h)) {
      out.emplace(*h, r.lhs);
    }
  }
  return out;
}

std::string Presentation::rule_string(const RewriteRule& rule) const {
  return alphabet_->format(rule.lhs) + " -> " + rule.rhs.to_string();
}

std::string ConfluenceReport::to_string() const {
  std::ostringstream os;
  os << "algebra " << algebra << '\n';
  os << "degree_bound " << degree_bound << '\n';
  os << "initial_rules " << initial_rules << '\n';
  os << "pairs_checked " << pairs_checked << '\n';
  os << "pairs_beyond_bound " << pairs_beyond_bound << '\n';
  os << "confluent " << (confluent() ? "yes" : "no") << '\n';
  os << "rules_added " << rules_added.size() << '\n';
  for (const auto& r : rules_added) os << "  + " << r << '\n';
  os << "final_rules " << final_rules.size() << '\n';
  for (const auto& r : final_rules) os << "  " << r << '\n';
  return os.str();
}

std::pair<Presentation, ConfluenceReport> complete(const Presentation& p) {
  Completion c(p.alphabet(), p.options());
  for (const auto& r : p.relations()) c.push(r.difference(), false);
  c.drain();

  ConfluenceReport report;
  report.algebra = p.alphabet().name();
  report.degree_bound = p.options().degree_bound;
  report.initial_rules = c.rules().size();
  while (c.resolve_pairs(report)) c.drain();

  Presentation out;
  out.alphabet_ = p.alphabet_ptr();
  out.relations_ = p.relations();
  out.options_ = p.options();
  out.rules_ = sorted_rules(c.rules());
  out.index_rules();

  for (const auto& r : out.rules_) report.final_rules.push_back(out.rule_string(r));
  std::vector<RewriteRule> added;
  for (const auto& t : c.rules()) {
    if (t.from_pair) added.push_back(t.rule);
  }
  std::sort(added.begin(), added.end(), [](const RewriteRule& a, const RewriteRule& b) { return word_less(a.lhs, b.lhs); });
  for (const auto& r : added) report.rules_added.push_back(out.rule_string(r));
  return {std::move(out), std::move(report)};
}

NcElement normal_form(const NcElement& u, std::span<const Presentation* const> per_slot, Strategy strategy,
                      std::size_t step_budget) {
  if (per_slot.size() != u.slots()) throw Error(ErrorKind::SignatureMismatch, "normal_form: wrong slot count");
  if (u.is_zero()) return u;
  std::vector<SlotRules> sr(u.slots());
  for (std::size_t i = 0; i < per_slot.size(); ++i) {
    if (!per_slot[i]) continue;
    if (&per_slot[i]->alphabet() != u.signature()[i]) {
      throw Error(ErrorKind::SignatureMismatch, "normal_form: slot " + std::to_string(i) + " has a different algebra");
    }
    sr[i] = SlotRules{&per_slot[i]->rules(), &per_slot[i]->rule_index()};
  }
  return reduce(u, sr, strategy, step_budget);
}

}  // namespace braidkit
