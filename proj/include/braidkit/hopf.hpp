#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "braidkit/ncpoly.hpp"
#include "braidkit/rewrite.hpp"

namespace braidkit {

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Generator images of the Hopf structure maps. Coproduct entries live in
/// H(x)H, antipode entries in H.
struct HopfTables {
  std::map<GenId, NcElement> coproduct;
  std::map<GenId, Scalar> counit;
  std::map<GenId, NcElement> antipode;
};

/// A presented Hopf algebra: Δ and ε extend multiplicatively, S
/// anti-multiplicatively. Nothing here checks the axioms; see verify.hpp.
class HopfAlgebra {
 public:
  /// Throws MissingEntry when a generator lacks a coproduct, counit or antipode entry.
  HopfAlgebra(PresentationPtr algebra, HopfTables tables);
  virtual ~HopfAlgebra() = default;

  const Presentation& algebra() const noexcept { return *algebra_; }
  const PresentationPtr& algebra_ptr() const noexcept { return algebra_; }
  const Alphabet& alphabet() const noexcept { return algebra_->alphabet(); }
  Signature signature(std::size_t slots = 1) const { return algebra_->signature(slots); }
  const HopfTables& tables() const noexcept { return tables_; }

  /// Δ on a word by the free multiplicative extension (not normalized).
  NcElement coproduct_word(const Word& w) const;
  /// Normalized Δu for u in H.
  NcElement coproduct(const NcElement& u) const;
  /// (Δ(x)id...)Δ applied until u has `legs` slots; normalized.
  NcElement iterated_coproduct(const NcElement& u, std::size_t legs) const;

  Scalar counit_word(const Word& w) const;
  Scalar counit(const NcElement& u) const;

  /// Normalized S on a word (anti-multiplicative extension).
  NcElement antipode_word(const Word& w) const;
  NcElement antipode(const NcElement& u) const;

  bool is_grouplike(GenId g) const;
  /// For a grouplike generator g' whose antipode is another grouplike
  /// generator g, returns g; nullopt otherwise.
  std::optional<GenId> grouplike_inverse_of(GenId g) const;

  /// Replaces the tables (used by mutation tests).
  virtual void set_tables(HopfTables tables);

 protected:
  void check_complete() const;

  PresentationPtr algebra_;
  HopfTables tables_;
};

/// Order in which eval_R splits its arguments. Both must agree on a
/// well-defined R; the verifier compares them.
enum class RStrategy {
  PeelSecond,  // R(h(x)gf) = sum R(h1(x)f) R(h2(x)g) first
  PeelFirst,   // R(fg(x)h) = sum R(f(x)h1) R(g(x)h2) first
};

using RTable = std::map<std::pair<GenId, GenId>, Scalar>;

/// Hopf algebra with a dual-quasitriangular functional R given on
/// generator pairs.
///
/// Pairs missing from the table are resolved, in order, by expanding a
/// generator that is defined by a relation (like C), by inverting the value
/// on grouplike partners, and by R(g'(x)y) = R(g(x)Sy), R(x(x)g') = R(Sx(x)g)
/// for g' the inverse of a grouplike g.
class DqtHopf : public HopfAlgebra {
 public:
  DqtHopf(PresentationPtr algebra, HopfTables tables, RTable r);

  const RTable& r_table() const noexcept { return r_; }
  void set_r_table(RTable r);
  void set_tables(HopfTables tables) override;

  /// R on two words. Throws MissingEntry.
  Scalar eval_R(const Word& u, const Word& v, RStrategy strategy = RStrategy::PeelSecond) const;
  Scalar eval_R(const NcElement& u, const NcElement& v, RStrategy strategy = RStrategy::PeelSecond) const;
  /// R applied to a two-slot element of H(x)H.
  Scalar eval_R(const NcElement& uv, RStrategy strategy = RStrategy::PeelSecond) const;

  /// Convolution inverse, R(Su(x)v).
  Scalar eval_R_inverse(const Word& u, const Word& v) const;
  Scalar eval_R_inverse(const NcElement& u, const NcElement& v) const;

 private:
  Scalar eval_pair(GenId a, GenId b, RStrategy strategy) const;
  Scalar eval_word_element(const Word& u, const NcElement& v, RStrategy strategy) const;
  Scalar eval_element_word(const NcElement& u, const Word& v, RStrategy strategy) const;
  bool is_primary(GenId g) const;

  RTable r_;
  std::map<GenId, NcElement> definitions_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Word, Word>, Scalar> memo_[2];
};

}  // namespace braidkit
