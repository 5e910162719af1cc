#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "braidkit/hopf.hpp"

namespace braidkit {

using DqtHopfPtr = std::shared_ptr<const DqtHopf>;

/// Right comodule algebra over a dqt Hopf algebra H. The coaction table
/// gives β on generators (values in B(x)H) and extends multiplicatively.
class ComoduleAlgebra {
 public:
  /// Throws MissingEntry when a generator has no coaction entry.
  ComoduleAlgebra(PresentationPtr algebra, std::map<GenId, NcElement> coaction, DqtHopfPtr over);
  virtual ~ComoduleAlgebra() = default;

  const Presentation& algebra() const noexcept { return *algebra_; }
  const PresentationPtr& algebra_ptr() const noexcept { return algebra_; }
  const Alphabet& alphabet() const noexcept { return algebra_->alphabet(); }
  Signature signature(std::size_t slots = 1) const { return algebra_->signature(slots); }
  const DqtHopf& over() const noexcept { return *over_; }
  const DqtHopfPtr& over_ptr() const noexcept { return over_; }
  /// The signature B(x)H of coaction values.
  Signature coaction_signature() const { return {&alphabet(), &over_->alphabet()}; }

  const std::map<GenId, NcElement>& coaction_table() const noexcept { return coaction_; }

  /// β on a word, not normalized.
  NcElement coact_word(const Word& w) const;
  /// Normalized β(u) in B(x)H.
  NcElement coact(const NcElement& u) const;

 protected:
  PresentationPtr algebra_;
  std::map<GenId, NcElement> coaction_;
  DqtHopfPtr over_;
};

/// Ψ(v(x)w) = sum w^(1)(x)v^(1) R(v^(2)(x)w^(2)), from V(x)W to W(x)V; normalized.
NcElement braiding(const ComoduleAlgebra& v, const ComoduleAlgebra& w, const NcElement& vw);

/// Ψ^-1(w(x)v) = sum v^(1)(x)w^(1) R^-1(v^(2)(x)w^(2)), from W(x)V to V(x)W.
NcElement inverse_braiding(const ComoduleAlgebra& v, const ComoduleAlgebra& w, const NcElement& wv);

/// b◁h = sum b^(1) R(b^(2)(x)h); normalized in B.
NcElement induced_action(const ComoduleAlgebra& v, const NcElement& b, const NcElement& h);

/// Braided Hopf algebra in the comodule category of its base Hopf algebra.
/// Δ_B is valued in the braided tensor square B(x)B and extends as an
/// algebra map to it; S_B extends braided-antimultiplicatively.
class BraidedHopf : public ComoduleAlgebra {
 public:
  struct Tables {
    std::map<GenId, NcElement> coproduct;  // B(x)B
    std::map<GenId, Scalar> counit;
    std::map<GenId, NcElement> antipode;   // B
  };

  BraidedHopf(PresentationPtr algebra, std::map<GenId, NcElement> coaction, DqtHopfPtr over, Tables tables);

  const Tables& tables() const noexcept { return tables_; }
  /// Replaces the tables (used by mutation tests); clears caches.
  void set_tables(Tables tables);

  /// Δ_B on a word: product of generator images in the braided square; normalized.
  NcElement coproduct_word(const Word& w) const;
  NcElement coproduct(const NcElement& u) const;

  Scalar counit_word(const Word& w) const;
  Scalar counit(const NcElement& u) const;

  /// S_B(vw) = ·Ψ(S_B v (x) S_B w), recursively on words; normalized.
  NcElement antipode_word(const Word& w) const;
  NcElement antipode(const NcElement& u) const;

 private:
  void check_complete() const;

  Tables tables_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Word, NcElement> coproduct_cache_;
  mutable std::map<Word, NcElement> antipode_cache_;
};

/// Braided tensor product algebra V_1(x)...(x)V_n. A product of two
/// elements moves letters of later factors left past earlier ones with Ψ,
/// then multiplies within each factor.
class BraidedTensorAlgebra {
 public:
  explicit BraidedTensorAlgebra(std::vector<const ComoduleAlgebra*> factors);

  Signature signature() const;
  std::size_t size() const noexcept { return factors_.size(); }

  /// Slotwise normal form.
  NcElement normal_form(const NcElement& u) const;
  NcElement product(const NcElement& u, const NcElement& v) const;

 private:
  std::vector<const ComoduleAlgebra*> factors_;
};

/// Product law for the braided antipode: S_B(bc) = sum (S_B c^(1))(S_B b^(1)) R(b^(2)(x)c^(2)).
NcElement antipode_product_law(const BraidedHopf& b, const NcElement& x, const NcElement& y);

}  // namespace braidkit
