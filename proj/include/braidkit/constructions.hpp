#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/comodule.hpp"
#include "braidkit/hopf.hpp"

namespace braidkit {

/// Right adjoint coaction h -> sum h2 (x) (S h1) h3, normalized in H(x)H.
NcElement adjoint_coaction(const HopfAlgebra& h, const NcElement& u);

/// The transmuted product h·g = sum h2 g2 R((S h1) h3 (x) S g1), normalized in H.
NcElement transmuted_product(const DqtHopf& h, const NcElement& u, const NcElement& v);

/// Evaluates an element written in another alphabet inside B(H,H): each
/// letter goes to its image under `letters`, words multiply with the
/// transmuted product.
NcElement transmuted_eval(const DqtHopf& h, const NcElement& u, const std::map<GenId, NcElement>& letters);

/// b◁h on words, normalized in B.
using ActionFn = std::function<NcElement(const Word& b, const Word& h)>;

/// Extends an action given on generator pairs as a right module algebra
/// action; throws MissingEntry for pairs absent from the table.
ActionFn table_action(std::shared_ptr<const HopfAlgebra> h, std::shared_ptr<const ComoduleAlgebra> b,
                      std::map<std::pair<GenId, GenId>, NcElement> table);

/// The induced action b◁h = sum b^(1) R(b^(2)(x)h).
ActionFn induced_action_fn(std::shared_ptr<const ComoduleAlgebra> b);

/// One failed generator pair of the crossed-module condition.
struct CrossedModuleResidual {
  GenId b;
  GenId h;
  NcElement residual;  // lhs - rhs in B(x)H
};

/// Residuals of sum v^(1)◁h1 (x) v^(2)h2 = sum (v◁h2)^(1) (x) h1 (v◁h2)^(2) over all
/// generator pairs, in pair order; zero residuals included.
std::vector<CrossedModuleResidual> crossed_module_residuals(const ComoduleAlgebra& b, const ActionFn& act);

/// Smash product and smash coproduct on H(x)B: the bosonisation when the
/// action is induced from R, a biproduct when it is supplied.
///
///   (h(x)b)(g(x)c) = sum h g1 (x) (b◁g2) c
///   Δ(h(x)b)       = sum h1 (x) b1^(1) (x) h2 b1^(2) (x) b2
class SmashHopf {
 public:
  SmashHopf(std::shared_ptr<const BraidedHopf> b, ActionFn act);

  const DqtHopf& hopf() const noexcept { return b_->over(); }
  const BraidedHopf& braided() const noexcept { return *b_; }
  /// {H, B}
  Signature signature() const;
  /// {H, B, H, B}
  Signature coproduct_signature() const;

  NcElement from_hopf(const NcElement& h) const;
  NcElement from_braided(const NcElement& b) const;

  NcElement act(const NcElement& b, const NcElement& h) const;
  NcElement normal_form(const NcElement& u) const;
  NcElement product(const NcElement& u, const NcElement& v) const;
  NcElement coproduct(const NcElement& u) const;
  Scalar counit(const NcElement& u) const;

  /// Antipode from the generator table solved by solve_antipode(); throws
  /// MissingEntry before that.
  NcElement antipode(const NcElement& u) const;

  struct AntipodeSolution {
    std::map<GenId, NcElement> values;  // S(1(x)x) per generator x of B
    bool unique = false;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
  };
  /// Solves both antipode axioms for S(1(x)x) over the span of normal H-words
  /// of length <= h_length times normal B-words of length <= 1. Throws
  /// SingularSystem when no Laurent solution exists in that span.
  const AntipodeSolution& solve_antipode(std::size_t h_length = 2);
  const std::optional<AntipodeSolution>& antipode_solution() const noexcept { return antipode_; }

 private:
  NcElement product_words(const TensorWord& u, const TensorWord& v) const;
  NcElement antipode_braided_word(const Word& b) const;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<TensorWord, TensorWord>, NcElement> products;
  };

  std::shared_ptr<const BraidedHopf> b_;
  ActionFn act_;
  std::optional<AntipodeSolution> antipode_;
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

/// Bosonisation H·⋉B with the induced action. Throws CrossedModuleViolation
/// when the induced data fail the crossed-module condition.
SmashHopf bosonise(std::shared_ptr<const BraidedHopf> b);

/// Biproduct from an explicitly supplied action. Throws
/// CrossedModuleViolation naming the first failing generator pair.
SmashHopf biproduct(std::shared_ptr<const BraidedHopf> b, ActionFn act);

/// B(H,H)⋉B: the braided tensor product algebra of the transmutation B(H,H)
/// (carried by H's vector space) with B, and the smash coproduct evaluated
/// with the transmuted product and the braiding of B(H,H) past B:
///
///   (h(x)b)(g(x)c) = sum h·g^(1) (x) b^(1) c R(b^(2)(x)g^(2))
///   Δ(h(x)b)       = sum h1 (x) Ψ(h2 (x) b1^(1))·b1^(2) (x) b2
class BraidedSmash {
 public:
  explicit BraidedSmash(std::shared_ptr<const BraidedHopf> b);

  const DqtHopf& hopf() const noexcept { return b_->over(); }
  const BraidedHopf& braided() const noexcept { return *b_; }
  Signature signature() const;
  Signature coproduct_signature() const;

  NcElement from_hopf(const NcElement& h) const;
  NcElement from_braided(const NcElement& b) const;

  NcElement normal_form(const NcElement& u) const;
  NcElement product(const NcElement& u, const NcElement& v) const;
  NcElement coproduct(const NcElement& u) const;
  Scalar counit(const NcElement& u) const;

 private:
  std::shared_ptr<const BraidedHopf> b_;
};

}  // namespace braidkit
