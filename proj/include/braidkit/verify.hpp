#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidkit/comodule.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/hopf.hpp"

namespace braidkit {

/// One line of a verification report. `residual` is the normalized
/// difference of the two sides ("0" on pass); for checks that bundle many
/// identities it is the first nonzero one, prefixed by its instance.
struct Check {
  std::string suite;
  std::string id;
  bool pass = false;
  std::string residual;
  std::size_t identities = 1;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  std::size_t failures() const;
  /// "suite id PASS|FAIL residual", one line per check.
  std::string to_text() const;
  void append(const Report& other);
};

struct VerifyOptions {
  std::size_t pairing_length = 2;   // words fed to the R laws
  std::size_t antipode_length = 3;  // words fed to the antipode axiom
};

/// Δ, ε, S kill the defining relations; coassociativity and counit axiom on
/// generators; antipode axiom on normal words; S(nf(gh)) = S(h)S(g).
Report verify_hopf(const HopfAlgebra& h, const VerifyOptions& options = {});

/// The three pairing laws, R killing relations under both evaluation
/// orders, and the convolution-inverse identity on generator pairs.
Report verify_dqt(const DqtHopf& h, const VerifyOptions& options = {});

/// β kills relations, is coassociative and counital on generators.
Report verify_comodule(const ComoduleAlgebra& b, const VerifyOptions& options = {});

/// The comodule checks, then: Δ_B, ε_B, S_B kill relations (Δ_B in the
/// braided square); braided coassociativity and counit axiom on generators;
/// antipode axiom on normal words; S_B on generator products against the
/// R-form product law; braid relation on generator triples; Ψ∘Ψ^-1 = id on
/// generator pairs.
Report verify_braided_hopf(const BraidedHopf& b, const VerifyOptions& options = {});

/// The crossed-module condition on every generator pair.
Report verify_crossed_module(const ComoduleAlgebra& b, const ActionFn& act);

}  // namespace braidkit
