#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "braidkit/hopf.hpp"

namespace braidkit {

/// Linear solves that regenerate derived structure tables from printed data.

struct RTableSolution {
  RTable table;
  bool unique = false;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

/// Solves R on pairs of H-generators from a prescribed braiding of a
/// comodule V on generator pairs.
///
/// `coaction` maps each generator of V to an element of V(x)H whose H-legs
/// are single generators; the unknowns are R(s(x)t) for every pair of such
/// letters. `braiding` gives Ψ(v(x)w) in V(x)V for each pair listed; the
/// equations are Ψ(v(x)w) = sum w^(1)(x)v^(1) R(v^(2)(x)w^(2)), matched
/// coefficientwise in normal form. Throws SingularSystem when inconsistent
/// or when a value is not a Laurent polynomial.
RTableSolution solve_r_table(const Presentation& v, const Alphabet& h, const std::map<GenId, NcElement>& coaction,
                             const std::map<std::pair<GenId, GenId>, NcElement>& braiding);

struct AntipodeTableSolution {
  std::map<GenId, NcElement> values;  // S(x) per generator, normalized
  bool unique = false;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

/// Solves S on generators from ·(S(x)id)Δx = ε(x) = ·(id(x)S)Δx, with
/// S(x) an unknown combination of normal words of length <= max_length for
/// every generator without an entry in `fixed`. Coproduct legs carrying an
/// unknown must be single generators. Only the generator-level axioms are
/// imposed; no braiding enters them.
AntipodeTableSolution solve_antipode_table(const Presentation& b, const std::map<GenId, NcElement>& coproduct,
                                           const std::map<GenId, Scalar>& counit,
                                           const std::map<GenId, NcElement>& fixed, std::size_t max_length);

}  // namespace braidkit
