#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/deffile.hpp"
#include "braidkit/oracle.hpp"

namespace braidkit::catalog {

/// Built-in entries in load order: glq2 bglq2 aq2 z2prime superline zgrade braidedline.
const std::vector<std::string>& names();

/// Definition-file text of one entry (without its dependencies). Throws UnknownEntry.
std::string_view source(std::string_view name);

/// Builds (once) and returns an entry; over= names resolve inside the
/// catalog. Loading does not run the verify suites. Throws UnknownEntry.
BundlePtr load(std::string_view name);

/// Resolver for definition files that name catalog entries in over=.
BundlePtr resolve(const std::string& name);

// Regeneration oracles for the tables shipped as derived data.

/// The printed braiding of the quantum plane on generator pairs, in aq2(x)aq2.
std::map<std::pair<GenId, GenId>, NcElement> plane_braiding();

/// Solves the glq2 R table from the aq2 coaction and plane_braiding().
RTableSolution regenerate_glq2_r_table();

/// The bglq2 coaction: the adjoint coaction of glq2 with its first leg
/// carried over by the identification (alpha -> a, ..., C -> D).
std::map<GenId, NcElement> regenerate_bglq2_coaction();

/// Solves S on a, b, c, d of bglq2 from its matrix coproduct, with
/// S(D) = Dinv and S(Dinv) = D fixed.
AntipodeTableSolution regenerate_bglq2_antipode();

}  // namespace braidkit::catalog
