#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "braidkit/comodule.hpp"
#include "braidkit/hopf.hpp"
#include "braidkit/parse.hpp"
#include "braidkit/rewrite.hpp"

namespace braidkit {

/// One `key = value   # note` line of a section. For [relations] the key
/// is the left-hand side; for [generators] the key holds the names.
struct DefEntry {
  std::string key;
  std::string value;
  std::string note;
  SourcePos key_pos;
  SourcePos value_pos;
};

struct DefSection {
  std::string name;                            // "relations", "coaction", ...
  std::map<std::string, std::string> attrs;    // e.g. over=glq2
  std::vector<DefEntry> entries;
  SourcePos pos;
};

/// Raw contents of one `[algebra NAME]` block.
struct Definition {
  std::string name;
  std::vector<DefSection> sections;
  SourcePos pos;

  const DefSection* find(std::string_view section) const;
};

/// Splits a definition file into blocks. Throws ParseError(SyntaxError).
std::vector<Definition> parse_definition_text(std::string_view text);

enum class BundleKind { Algebra, Hopf, DqtHopf, ComoduleAlgebra, BraidedHopf };
const char* to_string(BundleKind kind);

/// Right action b◁h of H on B given on generator pairs, extended as a
/// module algebra: (bc)◁h = sum (b◁h1)(c◁h2) and b◁(hg) = (b◁h)◁g.
struct ActionTable {
  std::map<std::pair<GenId, GenId>, NcElement> entries;  // (b, h) -> element of B
};

struct Bundle;
using BundlePtr = std::shared_ptr<const Bundle>;

/// Everything built from one block.
struct Bundle {
  std::string name;
  BundleKind kind = BundleKind::Algebra;
  PresentationPtr algebra;
  ConfluenceReport confluence;
  std::shared_ptr<const HopfAlgebra> hopf;          // Hopf, DqtHopf
  std::shared_ptr<const DqtHopf> dqt;                // DqtHopf
  std::shared_ptr<const ComoduleAlgebra> comodule;   // ComoduleAlgebra, BraidedHopf
  std::shared_ptr<const BraidedHopf> braided;        // BraidedHopf
  BundlePtr over;                                    // base of coaction / action / identification
  std::optional<ActionTable> action;
  std::map<GenId, NcElement> identification;          // letter -> element of `over`
  Definition canonical;                               // what export prints
};

/// Finds a bundle by name when a block says over=NAME.
using BundleResolver = std::function<BundlePtr(const std::string&)>;

/// Builds one block; `resolve` looks up algebras named by over=.
/// Throws ParseError (SyntaxError, UnknownGenerator, SignatureMismatch) and
/// the errors of completion.
BundlePtr build_bundle(const Definition& def, const BundleResolver& resolve);

/// Parses and builds every block of a file. over= resolves to earlier blocks
/// first and then to `fallback`.
std::vector<BundlePtr> load_definitions(std::string_view text, const BundleResolver& fallback);

/// Canonical text of one block.
std::string export_definition(const Bundle& bundle);
/// The bundle preceded by everything it depends on, dependencies first.
std::string export_with_dependencies(const Bundle& bundle);

}  // namespace braidkit
