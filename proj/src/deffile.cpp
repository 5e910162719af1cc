#include "braidkit/deffile.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

/// Trims in place, returning how many leading characters were dropped.
std::size_t trim(std::string_view& s) {
  std::size_t lead = 0;
  while (lead < s.size() && is_space(s[lead])) ++lead;
  s.remove_prefix(lead);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return lead;
}

std::vector<std::pair<std::string, int>> split_words(std::string_view s, int column) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.emplace_back(std::string(s.substr(start, i - start)), column + static_cast<int>(start));
  }
  return out;
}

}  // namespace

const DefSection* Definition::find(std::string_view section) const {
  for (const auto& s : sections) {
    if (s.name == section) return &s;
  }
  return nullptr;
}

std::vector<Definition> parse_definition_text(std::string_view text) {
  std::vector<Definition> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::string note;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view n = line.substr(hash + 1);
      trim(n);
      note = std::string(n);
      line = line.substr(0, hash);
    }
    std::string_view content = line;
    const int column = 1 + static_cast<int>(trim(content));
    if (content.empty()) {
      if (pos > text.size()) break;
      continue;
    }

    if (content.front() == '[') {
      if (content.back() != ']') {
        throw ParseError(ErrorKind::SyntaxError, "section header must end with ']'", line_no,
                         column + static_cast<int>(content.size()));
      }
      auto words = split_words(content.substr(1, content.size() - 2), column + 1);
      if (words.empty()) throw ParseError(ErrorKind::SyntaxError, "empty section header", line_no, column);
      if (words[0].first == "algebra") {
        if (words.size() != 2 || !is_identifier(words[1].first)) {
          throw ParseError(ErrorKind::SyntaxError, "expected [algebra NAME]", line_no, column);
        }
        out.push_back(Definition{words[1].first, {}, {line_no, column}});
        continue;
      }
      if (out.empty()) {
        throw ParseError(ErrorKind::SyntaxError, "section before any [algebra NAME] header", line_no, column);
      }
      DefSection section;
      section.name = words[0].first;
      section.pos = {line_no, column};
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& [w, col] = words[i];
        const auto eq = w.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == w.size()) {
          throw ParseError(ErrorKind::SyntaxError, "expected attribute key=value", line_no, col);
        }
        section.attrs[w.substr(0, eq)] = w.substr(eq + 1);
      }
      out.back().sections.push_back(std::move(section));
      continue;
    }

    if (out.empty() || out.back().sections.empty()) {
      throw ParseError(ErrorKind::SyntaxError, "entry outside a section", line_no, column);
    }
    DefSection& section = out.back().sections.back();
    DefEntry entry;
    entry.note = note;
    if (section.name == "generators") {
      entry.key = std::string(content);
      entry.key_pos = {line_no, column};
      section.entries.push_back(std::move(entry));
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) throw ParseError(ErrorKind::SyntaxError, "expected '='", line_no, column);
    if (auto again = content.find('=', eq + 1); again != std::string_view::npos) {
      throw ParseError(ErrorKind::SyntaxError, "more than one '='", line_no, column + static_cast<int>(again));
    }
    std::string_view key = content.substr(0, eq);
    std::string_view value = content.substr(eq + 1);
    trim(key);
    const int value_col = column + static_cast<int>(eq + 1 + trim(value));
    if (key.empty()) throw ParseError(ErrorKind::SyntaxError, "missing left-hand side", line_no, column);
    if (value.empty()) throw ParseError(ErrorKind::SyntaxError, "missing right-hand side", line_no, value_col);
    entry.key = std::string(key);
    entry.value = std::string(value);
    entry.key_pos = {line_no, column};
    entry.value_pos = {line_no, value_col};
    section.entries.push_back(std::move(entry));
  }
  return out;
}

const char* to_string(BundleKind kind) {
  switch (kind) {
    case BundleKind::Algebra: return "algebra";
    case BundleKind::Hopf: return "hopf";
    case BundleKind::DqtHopf: return "dqt_hopf";
    case BundleKind::ComoduleAlgebra: return "comodule_algebra";
    case BundleKind::BraidedHopf: return "braided_hopf";
  }
  return "algebra";
}

namespace {

const std::set<std::string> kKnownSections = {"generators", "options",  "relations", "coproduct", "counit",
                                               "antipode",   "R",        "coaction",  "action",    "identify"};

/// Order sections appear in on export.
const std::vector<std::string> kSectionOrder = {"generators", "options", "relations", "coproduct", "counit",
                                                "antipode",   "R",       "coaction",  "action",    "identify"};

class Builder {
 public:
  Builder(const Definition& def, const BundleResolver& resolve) : def_(def), resolve_(resolve) {}

  BundlePtr build() {
    for (const auto& s : def_.sections) {
      if (!kKnownSections.count(s.name)) {
        throw ParseError(ErrorKind::SyntaxError, "unknown section [" + s.name + "]", s.pos.line, s.pos.column);
      }
      if (std::count_if(def_.sections.begin(), def_.sections.end(), [&](const DefSection& o) { return o.name == s.name; }) > 1) {
        throw ParseError(ErrorKind::SyntaxError, "section [" + s.name + "] appears twice", s.pos.line, s.pos.column);
      }
    }
    auto bundle = std::make_shared<Bundle>();
    bundle->name = def_.name;
    bundle->canonical.name = def_.name;
    bundle->canonical.pos = def_.pos;

    build_alphabet();
    canonical_generators(*bundle);
    RewriteOptions options = build_options(*bundle);
    std::vector<Relation> relations = build_relations(*bundle);
    Presentation raw(alphabet_, std::move(relations), options);
    auto [completed, report] = complete(raw);
    bundle->algebra = std::make_shared<const Presentation>(std::move(completed));
    bundle->confluence = std::move(report);

    resolve_over(*bundle);
    const Alphabet& a = *alphabet_;
    const Signature one{&a};
    const Signature two{&a, &a};

    const DefSection* coaction = def_.find("coaction");
    const bool has_hopf = def_.find("coproduct") || def_.find("counit") || def_.find("antipode");
    if (has_hopf) {
      auto coproduct = generator_table(*bundle, "coproduct", two);
      auto antipode = generator_table(*bundle, "antipode", one);
      auto counit = scalar_table(*bundle, "counit");
      if (coaction) {
        auto table = generator_table(*bundle, "coaction", Signature{&a, &bundle->over->algebra->alphabet()});
        auto b = std::make_shared<const BraidedHopf>(bundle->algebra, std::move(table), bundle->over->dqt,
                                                     BraidedHopf::Tables{coproduct, counit, antipode});
        bundle->kind = BundleKind::BraidedHopf;
        bundle->braided = b;
        bundle->comodule = b;
      } else if (def_.find("R")) {
        auto r = r_table(*bundle);
        auto h = std::make_shared<const DqtHopf>(bundle->algebra, HopfTables{coproduct, counit, antipode}, std::move(r));
        bundle->kind = BundleKind::DqtHopf;
        bundle->dqt = h;
        bundle->hopf = h;
      } else {
        bundle->kind = BundleKind::Hopf;
        bundle->hopf = std::make_shared<const HopfAlgebra>(bundle->algebra, HopfTables{coproduct, counit, antipode});
      }
    } else if (coaction) {
      auto table = generator_table(*bundle, "coaction", Signature{&a, &bundle->over->algebra->alphabet()});
      bundle->kind = BundleKind::ComoduleAlgebra;
      bundle->comodule = std::make_shared<const ComoduleAlgebra>(bundle->algebra, std::move(table), bundle->over->dqt);
    } else if (const DefSection* r = def_.find("R")) {
      throw ParseError(ErrorKind::SyntaxError, "[R] needs [coproduct], [counit] and [antipode]", r->pos.line,
                       r->pos.column);
    }
    if (def_.find("action")) bundle->action = action_table(*bundle);
    if (def_.find("identify")) bundle->identification = identification(*bundle);

    for (const auto& name : kSectionOrder) {
      for (auto& s : sections_) {
        if (s.name == name) bundle->canonical.sections.push_back(s);
      }
    }
    return bundle;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, SourcePos at) const {
    throw ParseError(kind, msg, at.line, at.column);
  }

  void build_alphabet() {
    const DefSection* g = def_.find("generators");
    if (!g) fail(ErrorKind::SyntaxError, "block '" + def_.name + "' has no [generators] section", def_.pos);
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& e : g->entries) {
      for (const auto& [w, col] : split_words(e.key, e.key_pos.column)) {
        const SourcePos at{e.key_pos.line, col};
        if (!is_identifier(w)) fail(ErrorKind::SyntaxError, "bad generator name '" + w + "'", at);
        if (w == "q") fail(ErrorKind::SyntaxError, "generator name 'q' is reserved", at);
        if (!seen.insert(w).second) fail(ErrorKind::SyntaxError, "generator '" + w + "' declared twice", at);
        names.push_back(w);
      }
    }
    alphabet_ = std::make_shared<const Alphabet>(def_.name, std::move(names));
  }

  DefSection& canonical_section(const DefSection& src) {
    DefSection s;
    s.name = src.name;
    s.attrs = src.attrs;
    s.pos = src.pos;
    sections_.push_back(std::move(s));
    return sections_.back();
  }

  void canonical_generators(Bundle&) {
    const DefSection* g = def_.find("generators");
    DefSection& s = canonical_section(*g);
    std::string joined;
    for (const auto& name : alphabet_->generators()) joined += (joined.empty() ? "" : " ") + name;
    DefEntry e;
    e.key = joined;
    for (const auto& src : g->entries) {
      if (!src.note.empty()) e.note += (e.note.empty() ? "" : "; ") + src.note;
    }
    s.entries.push_back(std::move(e));
  }

  RewriteOptions build_options(Bundle&) {
    RewriteOptions options;
    const DefSection* o = def_.find("options");
    if (!o) return options;
    DefSection& s = canonical_section(*o);
    for (const auto& e : o->entries) {
      std::size_t value = 0;
      try {
        std::size_t used = 0;
        value = std::stoull(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(ErrorKind::SyntaxError, "expected a non-negative integer", e.value_pos);
      }
      if (e.key == "degree_bound") {
        options.degree_bound = value;
      } else if (e.key == "step_budget") {
        options.step_budget = value;
      } else {
        fail(ErrorKind::SyntaxError, "unknown option '" + e.key + "'", e.key_pos);
      }
      s.entries.push_back({e.key, std::to_string(value), e.note, {}, {}});
    }
    return options;
  }

  std::vector<Relation> build_relations(Bundle&) {
    std::vector<Relation> out;
    const DefSection* r = def_.find("relations");
    if (!r) return out;
    DefSection& s = canonical_section(*r);
    const Signature sig{alphabet_.get()};
    for (const auto& e : r->entries) {
      Relation rel{parse_element(e.key, sig, e.key_pos), parse_element(e.value, sig, e.value_pos), e.note};
      s.entries.push_back({rel.lhs.to_string(), rel.rhs.to_string(), e.note, {}, {}});
      out.push_back(std::move(rel));
    }
    return out;
  }

  void resolve_over(Bundle& bundle) {
    std::string over;
    SourcePos at;
    for (const auto& s : def_.sections) {
      for (const auto& [k, v] : s.attrs) {
        if (k != "over") fail(ErrorKind::SyntaxError, "unknown attribute '" + k + "'", s.pos);
        if (!over.empty() && v != over) fail(ErrorKind::SyntaxError, "conflicting over= attributes", s.pos);
        over = v;
        at = s.pos;
      }
      if ((s.name == "coaction" || s.name == "action" || s.name == "identify") && !s.attrs.count("over")) {
        fail(ErrorKind::SyntaxError, "[" + s.name + "] needs over=NAME", s.pos);
      }
    }
    if (over.empty()) return;
    BundlePtr b = resolve_ ? resolve_(over) : nullptr;
    if (!b) fail(ErrorKind::UnknownEntry, "unknown algebra '" + over + "'", at);
    if (def_.find("coaction") && !b->dqt) {
      fail(ErrorKind::SyntaxError, "'" + over + "' is not a dual-quasitriangular Hopf algebra", at);
    }
    if (def_.find("action") && !b->hopf) fail(ErrorKind::SyntaxError, "'" + over + "' is not a Hopf algebra", at);
    bundle.over = b;
  }

  GenId generator(const std::string& name, SourcePos at, const Alphabet& a) const {
    auto id = a.find(name);
    if (!id) fail(ErrorKind::UnknownGenerator, "'" + name + "' is not a generator of " + a.name(), at);
    return *id;
  }

  /// Splits "a, b" into two generator ids.
  std::pair<GenId, GenId> generator_pair(const DefEntry& e, const Alphabet& first, const Alphabet& second) const {
    const auto comma = e.key.find(',');
    if (comma == std::string::npos) fail(ErrorKind::SyntaxError, "expected 'first, second'", e.key_pos);
    std::string_view l = std::string_view(e.key).substr(0, comma);
    std::string_view r = std::string_view(e.key).substr(comma + 1);
    trim(l);
    const std::size_t lead = trim(r);
    const SourcePos rpos{e.key_pos.line, e.key_pos.column + static_cast<int>(comma + 1 + lead)};
    return {generator(std::string(l), e.key_pos, first), generator(std::string(r), rpos, second)};
  }

  std::map<GenId, NcElement> generator_table(Bundle&, const std::string& name, const Signature& sig) {
    std::map<GenId, NcElement> out;
    const DefSection* src = def_.find(name);
    if (!src) return out;
    for (const auto& e : src->entries) {
      const GenId g = generator(e.key, e.key_pos, *alphabet_);
      if (out.count(g)) fail(ErrorKind::SyntaxError, "duplicate entry for '" + e.key + "'", e.key_pos);
      out.emplace(g, parse_element(e.value, sig, e.value_pos));
      notes_[{name, g}] = e.note;
    }
    DefSection& s = canonical_section(*src);
    for (const auto& [g, v] : out) s.entries.push_back({alphabet_->generator(g), v.to_string(), notes_[{name, g}], {}, {}});
    return out;
  }

  std::map<GenId, Scalar> scalar_table(Bundle&, const std::string& name) {
    std::map<GenId, Scalar> out;
    const DefSection* src = def_.find(name);
    if (!src) return out;
    for (const auto& e : src->entries) {
      const GenId g = generator(e.key, e.key_pos, *alphabet_);
      if (out.count(g)) fail(ErrorKind::SyntaxError, "duplicate entry for '" + e.key + "'", e.key_pos);
      out.emplace(g, parse_scalar(e.value, e.value_pos));
      notes_[{name, g}] = e.note;
    }
    DefSection& s = canonical_section(*src);
    for (const auto& [g, v] : out) s.entries.push_back({alphabet_->generator(g), v.to_string(), notes_[{name, g}], {}, {}});
    return out;
  }

  RTable r_table(Bundle&) {
    RTable out;
    std::map<std::pair<GenId, GenId>, std::string> notes;
    const DefSection* src = def_.find("R");
    for (const auto& e : src->entries) {
      auto key = generator_pair(e, *alphabet_, *alphabet_);
      if (out.count(key)) fail(ErrorKind::SyntaxError, "duplicate R entry", e.key_pos);
      out.emplace(key, parse_scalar(e.value, e.value_pos));
      notes[key] = e.note;
    }
    DefSection& s = canonical_section(*src);
    for (const auto& [k, v] : out) {
      s.entries.push_back({alphabet_->generator(k.first) + ", " + alphabet_->generator(k.second), v.to_string(),
                           notes[k], {}, {}});
    }
    return out;
  }

  ActionTable action_table(Bundle& bundle) {
    ActionTable out;
    std::map<std::pair<GenId, GenId>, std::string> notes;
    const DefSection* src = def_.find("action");
    const Alphabet& h = bundle.over->algebra->alphabet();
    const Signature sig{alphabet_.get()};
    for (const auto& e : src->entries) {
      auto key = generator_pair(e, *alphabet_, h);
      if (out.entries.count(key)) fail(ErrorKind::SyntaxError, "duplicate action entry", e.key_pos);
      out.entries.emplace(key, parse_element(e.value, sig, e.value_pos));
      notes[key] = e.note;
    }
    DefSection& s = canonical_section(*src);
    for (const auto& [k, v] : out.entries) {
      s.entries.push_back({alphabet_->generator(k.first) + ", " + h.generator(k.second), v.to_string(), notes[k], {}, {}});
    }
    return out;
  }

  std::map<GenId, NcElement> identification(Bundle& bundle) {
    const Signature sig{&bundle.over->algebra->alphabet()};
    return generator_table(bundle, "identify", sig);
  }

  const Definition& def_;
  const BundleResolver& resolve_;
  AlphabetPtr alphabet_;
  std::vector<DefSection> sections_;
  std::map<std::pair<std::string, GenId>, std::string> notes_;
};

void write_block(std::ostringstream& os, const Definition& def) {
  os << "[algebra " << def.name << "]\n";
  for (const auto& s : def.sections) {
    os << "\n[" << s.name;
    for (const auto& [k, v] : s.attrs) os << ' ' << k << '=' << v;
    os << "]\n";
    for (const auto& e : s.entries) {
      std::string line = s.name == "generators" ? e.key : e.key + " = " + e.value;
      if (!e.note.empty()) line += "   # " + e.note;
      os << line << '\n';
    }
  }
}

}  // namespace

BundlePtr build_bundle(const Definition& def, const BundleResolver& resolve) { return Builder(def, resolve).build(); }

std::vector<BundlePtr> load_definitions(std::string_view text, const BundleResolver& fallback) {
  std::vector<BundlePtr> out;
  std::map<std::string, BundlePtr> local;
  BundleResolver resolve = [&](const std::string& name) -> BundlePtr {
    if (auto it = local.find(name); it != local.end()) return it->second;
    return fallback ? fallback(name) : nullptr;
  };
  for (const Definition& def : parse_definition_text(text)) {
    if (local.count(def.name)) {
      throw ParseError(ErrorKind::SyntaxError, "algebra '" + def.name + "' defined twice", def.pos.line, def.pos.column);
    }
    BundlePtr b = build_bundle(def, resolve);
    local[def.name] = b;
    out.push_back(b);
  }
  return out;
}

std::string export_definition(const Bundle& bundle) {
  std::ostringstream os;
  write_block(os, bundle.canonical);
  return os.str();
}

std::string export_with_dependencies(const Bundle& bundle) {
  std::vector<const Bundle*> chain;
  for (const Bundle* b = &bundle; b; b = b->over.get()) chain.push_back(b);
  std::ostringstream os;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (it != chain.rbegin()) os << '\n';
    write_block(os, (*it)->canonical);
  }
  return os.str();
}

}  // namespace braidkit
