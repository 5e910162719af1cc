// braidkit: command-line front end over the catalog and definition files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkit/catalog.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/error.hpp"
#include "braidkit/verify.hpp"

using namespace braidkit;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::UnknownEntry:
    case ErrorKind::SignatureMismatch:
    case ErrorKind::BadGrouping:
      return kUsage;
    case ErrorKind::VerificationFailed:
    case ErrorKind::CrossedModuleViolation:
      return kVerifyFailed;
    default:
      return kInternal;
  }
}

struct Options {
  std::string file;
  std::size_t degree = 0;  // 0: suite defaults
  bool json = false;
  bool no_verify = false;
};

class Session {
 public:
  explicit Session(const Options& opts) : opts_(opts) {
    if (opts_.file.empty()) return;
    std::ifstream in(opts_.file);
    if (!in) throw Error(ErrorKind::UnknownEntry, "cannot read " + opts_.file);
    std::stringstream ss;
    ss << in.rdbuf();
    for (const auto& b : load_definitions(ss.str(), catalog::resolve)) file_bundles_[b->name] = b;
  }

  BundlePtr get(const std::string& name) {
    BundlePtr b;
    bool from_file = false;
    if (auto it = file_bundles_.find(name); it != file_bundles_.end()) {
      b = it->second;
      from_file = true;
    } else {
      b = catalog::load(name);
    }
    if (!opts_.no_verify && !verified_.count(name)) {
      const Report r = full_report(*b);
      if (!r.ok()) {
        throw Error(ErrorKind::VerificationFailed,
                    (from_file ? "definition '" : "entry '") + name + "' fails " + std::to_string(r.failures()) +
                        " check(s); run `braidkit verify " + name + "` for the report");
      }
      verified_.insert(name);
    }
    return b;
  }

  VerifyOptions verify_options() const {
    VerifyOptions v;
    if (opts_.degree) {
      v.pairing_length = opts_.degree;
      v.antipode_length = opts_.degree;
    }
    return v;
  }

  Report full_report(const Bundle& b) const {
    const VerifyOptions v = verify_options();
    Report r;
    if (b.hopf) r.append(verify_hopf(*b.hopf, v));
    if (b.dqt) r.append(verify_dqt(*b.dqt, v));
    if (b.braided) {
      r.append(verify_braided_hopf(*b.braided, v));
    } else if (b.comodule) {
      r.append(verify_comodule(*b.comodule, v));
    }
    if (b.comodule) {
      auto shared = std::shared_ptr<const ComoduleAlgebra>(b.comodule);
      r.append(verify_crossed_module(*b.comodule, induced_action_fn(shared)));
      if (b.action) {
        r.append(verify_crossed_module(*b.comodule, table_action(b.over->hopf, shared, b.action->entries)));
      }
    }
    return r;
  }

  bool json() const { return opts_.json; }

 private:
  Options opts_;
  std::map<std::string, BundlePtr> file_bundles_;
  std::set<std::string> verified_;
};

/// Parses `text` with as many slots of `alphabet` as it has (x) separators.
NcElement parse_in(const std::string& text, const Alphabet& alphabet) {
  for (std::size_t slots = 1;; ++slots) {
    try {
      return parse_element(text, Signature(slots, &alphabet));
    } catch (const ParseError& e) {
      if (e.kind() != ErrorKind::SignatureMismatch || slots >= 8) throw;
    }
  }
}

/// Prints a list of `label = value` results.
void emit(const Session& s, const std::vector<std::pair<std::string, std::string>>& rows) {
  if (s.json()) {
    json out = json::array();
    for (const auto& [k, v] : rows) out.push_back({{"expr", k}, {"value", v}});
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : rows) std::cout << (k.empty() ? v : k + " = " + v) << '\n';
}

void emit_one(const Session& s, const std::string& value) {
  if (s.json()) {
    std::cout << json{{"value", value}}.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
}

int emit_report(const Session& s, const std::string& name, const Report& r) {
  if (s.json()) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"suite", c.suite},
                        {"id", c.id},
                        {"status", c.pass ? "PASS" : "FAIL"},
                        {"residual", c.residual},
                        {"identities", c.identities}});
    }
    std::cout << json{{"name", name}, {"ok", r.ok()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    std::cout << r.to_text();
    std::cout << (r.ok() ? "ok" : "FAILED") << ": " << r.checks.size() - r.failures() << '/' << r.checks.size()
              << " checks pass\n";
  }
  return r.ok() ? kOk : kVerifyFailed;
}

const DqtHopf& require_dqt(const Bundle& b) {
  if (!b.dqt) throw Error(ErrorKind::SignatureMismatch, "'" + b.name + "' is not a dual-quasitriangular Hopf algebra");
  return *b.dqt;
}

std::shared_ptr<const BraidedHopf> require_braided(const Bundle& b) {
  if (!b.braided) throw Error(ErrorKind::SignatureMismatch, "'" + b.name + "' is not a braided Hopf algebra");
  return b.braided;
}

/// Letter renaming from `over` letters to those of an identified algebra.
struct Relabel {
  const Alphabet* target = nullptr;
  std::map<GenId, GenId> letters;

  NcElement apply(const NcElement& u, const Alphabet& from) const {
    if (!target) return u;
    Signature sig = u.signature();
    for (auto& a : sig) {
      if (a == &from) a = target;
    }
    NcElement out(sig);
    for (const auto& [tw, c] : u.terms()) {
      TensorWord w = tw;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (u.signature()[i] != &from) continue;
        for (auto& g : w[i]) g = letters.at(g);
      }
      out.add_term(std::move(w), c);
    }
    return out;
  }
};

Relabel make_relabel(const Bundle& as, const Alphabet& over) {
  if (!as.over || &as.over->algebra->alphabet() != &over || as.identification.empty()) {
    throw Error(ErrorKind::SignatureMismatch, "'" + as.name + "' has no identification over " + over.name());
  }
  Relabel r;
  r.target = &as.algebra->alphabet();
  for (const auto& [letter, image] : as.identification) {
    if (image.size() != 1 || image.terms().begin()->first[0].size() != 1) {
      throw Error(ErrorKind::SignatureMismatch, "identification of '" + as.name + "' is not letter-to-letter");
    }
    r.letters[image.terms().begin()->first[0][0]] = letter;
  }
  return r;
}

/// Generator products and coproducts of a smash-type construction.
template <class Smash>
std::vector<std::pair<std::string, std::string>> smash_rows(const Smash& s, const Relabel& relabel) {
  const DqtHopf& h = s.hopf();
  const BraidedHopf& b = s.braided();
  std::vector<std::pair<std::string, std::string>> rows;
  auto show = [&](const NcElement& u) { return relabel.apply(u, h.alphabet()).to_string(); };
  for (std::size_t xi = 0; xi < b.alphabet().size(); ++xi) {
    const NcElement x = s.from_braided(NcElement::generator(b.alphabet(), static_cast<GenId>(xi)));
    for (std::size_t gi = 0; gi < h.alphabet().size(); ++gi) {
      const NcElement g = s.from_hopf(NcElement::generator(h.alphabet(), static_cast<GenId>(gi)));
      rows.emplace_back("(" + show(x) + ")(" + show(g) + ")", show(s.product(x, g)));
    }
  }
  for (std::size_t xi = 0; xi < b.alphabet().size(); ++xi) {
    const NcElement x = s.from_braided(NcElement::generator(b.alphabet(), static_cast<GenId>(xi)));
    rows.emplace_back("Delta(" + show(x) + ")", show(s.coproduct(x)));
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"braidkit: exact computations with braided Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--file", opts.file, "Definition file; its algebras shadow catalog entries");
  app.add_option("--degree", opts.degree, "Word-length bound for checks")->envname("BRAIDKIT_DEGREE");
  app.add_flag("--json", opts.json, "JSON output");
  app.add_flag("--no-verify", opts.no_verify, "Skip verifying algebras before use");

  std::string name, arg1, arg2, with, as;
  bool inverse = false, only = false;

  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  nf->add_option("algebra", name)->required();
  nf->add_option("expr", arg1)->required();

  auto* ver = app.add_subcommand("verify", "Run every applicable verification suite");
  ver->add_option("algebra", name)->required();

  auto* braid = app.add_subcommand("braid", "Braiding Psi(x (x) y) of comodule elements");
  braid->add_option("algebra", name)->required();
  braid->add_option("x", arg1)->required();
  braid->add_option("y", arg2)->required();
  braid->add_option("--with", with, "Algebra of the second argument");

  auto* rcmd = app.add_subcommand("R", "Evaluate R(u (x) v)");
  rcmd->add_option("algebra", name)->required();
  rcmd->add_option("u", arg1)->required();
  rcmd->add_option("v", arg2)->required();
  rcmd->add_flag("--inverse", inverse, "Evaluate the convolution inverse instead");

  auto* trans = app.add_subcommand("transmute", "Transmuted product, or the relations of an identified algebra");
  trans->add_option("algebra", name)->required();
  trans->add_option("u", arg1);
  trans->add_option("v", arg2);

  auto* bos = app.add_subcommand("bosonise", "Smash products, coproducts and antipode of the bosonisation");
  bos->add_option("algebra", name)->required();
  bos->add_option("--as", as, "Rename letters through this algebra's identification");

  auto* bip = app.add_subcommand("biproduct", "As bosonise, with the [action] table of the definition");
  bip->add_option("algebra", name)->required();
  bip->add_option("--as", as, "Rename letters through this algebra's identification");

  auto* smash = app.add_subcommand("smashcop", "Cross relations and coproducts of the braided smash product");
  smash->add_option("algebra", name)->required();
  smash->add_option("--as", as, "Rename letters through this algebra's identification");

  auto* exp = app.add_subcommand("export", "Print a definition in canonical form");
  exp->add_option("algebra", name)->required();
  exp->add_flag("--only", only, "Omit the algebras it depends on");

  auto* cat = app.add_subcommand("catalog", "List catalog entries, or print one");
  cat->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Session session(opts);

  if (*cat) {
    if (!name.empty()) {
      std::cout << catalog::source(name);
      return kOk;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& n : catalog::names()) rows.emplace_back(n, to_string(catalog::load(n)->kind));
    emit(session, rows);
    return kOk;
  }

  if (*ver) {
    // Verification is the command itself; load without the pre-check.
    Options raw = opts;
    raw.no_verify = true;
    Session plain(raw);
    BundlePtr b = plain.get(name);
    return emit_report(session, name, session.full_report(*b));
  }

  if (*exp) {
    Options raw = opts;
    raw.no_verify = true;
    BundlePtr b = Session(raw).get(name);
    std::cout << (only ? export_definition(*b) : export_with_dependencies(*b));
    return kOk;
  }

  BundlePtr b = session.get(name);

  if (*nf) {
    const NcElement u = parse_in(arg1, b->algebra->alphabet());
    std::vector<const Presentation*> slots(u.slots(), b->algebra.get());
    emit_one(session, normal_form(u, slots).to_string());
    return kOk;
  }

  if (*rcmd) {
    const DqtHopf& h = require_dqt(*b);
    const NcElement u = parse_element(arg1, h.signature());
    const NcElement v = parse_element(arg2, h.signature());
    emit_one(session, (inverse ? h.eval_R_inverse(u, v) : h.eval_R(u, v)).to_string());
    return kOk;
  }

  if (*braid) {
    if (!b->comodule) throw Error(ErrorKind::SignatureMismatch, "'" + name + "' is not a comodule algebra");
    BundlePtr w = with.empty() ? b : session.get(with);
    if (!w->comodule) throw Error(ErrorKind::SignatureMismatch, "'" + with + "' is not a comodule algebra");
    const NcElement x = parse_element(arg1, b->comodule->signature());
    const NcElement y = parse_element(arg2, w->comodule->signature());
    emit_one(session, braiding(*b->comodule, *w->comodule, tensor(x, y)).to_string());
    return kOk;
  }

  if (*trans) {
    if (!arg1.empty()) {
      const DqtHopf& h = require_dqt(*b);
      const NcElement u = parse_element(arg1, h.signature());
      const NcElement v = arg2.empty() ? NcElement::one(h.signature()) : parse_element(arg2, h.signature());
      emit_one(session, transmuted_product(h, u, v).to_string());
      return kOk;
    }
    if (b->identification.empty() || !b->over || !b->over->dqt) {
      throw Error(ErrorKind::SignatureMismatch, "'" + name + "' has no [identify] section over a dqt Hopf algebra");
    }
    const DqtHopf& h = *b->over->dqt;
    std::vector<std::pair<std::string, std::string>> rows;
    bool all_zero = true;
    for (const auto& rel : b->algebra->relations()) {
      const NcElement residual = transmuted_eval(h, rel.lhs - rel.rhs, b->identification);
      all_zero = all_zero && residual.is_zero();
      rows.emplace_back(rel.lhs.to_string() + " - (" + rel.rhs.to_string() + ")", residual.to_string());
    }
    emit(session, rows);
    return all_zero ? kOk : kVerifyFailed;
  }

  if (*bos || *bip || *smash) {
    auto braided = require_braided(*b);
    const Relabel relabel = as.empty() ? Relabel{} : make_relabel(*session.get(as), braided->over().alphabet());
    std::vector<std::pair<std::string, std::string>> rows;
    if (*smash) {
      rows = smash_rows(BraidedSmash(braided), relabel);
    } else {
      SmashHopf s = *bos ? bosonise(braided) : [&] {
        if (!b->action) throw Error(ErrorKind::SignatureMismatch, "'" + name + "' has no [action] section");
        return biproduct(braided, table_action(b->over->hopf, braided, b->action->entries));
      }();
      rows = smash_rows(s, relabel);
      const auto& sol = s.solve_antipode();
      for (const auto& [g, v] : sol.values) {
        const NcElement x = s.from_braided(NcElement::generator(braided->alphabet(), g));
        rows.emplace_back("S(" + relabel.apply(x, braided->over().alphabet()).to_string() + ")",
                          relabel.apply(v, braided->over().alphabet()).to_string());
      }
    }
    emit(session, rows);
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "braidkit: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const Error& e) {
    std::cerr << "braidkit: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "braidkit: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
