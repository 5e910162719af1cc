#include "braidkit/verify.hpp"

#include <functional>
#include <sstream>

namespace braidkit {

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.suite << ' ' << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << ' ' << c.residual << '\n';
  }
  return os.str();
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace {

/// Accumulates identities under one check id, keeping the first failure.
class Tally {
 public:
  Tally(Report& report, std::string suite, std::string id) : report_(report) {
    check_.suite = std::move(suite);
    check_.id = std::move(id);
    check_.pass = true;
    check_.residual = "0";
    check_.identities = 0;
  }
  Tally(const Tally&) = delete;
  Tally& operator=(const Tally&) = delete;
  ~Tally() { report_.checks.push_back(std::move(check_)); }

  void add(const std::string& instance, const NcElement& residual) {
    record(instance, residual.is_zero(), [&] { return residual.to_string(); });
  }
  void add(const std::string& instance, const Scalar& residual) {
    record(instance, residual.is_zero(), [&] { return residual.to_string(); });
  }

 private:
  template <class F>
  void record(const std::string& instance, bool zero, F text) {
    ++check_.identities;
    if (zero || !check_.pass) return;
    check_.pass = false;
    check_.residual = instance.empty() ? text() : instance + ": " + text();
  }

  Report& report_;
  Check check_;
};

std::string word_text(const Alphabet& a, const Word& w) { return a.format(w); }

NcElement word_element(const Presentation& p, const Word& w) { return NcElement::term(p.signature(), {w}); }

NcElement relation_residual(const Relation& r) { return r.lhs - r.rhs; }

std::string relation_id(const std::string& what, std::size_t i) { return what + "[" + std::to_string(i + 1) + "]"; }

/// ε applied to one slot of u, dropping it.
template <class Counit>
NcElement contract_slot(const NcElement& u, std::size_t slot, Counit eps) {
  return map_slots(u, slot, 1, Signature{}, [&](std::span<const Word> w) { return NcElement::scalar({}, eps(w[0])); });
}

void relation_kills(Report& report, const std::string& suite, const Presentation& p, const std::string& map_name,
                    const std::function<NcElement(const NcElement&)>& image) {
  const auto& rels = p.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Tally t(report, suite, relation_id(map_name + "_kills_relation", i));
    t.add("", image(relation_residual(rels[i])));
  }
}

}  // namespace

Report verify_hopf(const HopfAlgebra& h, const VerifyOptions& options) {
  Report report;
  const std::string suite = "hopf";
  const Presentation& p = h.algebra();
  const Alphabet& a = h.alphabet();
  const Presentation* three[] = {&p, &p, &p};

  relation_kills(report, suite, p, "coproduct", [&](const NcElement& r) { return h.coproduct(r); });
  relation_kills(report, suite, p, "counit", [&](const NcElement& r) { return NcElement::scalar({}, h.counit(r)); });
  relation_kills(report, suite, p, "antipode", [&](const NcElement& r) { return p.normal_form(h.antipode(r)); });

  auto cop = [&](std::span<const Word> w) { return h.coproduct_word(w[0]); };
  for (std::size_t gi = 0; gi < a.size(); ++gi) {
    const Word g(1, static_cast<GenId>(gi));
    const NcElement d = h.coproduct(word_element(p, g));
    {
      Tally t(report, suite, "coassociativity[" + a.format(g) + "]");
      const NcElement left = normal_form(map_slots(d, 0, 1, h.signature(2), cop), three);
      const NcElement right = normal_form(map_slots(d, 1, 1, h.signature(2), cop), three);
      t.add("", left - right);
    }
    {
      Tally t(report, suite, "counit_axiom[" + a.format(g) + "]");
      auto eps = [&](const Word& w) { return h.counit_word(w); };
      t.add("left", p.normal_form(contract_slot(d, 0, eps)) - word_element(p, g));
      t.add("right", p.normal_form(contract_slot(d, 1, eps)) - word_element(p, g));
    }
  }

  std::vector<std::vector<Word>> by_length(options.antipode_length + 1);
  for (const Word& w : p.normal_words(options.antipode_length)) by_length[w.size()].push_back(w);
  for (std::size_t len = 0; len < by_length.size(); ++len) {
    Tally t(report, suite, "antipode_axiom[length=" + std::to_string(len) + "]");
    for (const Word& w : by_length[len]) {
      const NcElement d = h.coproduct_word(w);
      const NcElement eps = NcElement::scalar(p.signature(), h.counit_word(w));
      NcElement left(p.signature());
      NcElement right(p.signature());
      for (const auto& [tw, c] : d.terms()) {
        left += c * p.multiply(h.antipode_word(tw[0]), word_element(p, tw[1]));
        right += c * p.multiply(word_element(p, tw[0]), h.antipode_word(tw[1]));
      }
      t.add(word_text(a, w) + " left", p.normal_form(left) - eps);
      t.add(word_text(a, w) + " right", p.normal_form(right) - eps);
    }
  }

  {
    Tally t(report, suite, "antipode_antimultiplicative");
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const Word g(1, static_cast<GenId>(i));
        const Word k(1, static_cast<GenId>(j));
        const NcElement lhs = p.normal_form(h.antipode(p.normal_form(word_element(p, g + k))));
        const NcElement rhs = p.multiply(h.antipode_word(k), h.antipode_word(g));
        t.add(a.format(g) + "," + a.format(k), lhs - rhs);
      }
    }
  }
  return report;
}

Report verify_dqt(const DqtHopf& h, const VerifyOptions& options) {
  Report report;
  const std::string suite = "dqt";
  const Presentation& p = h.algebra();
  const Alphabet& a = h.alphabet();
  const std::vector<Word> words = p.normal_words(options.pairing_length);
  std::vector<Word> gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens.emplace_back(1, static_cast<GenId>(i));
  auto elem = [&](const Word& w) { return word_element(p, w); };
  auto label = [&](std::initializer_list<const Word*> ws) {
    std::string s;
    for (const Word* w : ws) s += (s.empty() ? "" : ",") + a.format(*w);
    return s;
  };

  // R(h (x) gf) = sum R(h1 (x) f) R(h2 (x) g), left side through the other evaluation order.
  {
    Tally t(report, suite, "pairing_law_1");
    for (const Word& hw : words) {
      const NcElement dh = h.coproduct(elem(hw));
      for (const Word& g : words) {
        for (const Word& f : words) {
          const Scalar lhs = h.eval_R(elem(hw), p.normal_form(elem(g + f)), RStrategy::PeelFirst);
          Scalar rhs;
          for (const auto& [tw, c] : dh.terms()) {
            const Scalar left = h.eval_R(tw[0], f);
            if (!left.is_zero()) rhs += c * left * h.eval_R(tw[1], g);
          }
          t.add(label({&hw, &g, &f}), lhs - rhs);
        }
      }
    }
  }
  // R(fg (x) h) = sum R(f (x) h1) R(g (x) h2)
  {
    Tally t(report, suite, "pairing_law_2");
    for (const Word& hw : words) {
      const NcElement dh = h.coproduct(elem(hw));
      for (const Word& f : words) {
        for (const Word& g : words) {
          const Scalar lhs = h.eval_R(p.normal_form(elem(f + g)), elem(hw), RStrategy::PeelSecond);
          Scalar rhs;
          for (const auto& [tw, c] : dh.terms()) {
            const Scalar left = h.eval_R(f, tw[0]);
            if (!left.is_zero()) rhs += c * left * h.eval_R(g, tw[1]);
          }
          t.add(label({&f, &g, &hw}), lhs - rhs);
        }
      }
    }
  }
  // sum g1 h1 R(h2 (x) g2) = sum R(h1 (x) g1) h2 g2
  {
    Tally t(report, suite, "pairing_law_3");
    for (const Word& hw : words) {
      const NcElement dh = h.coproduct(elem(hw));
      for (const Word& g : words) {
        const NcElement dg = h.coproduct(elem(g));
        NcElement lhs(p.signature());
        NcElement rhs(p.signature());
        for (const auto& [th, ch] : dh.terms()) {
          for (const auto& [tg, cg] : dg.terms()) {
            const Scalar r1 = h.eval_R(th[1], tg[1]);
            if (!r1.is_zero()) lhs.add_term(TensorWord{tg[0] + th[0]}, ch * cg * r1);
            const Scalar r2 = h.eval_R(th[0], tg[0]);
            if (!r2.is_zero()) rhs.add_term(TensorWord{th[1] + tg[1]}, ch * cg * r2);
          }
        }
        t.add(label({&hw, &g}), p.normal_form(lhs) - p.normal_form(rhs));
      }
    }
  }

  const auto& rels = p.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Tally t(report, suite, relation_id("R_kills_relation", i));
    const NcElement r = relation_residual(rels[i]);
    for (const Word& w : words) {
      for (RStrategy s : {RStrategy::PeelSecond, RStrategy::PeelFirst}) {
        const char* tag = s == RStrategy::PeelSecond ? "peel-second" : "peel-first";
        t.add(std::string("r(x)") + a.format(w) + " " + tag, h.eval_R(r, elem(w), s));
        t.add(a.format(w) + "(x)r " + tag, h.eval_R(elem(w), r, s));
      }
    }
  }

  {
    Tally t(report, suite, "convolution_inverse");
    for (const Word& hw : gens) {
      const NcElement dh = h.coproduct(elem(hw));
      for (const Word& g : gens) {
        const NcElement dg = h.coproduct(elem(g));
        const Scalar eps = h.counit_word(hw) * h.counit_word(g);
        Scalar left;
        Scalar right;
        for (const auto& [th, ch] : dh.terms()) {
          for (const auto& [tg, cg] : dg.terms()) {
            left += ch * cg * h.eval_R_inverse(th[0], tg[0]) * h.eval_R(th[1], tg[1]);
            right += ch * cg * h.eval_R(th[0], tg[0]) * h.eval_R_inverse(th[1], tg[1]);
          }
        }
        t.add(label({&hw, &g}) + " inverse-first", left - eps);
        t.add(label({&hw, &g}) + " R-first", right - eps);
      }
    }
  }
  return report;
}

Report verify_comodule(const ComoduleAlgebra& b, const VerifyOptions&) {
  Report report;
  const std::string suite = "comodule";
  const Presentation& p = b.algebra();
  const DqtHopf& h = b.over();
  const Alphabet& a = b.alphabet();
  relation_kills(report, suite, p, "coaction", [&](const NcElement& r) { return b.coact(r); });
  const Presentation* three[] = {&p, &h.algebra(), &h.algebra()};
  for (std::size_t gi = 0; gi < a.size(); ++gi) {
    const Word g(1, static_cast<GenId>(gi));
    const NcElement c = b.coact(word_element(p, g));
    {
      Tally t(report, suite, "counit_axiom[" + a.format(g) + "]");
      t.add("", p.normal_form(contract_slot(c, 1, [&](const Word& w) { return h.counit_word(w); })) - word_element(p, g));
    }
    {
      Tally t(report, suite, "coassociativity[" + a.format(g) + "]");
      const NcElement left = normal_form(map_slots(c, 0, 1, b.coaction_signature(), [&](std::span<const Word> w) {
                                           return b.coact_word(w[0]);
                                         }), three);
      const NcElement right = normal_form(map_slots(c, 1, 1, h.signature(2), [&](std::span<const Word> w) {
                                            return h.coproduct_word(w[0]);
                                          }), three);
      t.add("", left - right);
    }
  }
  return report;
}

namespace {

/// Ψ on slots (i, i+1) of an element of B^(x)n.
NcElement braid_at(const BraidedHopf& b, const NcElement& u, std::size_t i) {
  const Signature two = b.signature(2);
  NcElement out = map_slots(u, i, 2, two, [&](std::span<const Word> w) {
    return braiding(b, b, NcElement::term(two, {w[0], w[1]}));
  });
  std::vector<const Presentation*> slots(u.slots(), &b.algebra());
  return normal_form(out, slots);
}

}  // namespace

Report verify_braided_hopf(const BraidedHopf& b, const VerifyOptions& options) {
  Report report = verify_comodule(b, options);
  const std::string suite = "braided_hopf";
  const Presentation& p = b.algebra();
  const Alphabet& a = b.alphabet();
  const Presentation* three[] = {&p, &p, &p};

  relation_kills(report, suite, p, "coproduct", [&](const NcElement& r) { return b.coproduct(r); });
  relation_kills(report, suite, p, "counit", [&](const NcElement& r) { return NcElement::scalar({}, b.counit(r)); });
  relation_kills(report, suite, p, "antipode", [&](const NcElement& r) { return p.normal_form(b.antipode(r)); });

  auto cop = [&](std::span<const Word> w) { return b.coproduct_word(w[0]); };
  std::vector<Word> gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens.emplace_back(1, static_cast<GenId>(i));
  for (const Word& g : gens) {
    const NcElement d = b.coproduct_word(g);
    {
      Tally t(report, suite, "coassociativity[" + a.format(g) + "]");
      const NcElement left = normal_form(map_slots(d, 0, 1, b.signature(2), cop), three);
      const NcElement right = normal_form(map_slots(d, 1, 1, b.signature(2), cop), three);
      t.add("", left - right);
    }
    {
      Tally t(report, suite, "counit_axiom[" + a.format(g) + "]");
      auto eps = [&](const Word& w) { return b.counit_word(w); };
      t.add("left", p.normal_form(contract_slot(d, 0, eps)) - word_element(p, g));
      t.add("right", p.normal_form(contract_slot(d, 1, eps)) - word_element(p, g));
    }
  }

  std::vector<std::vector<Word>> by_length(options.antipode_length + 1);
  for (const Word& w : p.normal_words(options.antipode_length)) by_length[w.size()].push_back(w);
  for (std::size_t len = 0; len < by_length.size(); ++len) {
    Tally t(report, suite, "antipode_axiom[length=" + std::to_string(len) + "]");
    for (const Word& w : by_length[len]) {
      const NcElement d = b.coproduct_word(w);
      const NcElement eps = NcElement::scalar(p.signature(), b.counit_word(w));
      NcElement left(p.signature());
      NcElement right(p.signature());
      for (const auto& [tw, c] : d.terms()) {
        left += c * p.multiply(b.antipode_word(tw[0]), word_element(p, tw[1]));
        right += c * p.multiply(word_element(p, tw[0]), b.antipode_word(tw[1]));
      }
      t.add(word_text(a, w) + " left", p.normal_form(left) - eps);
      t.add(word_text(a, w) + " right", p.normal_form(right) - eps);
    }
  }

  {
    Tally t(report, suite, "antipode_product_law");
    for (const Word& x : gens) {
      for (const Word& y : gens) {
        const NcElement lhs = p.normal_form(b.antipode(p.normal_form(word_element(p, x + y))));
        const NcElement rhs = antipode_product_law(b, word_element(p, x), word_element(p, y));
        t.add(a.format(x) + "," + a.format(y), lhs - rhs);
      }
    }
  }

  {
    Tally t(report, suite, "braid_relation");
    const Signature sig3 = b.signature(3);
    for (const Word& x : gens) {
      for (const Word& y : gens) {
        for (const Word& z : gens) {
          const NcElement u = NcElement::term(sig3, {x, y, z});
          const NcElement left = braid_at(b, braid_at(b, braid_at(b, u, 0), 1), 0);
          const NcElement right = braid_at(b, braid_at(b, braid_at(b, u, 1), 0), 1);
          t.add(a.format(x) + "," + a.format(y) + "," + a.format(z), left - right);
        }
      }
    }
  }

  {
    Tally t(report, suite, "braiding_invertible");
    const Signature sig2 = b.signature(2);
    for (const Word& x : gens) {
      for (const Word& y : gens) {
        const NcElement u = NcElement::term(sig2, {x, y});
        t.add(a.format(x) + "," + a.format(y), inverse_braiding(b, b, braiding(b, b, u)) - u);
      }
    }
  }
  return report;
}

Report verify_crossed_module(const ComoduleAlgebra& b, const ActionFn& act) {
  Report report;
  const Alphabet& a = b.alphabet();
  const Alphabet& h = b.over().alphabet();
  for (const auto& r : crossed_module_residuals(b, act)) {
    Tally t(report, "crossed_module", "[" + a.generator(r.b) + "," + h.generator(r.h) + "]");
    t.add("", r.residual);
  }
  return report;
}

}  // namespace braidkit
