#include "support.hpp"

#include "braidkit/error.hpp"
#include "braidkit/verify.hpp"

using namespace testing;

namespace {

bool failed(const Report& r, const std::string& id_prefix) {
  for (const auto& c : r.checks) {
    if (!c.pass && c.id.rfind(id_prefix, 0) == 0) return true;
  }
  return false;
}

std::shared_ptr<DqtHopf> copy_gl() {
  const DqtHopf& h = *catalog::load("glq2")->dqt;
  return std::make_shared<DqtHopf>(h.algebra_ptr(), h.tables(), h.r_table());
}

}  // namespace

TEST_CASE("every catalog entry passes its suites") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    const BundlePtr b = catalog::load(name);
    Report r;
    if (b->hopf) r.append(verify_hopf(*b->hopf));
    if (b->dqt) r.append(verify_dqt(*b->dqt));
    if (b->braided) {
      r.append(verify_braided_hopf(*b->braided));
    } else if (b->comodule) {
      r.append(verify_comodule(*b->comodule));
    }
    CHECK_MESSAGE(r.ok(), r.to_text());
  }
}

TEST_CASE("glq2 report matches the golden file") {
  const DqtHopf& h = *catalog::load("glq2")->dqt;
  Report r = verify_hopf(h);
  r.append(verify_dqt(h));
  check_golden("verify_glq2.txt", r.to_text());
}

TEST_CASE("a corrupted antipode is caught") {
  auto h = copy_gl();
  HopfTables t = h->tables();
  const GenId alpha = h->algebra().gen_id("alpha");
  t.antipode[alpha] = el("Cinv*alpha", h->algebra());
  h->set_tables(t);
  const Report r = verify_hopf(*h);
  CHECK_FALSE(r.ok());
  CHECK(failed(r, "antipode_axiom"));
  bool names_alpha = false;
  for (const auto& c : r.checks) names_alpha = names_alpha || (!c.pass && c.residual.find("alpha") != std::string::npos);
  CHECK(names_alpha);
}

TEST_CASE("a corrupted R value breaks the pairing laws") {
  auto h = copy_gl();
  RTable r = h->r_table();
  const GenId alpha = h->algebra().gen_id("alpha");
  r[{alpha, alpha}] = Scalar::q(3);
  h->set_r_table(r);
  const Report rep = verify_dqt(*h);
  CHECK_FALSE(rep.ok());
  CHECK(failed(rep, "pairing_law_3"));
}

TEST_CASE("a corrupted braided antipode is caught") {
  const BundlePtr b = catalog::load("bglq2");
  const BraidedHopf& src = *b->braided;
  BraidedHopf::Tables t = src.tables();
  t.antipode[src.algebra().gen_id("b")] = el("q^2*b*Dinv", src.algebra());
  const BraidedHopf broken(src.algebra_ptr(), src.coaction_table(), src.over_ptr(), t);
  const Report r = verify_braided_hopf(broken);
  CHECK_FALSE(r.ok());
  CHECK(failed(r, "antipode"));
}

TEST_CASE("a corrupted coaction is caught") {
  const BraidedHopf& a = *catalog::load("aq2")->braided;
  auto table = a.coaction_table();
  table[a.algebra().gen_id("x")] = el("x (x) alpha + y (x) beta", a.coaction_signature());
  const ComoduleAlgebra broken(a.algebra_ptr(), table, a.over_ptr());
  const Report r = verify_comodule(broken);
  CHECK_FALSE(r.ok());
}

TEST_CASE("crossed-module check: induced passes, mutation fails") {
  const auto a = catalog::load("aq2")->braided;
  CHECK(verify_crossed_module(*a, induced_action_fn(a)).ok());
  const ActionFn induced = induced_action_fn(a);
  const GenId x = a->algebra().gen_id("x");
  const GenId alpha = a->over().algebra().gen_id("alpha");
  const ActionFn mutated = [&](const Word& bw, const Word& hw) {
    NcElement v = induced(bw, hw);
    if (bw == Word(1, x) && hw == Word(1, alpha)) v = el("q*x", a->algebra());
    return v;
  };
  const Report r = verify_crossed_module(*a, mutated);
  CHECK_FALSE(r.ok());
  CHECK(failed(r, "[x,alpha]"));
}

TEST_CASE("group algebra with trivial R passes") {
  const auto all = load_definitions(
      "[algebra z2triv]\n[generators]\ng\n[relations]\ng*g = 1\n[coproduct]\ng = g (x) g\n[counit]\ng = 1\n"
      "[antipode]\ng = g\n[R]\ng, g = 1\n",
      nullptr);
  const DqtHopf& h = *all.back()->dqt;
  CHECK(verify_hopf(h).ok());
  CHECK(verify_dqt(h).ok());
  CHECK(catalog::load("z2prime")->dqt->eval_R(Word(2, 0), Word(1, 0)) == Scalar(1));
}
