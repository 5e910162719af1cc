#include "support.hpp"

#include "braidkit/comodule.hpp"
#include "braidkit/error.hpp"

using namespace testing;

TEST_CASE("catalog lists its entries in load order") {
  const std::vector<std::string> expected{"glq2", "bglq2", "aq2", "z2prime", "superline", "zgrade", "braidedline"};
  CHECK(catalog::names() == expected);
  for (const auto& n : expected) CHECK(catalog::load(n)->name == n);
  try {
    (void)catalog::load("slq3");
    FAIL("expected UnknownEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownEntry);
  }
  CHECK(catalog::resolve("slq3") == nullptr);
}

TEST_CASE("shipped R table equals the one solved from the plane braiding") {
  const RTableSolution sol = catalog::regenerate_glq2_r_table();
  CHECK(sol.unique);
  CHECK(sol.unknowns == 16);
  const DqtHopf& h = *catalog::load("glq2")->dqt;
  for (const auto& [k, v] : sol.table) {
    CAPTURE(h.alphabet().generator(k.first));
    CAPTURE(h.alphabet().generator(k.second));
    CHECK(h.eval_R(Word(1, k.first), Word(1, k.second)) == v);
  }
}

TEST_CASE("shipped bglq2 coaction equals the relabelled adjoint coaction") {
  const BundlePtr b = catalog::load("bglq2");
  const auto regenerated = catalog::regenerate_bglq2_coaction();
  CHECK(regenerated.size() == b->algebra->alphabet().size());
  for (const auto& [g, v] : regenerated) {
    CAPTURE(b->algebra->alphabet().generator(g));
    CHECK(b->comodule->coact(NcElement::generator(b->algebra->alphabet(), g)) == v);
  }
}

TEST_CASE("shipped bglq2 antipode equals the solved one") {
  const BundlePtr b = catalog::load("bglq2");
  const AntipodeTableSolution sol = catalog::regenerate_bglq2_antipode();
  CHECK(sol.unique);
  for (const auto& [g, v] : sol.values) {
    CAPTURE(b->algebra->alphabet().generator(g));
    CHECK(b->braided->antipode(NcElement::generator(b->algebra->alphabet(), g)) == v);
  }
  const Presentation& p = *b->algebra;
  CHECK(b->braided->antipode(el("d", p)) == el("a*Dinv", p));
}

TEST_CASE("super line braids odd against odd with a sign") {
  const BraidedHopf& s = *catalog::load("superline")->braided;
  const Signature two = s.signature(2);
  CHECK(braiding(s, s, el("v (x) v", two)) == el("-v (x) v", two));
  // v*v is primitive-free: Δ(v*v) = v*v(x)1 + 1(x)v*v.
  CHECK(s.coproduct(el("v*v", s.algebra())) == el("v*v (x) 1 + 1 (x) v*v", two));
}

TEST_CASE("braided line braids by q") {
  const BraidedHopf& l = *catalog::load("braidedline")->braided;
  const Signature two = l.signature(2);
  CHECK(braiding(l, l, el("x (x) x", two)) == el("q*x (x) x", two));
  CHECK(l.coproduct(el("x*x", l.algebra())) == el("x*x (x) 1 + (1 + q)*x (x) x + 1 (x) x*x", two));
}

TEST_CASE("plane braiding table matches the computed braiding") {
  const BraidedHopf& a = *catalog::load("aq2")->braided;
  for (const auto& [k, v] : catalog::plane_braiding()) {
    NcElement in(a.signature(2));
    in.add_term(TensorWord{Word(1, k.first), Word(1, k.second)}, Scalar(1));
    CHECK(braiding(a, a, in) == v);
  }
}
