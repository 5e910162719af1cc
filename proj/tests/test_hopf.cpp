#include "support.hpp"

#include "braidkit/error.hpp"

using namespace testing;

namespace {

const DqtHopf& gl() { return *catalog::load("glq2")->dqt; }

}  // namespace

TEST_CASE("matrix coproduct, counit and antipode on generators") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  CHECK(h.coproduct(el("alpha", p)) == el("alpha (x) alpha + beta (x) gamma", p, 2));
  CHECK(h.coproduct(el("C", p)) == el("C (x) C", p, 2));
  CHECK(h.counit(el("alpha*delta - beta", p)) == Scalar(1));
  CHECK(h.antipode(el("beta", p)) == p.normal_form(el("-q*Cinv*beta", p)));
  CHECK(h.coproduct(el("1", p)) == el("1 (x) 1", p, 2));
}

TEST_CASE("the determinant is grouplike") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  // Δ(alpha delta - q^-1 beta gamma), expanded and normalized, equals C (x) C.
  CHECK(h.coproduct(el("alpha*delta - q^-1*beta*gamma", p)) == p.normal_form(el("C (x) C", p, 2)));
  CHECK(h.is_grouplike(p.gen_id("C")));
  CHECK(h.grouplike_inverse_of(p.gen_id("Cinv")) == p.gen_id("C"));
  CHECK_FALSE(h.grouplike_inverse_of(p.gen_id("alpha")).has_value());
}

TEST_CASE("R on generators and its normalization") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  CHECK(h.eval_R(word(p, "alpha"), word(p, "alpha")) == Scalar::q(2));
  CHECK(h.eval_R(word(p, "beta"), word(p, "gamma")) == Scalar::q(2) - Scalar(1));
  CHECK(h.eval_R(Word(), word(p, "alpha")) == h.counit_word(word(p, "alpha")));
  CHECK(h.eval_R(word(p, "C"), word(p, "C")) == Scalar::q(6));
  CHECK(h.eval_R(word(p, "Cinv"), word(p, "C")) == Scalar::q(-6));
  CHECK(h.eval_R_inverse(Word(), Word()) == Scalar(1));
  CHECK(h.eval_R_inverse(word(p, "C"), word(p, "C")) == Scalar::q(-6));
}

TEST_CASE("convolution inverse on (alpha, alpha) by direct expansion") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  // Δα = α⊗α + β⊗γ, so sum Rbar(α1⊗α1) R(α2⊗α2) has four terms.
  const char* legs[][2] = {{"alpha", "alpha"}, {"beta", "gamma"}};
  Scalar total;
  for (auto& l : legs) {
    for (auto& m : legs) total += h.eval_R_inverse(word(p, l[0]), word(p, m[0])) * h.eval_R(word(p, l[1]), word(p, m[1]));
  }
  CHECK(total == Scalar(1));
}

TEST_CASE("R kills relations under both evaluation orders") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  for (const auto& rel : p.relations()) {
    for (const Word& w : p.normal_words(2)) {
      const NcElement wv = NcElement::term(p.signature(), {w});
      for (RStrategy s : {RStrategy::PeelSecond, RStrategy::PeelFirst}) {
        CHECK(h.eval_R(rel.difference(), wv, s).is_zero());
        CHECK(h.eval_R(wv, rel.difference(), s).is_zero());
      }
    }
  }
}

TEST_CASE("property: both evaluation orders agree on random words") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, p.alphabet(), 3);
    const Word v = random_word(rng, p.alphabet(), 3);
    CHECK(h.eval_R(u, v, RStrategy::PeelSecond) == h.eval_R(u, v, RStrategy::PeelFirst));
  }
}

TEST_CASE("property: antipode is anti-multiplicative on normal forms") {
  const DqtHopf& h = gl();
  const Presentation& p = h.algebra();
  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    const NcElement u = random_element(rng, p, 2), v = random_element(rng, p, 2);
    CHECK(p.normal_form(h.antipode(p.multiply(u, v))) == p.multiply(h.antipode(v), h.antipode(u)));
  }
}

TEST_CASE("missing table entries are reported") {
  const DqtHopf& h = gl();
  HopfTables t = h.tables();
  t.antipode.erase(h.algebra().gen_id("beta"));
  try {
    HopfAlgebra broken(h.algebra_ptr(), t);
    FAIL("expected MissingEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingEntry);
  }
  RTable r = h.r_table();
  r.erase({h.algebra().gen_id("alpha"), h.algebra().gen_id("beta")});
  DqtHopf partial(h.algebra_ptr(), h.tables(), r);
  CHECK_THROWS_AS((void)partial.eval_R(word(h.algebra(), "alpha"), word(h.algebra(), "beta")), Error);
}
