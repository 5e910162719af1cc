#include "support.hpp"

using namespace testing;

namespace {

const BraidedHopf& plane() { return *catalog::load("aq2")->braided; }
const BraidedHopf& bgl() { return *catalog::load("bglq2")->braided; }

NcElement psi(const ComoduleAlgebra& v, const ComoduleAlgebra& w, const std::string& text) {
  return braiding(v, w, el(text, Signature{&v.alphabet(), &w.alphabet()}));
}

}  // namespace

TEST_CASE("plane coaction extends multiplicatively") {
  const BraidedHopf& a = plane();
  const Presentation& h = a.over().algebra();
  const Signature ah = a.coaction_signature();
  CHECK(a.coact(el("x", a.algebra())) == el("x (x) alpha + y (x) gamma", ah));
  CHECK(a.coact(el("1", a.algebra())) == el("1 (x) 1", ah));
  // Oracle: expand (x⊗α + y⊗γ)(x⊗β + y⊗δ) slotwise, then normalize.
  const NcElement expanded = tensor_mul(el("x (x) alpha + y (x) gamma", ah), el("x (x) beta + y (x) delta", ah));
  const Presentation* slots[] = {&a.algebra(), &h};
  CHECK(a.coact(el("x*y", a.algebra())) == normal_form(expanded, slots));
  // β kills the relation.
  CHECK(a.coact(el("y*x - q*x*y", a.algebra())).is_zero());
}

TEST_CASE("plane braiding") {
  const BraidedHopf& a = plane();
  CHECK(psi(a, a, "x (x) x") == el("q^2*x (x) x", a.algebra(), 2));
  CHECK(psi(a, a, "x (x) y") == el("q*y (x) x", a.algebra(), 2));
  CHECK(psi(a, a, "y (x) y") == el("q^2*y (x) y", a.algebra(), 2));
  CHECK(psi(a, a, "y (x) x") == el("q*x (x) y + (q^2 - 1)*y (x) x", a.algebra(), 2));
  CHECK(psi(a, a, "1 (x) x") == el("x (x) 1", a.algebra(), 2));
}

TEST_CASE("braiding of braided matrices past the plane") {
  const BraidedHopf& a = plane();
  const BraidedHopf& b = bgl();
  const Signature ab{&a.alphabet(), &b.alphabet()};
  CHECK(psi(b, a, "a (x) x") == el("x (x) a + (1 - q^2)*y (x) c", ab));
  CHECK(psi(b, a, "b (x) x") == el("q^-1*x (x) b + (q - q^-1)*y (x) a - (q - q^-1)*y (x) d", ab));
  CHECK(psi(b, a, "c (x) x") == el("q*x (x) c", ab));
  CHECK(psi(b, a, "d (x) x") == el("x (x) d + (1 - q^-2)*y (x) c", ab));
  CHECK(psi(b, a, "a (x) y") == el("y (x) a", ab));
  CHECK(psi(b, a, "b (x) y") == el("q*y (x) b", ab));
  CHECK(psi(b, a, "c (x) y") == el("q^-1*y (x) c", ab));
  CHECK(psi(b, a, "d (x) y") == el("y (x) d", ab));
}

TEST_CASE("inverse braiding undoes the braiding") {
  const BraidedHopf& a = plane();
  const BraidedHopf& b = bgl();
  for (const char* v : {"a", "b", "c", "d", "D"}) {
    for (const char* w : {"x", "y"}) {
      const NcElement u = el(std::string(v) + " (x) " + w, Signature{&b.alphabet(), &a.alphabet()});
      CHECK(inverse_braiding(b, a, braiding(b, a, u)) == u);
    }
  }
}

TEST_CASE("induced action contracts the coaction with R") {
  const BraidedHopf& a = plane();
  const Presentation& h = a.over().algebra();
  CHECK(induced_action(a, el("x", a.algebra()), el("alpha", h)) == el("q^2*x", a.algebra()));
  CHECK(induced_action(a, el("x", a.algebra()), el("gamma", h)).is_zero());
  CHECK(induced_action(a, el("y", a.algebra()), el("1", h)) == el("y", a.algebra()));
}

TEST_CASE("braided coproduct on products") {
  const BraidedHopf& a = plane();
  CHECK(a.coproduct(el("1", a.algebra())) == el("1 (x) 1", a.algebra(), 2));
  CHECK(a.coproduct(el("x", a.algebra())) == el("x (x) 1 + 1 (x) x", a.algebra(), 2));
  // q-binomial coefficient 1 + q^2 from Ψ(x⊗x) = q^2 x⊗x.
  CHECK(a.coproduct(el("x*x", a.algebra())) == el("x*x (x) 1 + (1 + q^2)*x (x) x + 1 (x) x*x", a.algebra(), 2));
  CHECK(a.coproduct(el("y*x - q*x*y", a.algebra())).is_zero());
}

TEST_CASE("braided antipode product law on generator pairs") {
  for (const BraidedHopf* b : {&plane(), &bgl()}) {
    const Presentation& p = b->algebra();
    for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
      for (std::size_t j = 0; j < p.alphabet().size(); ++j) {
        const NcElement x = NcElement::generator(p.alphabet(), static_cast<GenId>(i));
        const NcElement y = NcElement::generator(p.alphabet(), static_cast<GenId>(j));
        CHECK(p.normal_form(b->antipode(p.multiply(x, y))) == antipode_product_law(*b, x, y));
      }
    }
  }
  CHECK(plane().antipode(el("x*y", plane().algebra())) == el("q^2*x*y", plane().algebra()));
}

TEST_CASE("braided tensor algebra of the plane with itself") {
  const BraidedHopf& a = plane();
  const BraidedTensorAlgebra sq({&a, &a});
  const Signature s2 = a.signature(2);
  // (1⊗x)(x⊗1) = Ψ(x⊗x) = q^2 x⊗x
  CHECK(sq.product(el("1 (x) x", s2), el("x (x) 1", s2)) == el("q^2*x (x) x", s2));
  CHECK(sq.product(el("x (x) 1", s2), el("1 (x) x", s2)) == el("x (x) x", s2));
}

TEST_CASE("property: braided coproduct is multiplicative on random elements") {
  const BraidedHopf& a = plane();
  const BraidedTensorAlgebra sq({&a, &a});
  std::mt19937 rng(31);
  for (int i = 0; i < 30; ++i) {
    const NcElement u = random_element(rng, a.algebra(), 2, 2);
    const NcElement v = random_element(rng, a.algebra(), 2, 2);
    CHECK(a.coproduct(a.algebra().multiply(u, v)) == sq.product(a.coproduct(u), a.coproduct(v)));
  }
}
