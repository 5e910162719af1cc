#include "support.hpp"

#include "braidkit/error.hpp"

using namespace testing;

namespace {

Presentation plane_raw(RewriteOptions options = {}) {
  auto a = std::make_shared<Alphabet>("plane", std::vector<std::string>{"x", "y"});
  const Signature s{a.get()};
  return Presentation(a, {Relation{el("y*x", s), el("q*x*y", s), ""}}, options);
}

}  // namespace

TEST_CASE("plane relation orients yx to qxy") {
  const Presentation p = plane_raw();
  REQUIRE(p.rules().size() == 1);
  CHECK(p.rule_string(p.rules()[0]) == "y*x -> q*x*y");
  CHECK(p.normal_form(el("y*y*x", p)) == el("q^2*x*y*y", p));
  CHECK(p.normal_form(el("y*x - q*x*y", p)).is_zero());
}

TEST_CASE("normal words of the plane are ordered monomials") {
  const Presentation p = plane_raw();
  // x^i y^j with i + j <= 3
  CHECK(p.normal_words(3).size() == 10);
  for (const Word& w : p.normal_words(3)) CHECK(p.is_normal(w));
}

TEST_CASE("step budget stops runaway reduction") {
  RewriteOptions tight;
  tight.step_budget = 3;
  const Presentation p = plane_raw(tight);
  try {
    (void)p.normal_form(el("y*y*y*x*x*x", p));
    FAIL("expected NonTerminating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTerminating);
  }
}

TEST_CASE("catalog algebras complete with no open pairs") {
  for (const char* name : {"glq2", "bglq2", "aq2", "z2prime", "zgrade"}) {
    CAPTURE(name);
    const auto b = catalog::load(name);
    CHECK(b->confluence.confluent());
    CHECK(b->confluence.degree_bound == 4);
  }
  CHECK(catalog::load("glq2")->confluence.final_rules.size() == 17);
  CHECK(catalog::load("bglq2")->confluence.final_rules.size() == 17);
  CHECK(catalog::load("glq2")->algebra->relations().size() == 9);
}

TEST_CASE("confluence reports match the golden files") {
  for (const char* name : {"glq2", "bglq2", "aq2"}) {
    CAPTURE(name);
    check_golden(std::string("confluence_") + name + ".txt", catalog::load(name)->confluence.to_string());
  }
}

TEST_CASE("completion is deterministic") {
  const auto b = catalog::load("bglq2");
  auto [again, report] = complete(Presentation(b->algebra->alphabet_ptr(), b->algebra->relations()));
  CHECK(report.to_string() == b->confluence.to_string());
}

TEST_CASE("braided matrix relations normalize as printed") {
  const Presentation& p = *catalog::load("bglq2")->algebra;
  CHECK(p.normal_form(el("b*a", p)) == el("q^2*a*b", p));
  CHECK(p.normal_form(el("c*a", p)) == el("q^-2*a*c", p));
  CHECK(p.normal_form(el("D*Dinv", p)) == el("1", p));
  CHECK(p.normal_form(el("a*d - q^2*c*b - D", p)).is_zero());
}

TEST_CASE("property: redex choice does not change normal forms") {
  for (const char* name : {"glq2", "bglq2"}) {
    const Presentation& p = *catalog::load(name)->algebra;
    std::mt19937 rng(name[0]);
    for (int i = 0; i < 150; ++i) {
      const NcElement u = random_element(rng, p, 4);
      CHECK(p.normal_form(u, Strategy::LeftmostOutermost) == p.normal_form(u, Strategy::LeftmostInnermost));
    }
  }
}

TEST_CASE("property: normal-form product is associative") {
  const Presentation& p = *catalog::load("glq2")->algebra;
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const NcElement u = random_element(rng, p, 2), v = random_element(rng, p, 2), w = random_element(rng, p, 2);
    CHECK(p.multiply(p.multiply(u, v), w) == p.multiply(u, p.multiply(v, w)));
  }
}

TEST_CASE("property: normal forms are idempotent and made of normal words") {
  const Presentation& p = *catalog::load("bglq2")->algebra;
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const NcElement n = p.normal_form(random_element(rng, p, 4));
    CHECK(p.normal_form(n) == n);
    for (const auto& [w, c] : n.terms()) CHECK(p.is_normal(w[0]));
  }
}
