#include "support.hpp"

#include "braidkit/deffile.hpp"
#include "braidkit/error.hpp"

using namespace testing;

namespace {

BundlePtr load_one(const std::string& text) {
  auto all = load_definitions(text, catalog::resolve);
  REQUIRE(all.size() >= 1);
  return all.back();
}

template <class F>
void expect_parse_error(F&& f, ErrorKind kind, int line, int column) {
  try {
    f();
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == kind);
    CHECK(e.line() == line);
    if (column > 0) CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("a user algebra over a catalog entry") {
  const BundlePtr b = load_one(
      "[algebra mine]\n"
      "[generators]\n"
      "x y\n"
      "[relations]\n"
      "y*x = q*x*y\n"
      "[coaction over=glq2]\n"
      "x = x (x) alpha + y (x) gamma\n"
      "y = x (x) beta + y (x) delta\n");
  CHECK(b->kind == BundleKind::ComoduleAlgebra);
  CHECK(b->over->name == "glq2");
  CHECK(b->comodule->coact(el("y*x - q*x*y", *b->algebra)).is_zero());
}

TEST_CASE("syntax errors carry line and column") {
  expect_parse_error([] { (void)parse_definition_text("[algebra a]\n[generators\nx\n"); }, ErrorKind::SyntaxError, 2, 0);
  expect_parse_error([] { (void)parse_definition_text("[generators]\nx\n"); }, ErrorKind::SyntaxError, 1, 1);
  expect_parse_error([] { (void)parse_definition_text("[algebra a]\n[relations]\nx*y q*y*x\n"); },
                     ErrorKind::SyntaxError, 3, 0);
  expect_parse_error([] { (void)load_one("[algebra a]\n[generators]\nx\n[relations]\nx*x = \n"); },
                     ErrorKind::SyntaxError, 5, 0);
}

TEST_CASE("unknown generators are located") {
  // z sits at column 5 of the relation line.
  expect_parse_error([] { (void)load_one("[algebra a]\n[generators]\nx y\n[relations]\nx + z = y\n"); },
                     ErrorKind::UnknownGenerator, 5, 5);
}

TEST_CASE("unknown sections and bases are rejected") {
  expect_parse_error([] { (void)load_one("[algebra a]\n[generators]\nx\n[colors]\nx = 1\n"); }, ErrorKind::SyntaxError, 4,
                     1);
  try {
    (void)load_one("[algebra a]\n[generators]\nx\n[coaction over=nowhere]\nx = x (x) 1\n");
    FAIL("expected UnknownEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownEntry);
  }
}

TEST_CASE("bglq2 relation prints as an oriented rule") {
  const Presentation& p = *catalog::load("bglq2")->algebra;
  bool found = false;
  for (const auto& r : p.rules()) found = found || p.rule_string(r) == "b*a -> q^2*a*b";
  CHECK(found);
}

TEST_CASE("export round-trips") {
  for (const char* name : {"glq2", "bglq2", "aq2", "superline", "braidedline"}) {
    CAPTURE(name);
    const BundlePtr b = catalog::load(name);
    const std::string text = export_with_dependencies(*b);
    const auto again = load_definitions(text, nullptr);
    REQUIRE(!again.empty());
    const BundlePtr c = again.back();
    CHECK(export_with_dependencies(*c) == text);
    CHECK(c->confluence.final_rules.size() == b->confluence.final_rules.size());
  }
  // Export is canonical: section order and spacing are normalized, notes survive.
  const std::string aq2 = export_definition(*catalog::load("aq2"));
  CHECK(aq2.find("# linear coaddition") != std::string::npos);
  CHECK(export_definition(*load_definitions(aq2, catalog::resolve).back()) == aq2);
}

TEST_CASE("later blocks may use earlier ones") {
  const auto all = load_definitions(
      "[algebra g2]\n[generators]\ng\n[relations]\ng*g = 1\n[coproduct]\ng = g (x) g\n[counit]\ng = 1\n"
      "[antipode]\ng = g\n[R]\ng, g = -1\n"
      "[algebra odd]\n[generators]\nv\n[coaction over=g2]\nv = v (x) g\n",
      nullptr);
  REQUIRE(all.size() == 2);
  CHECK(all[0]->kind == BundleKind::DqtHopf);
  CHECK(all[1]->over == all[0]);
}
