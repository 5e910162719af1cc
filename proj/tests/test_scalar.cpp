#include "support.hpp"

#include "braidkit/error.hpp"
#include "braidkit/linsolve.hpp"

using namespace testing;

TEST_CASE("scalar printing is canonical") {
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar(1).to_string() == "1");
  CHECK((Scalar::q(2) - Scalar(1)).to_string() == "q^2 - 1");
  CHECK(Scalar::monomial(mpq_class(-3, 2), -1).to_string() == "-3/2*q^-1");
  CHECK((Scalar::q(1) - Scalar::q(-1)).to_string() == "q - q^-1");
}

TEST_CASE("scalar parsing matches construction") {
  CHECK(sc("q^2 - 1") == Scalar::q(2) - Scalar(1));
  CHECK(sc("-3/2*q^-1") == Scalar::monomial(mpq_class(-3, 2), -1));
  CHECK(sc("(q - q^-1)*(q + q^-1)") == Scalar::q(2) - Scalar::q(-2));
  CHECK(sc("(1 - q^-2)") == Scalar(1) - Scalar::q(-2));
  CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("only unit monomials invert") {
  CHECK(Scalar::q(3).inverse() == Scalar::q(-3));
  CHECK(Scalar::monomial(mpq_class(2, 5), 1).inverse() == Scalar::monomial(mpq_class(5, 2), -1));
  try {
    (void)(Scalar::q(1) + Scalar(1)).inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
  CHECK_THROWS_AS((void)Scalar().inverse(), Error);
}

TEST_CASE("gcd and exact division") {
  const Scalar a = (Scalar::q(1) - Scalar(1)) * (Scalar::q(1) + Scalar(2));
  const Scalar b = (Scalar::q(1) - Scalar(1)) * Scalar::q(-4);
  CHECK(scalar_gcd(a, b) == Scalar::q(1) - Scalar(1));
  CHECK(divide_exact(a, Scalar::q(1) + Scalar(2)) == Scalar::q(1) - Scalar(1));
  CHECK_FALSE(divide_exact(a, Scalar::q(1) + Scalar(1)).has_value());
  CHECK(scalar_gcd(Scalar(), Scalar()).is_zero());
}

TEST_CASE("property: scalars form a commutative ring") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    CHECK(parse_scalar(a.to_string()) == a);
  }
}

TEST_CASE("property: gcd divides both arguments") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Scalar common = random_scalar(rng, 2);
    const Scalar a = common * random_scalar(rng, 2);
    const Scalar b = common * random_scalar(rng, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const Scalar g = scalar_gcd(a, b);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    if (!common.is_zero()) CHECK(divide_exact(g, scalar_gcd(common, common)).has_value());
  }
}

TEST_CASE("linear systems over rational functions") {
  // x + y = 1, q x - y = 0
  LinearSystem s(2);
  s.add_equation({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(1));
  s.add_equation({{0, Scalar::q(1)}, {1, Scalar(-1)}}, Scalar());
  const auto sol = s.solve();
  REQUIRE(sol.consistent);
  CHECK(sol.unique);
  CHECK(sol.rank == 2);
  CHECK_FALSE(sol.values[0].to_scalar().has_value());  // 1/(1+q)
  CHECK(sol.values[0] * RatFunc(Scalar(1) + Scalar::q(1)) == RatFunc(Scalar(1)));

  LinearSystem bad(1);
  bad.add_equation({{0, Scalar(1)}}, Scalar(1));
  bad.add_equation({{0, Scalar(1)}}, Scalar(2));
  CHECK_FALSE(bad.solve().consistent);

  LinearSystem under(2);
  under.add_equation({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(1));
  const auto u = under.solve();
  CHECK(u.consistent);
  CHECK_FALSE(u.unique);
  CHECK(u.rank == 1);
}
