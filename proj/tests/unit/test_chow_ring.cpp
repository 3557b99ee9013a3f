#include <doctest.h>

#include "support.hpp"

using namespace sncdp;
using sncdp::testing::random_class;

TEST_CASE("products in the F6 ring") {
  Variety f6 = hirzebruch(6);
  CHECK(f6.cls("e*e") == f6.cls("-6*e*f"));
  CHECK((f6.cls("e+6*f") * f6.cls("e+3*f")) == f6.cls("3*e*f"));
  ChowClass x = f6.cls("2*e-f+e*f");
  CHECK(ChowClass::constant(f6.ring, 1) * x == x);
}

TEST_CASE("graded parts") {
  Variety m = product(projective_space(1, "f1"), projective_space(1, "f2"));
  CHECK(m.cls("1-4*f1-4*f2+16*f1*f2").graded_part(2) == m.cls("16*f1*f2"));
  CHECK(m.cls("3+10*f1+6*f2-6*f1*f2").graded_part(1) == m.cls("10*f1+6*f2"));
  CHECK(m.cls("3+10*f1").graded_part(3).is_zero());
  CHECK(m.cls("3+10*f1").graded_part(-1).is_zero());
}

TEST_CASE("parsing") {
  Variety m = product(projective_space(1, "f1"), projective_space(1, "f2"));
  ChowClass c = m.cls("3 + 10*f1 + 6*f2 - 6*f1*f2");
  CHECK(c.to_string() == "3+10*f1+6*f2-6*f1*f2");
  CHECK(m.cls("").is_zero());
  Variety p2 = projective_space(2);
  ChowClass half = p2.cls("1/2*h^2");
  CHECK(half.coefficient({2}) == Rational(1) / 2);
  CHECK(p2.cls("h*1/2*h") == half);
  CHECK(p2.cls("h^3").is_zero());

  CHECK_THROWS_AS(p2.cls("x"), ParseError);
  CHECK_THROWS_AS(p2.cls("h +* h"), ParseError);
  CHECK_THROWS_AS(p2.cls("1/0"), ParseError);
  CHECK_THROWS_AS(p2.cls("h^"), ParseError);
  try {
    p2.cls("h + y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing") {
  Variety p2 = projective_space(2);
  CHECK(p2.cls("0").to_string() == "0");
  CHECK(p2.cls("-h").to_string() == "-h");
  CHECK(p2.cls("3/2*h^2 + 2 + 3*h").to_string() == "2+3*h+3/2*h^2");
}

TEST_CASE("ring axioms on random elements") {
  for (const auto& [name, v] : sncdp::testing::sample_varieties()) {
    CAPTURE(name);
    for (int trial = 0; trial < 20; ++trial) {
      ChowClass a = random_class(v.ring), b = random_class(v.ring), c = random_class(v.ring);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == ChowClass(v.ring));
      CHECK(normal_form(v.ring, a.terms()) == a);
      CHECK(parse_class(v.ring, a.to_string()) == a);
      // grading of products
      for (int d = 0; d <= v.dim; ++d) {
        ChowClass conv(v.ring);
        for (int i = 0; i <= d; ++i) conv += a.graded_part(i) * b.graded_part(d - i);
        CHECK((a * b).graded_part(d) == conv);
      }
      ChowClass sum(v.ring);
      for (int d = 0; d <= v.dim; ++d) sum += a.graded_part(d);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("reduction is independent of rule order") {
  for (const auto& [name, v] : sncdp::testing::sample_varieties()) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      ChowClass a = random_class(v.ring), b = random_class(v.ring);
      Terms raw;
      for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
          Monomial m(ma.size());
          for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
          raw[m] += ca * cb;
        }
      }
      CHECK(v.ring->reduce(raw, ReductionOrder::LowestIndexFirst) ==
            v.ring->reduce(raw, ReductionOrder::HighestIndexFirst));
    }
  }
}

TEST_CASE("presentations are validated") {
  using V = std::vector<VariableSpec>;
  CHECK_NOTHROW(make_ring(V{{"a", 1}}, std::vector<RuleText>{{"a", 3, "0"}}, 2, "a^2"));
  CHECK_THROWS_AS(make_ring(V{{"a", 1}, {"a", 1}}, std::vector<RuleText>{{"a", 2, "0"}}, 1, "a"), DomainError);
  CHECK_THROWS_AS(make_ring(V{{"a", 1}, {"b", 1}}, std::vector<RuleText>{{"a", 2, "0"}}, 1, "a"), DomainError);
  CHECK_THROWS_AS(make_ring(V{{"a", 0}}, std::vector<RuleText>{{"a", 2, "0"}}, 1, "a"), DomainError);
  // a^2 -> a b and b^2 -> a b feed each other.
  CHECK_THROWS_AS(make_ring(V{{"a", 1}, {"b", 1}}, std::vector<RuleText>{{"a", 2, "a*b"}, {"b", 2, "a*b"}}, 2, "a*b"),
                  DomainError);
  // degree mismatch
  CHECK_THROWS_AS(make_ring(V{{"a", 1}, {"b", 1}}, std::vector<RuleText>{{"a", 2, "b"}, {"b", 2, "0"}}, 2, "a*b"),
                  DomainError);
  // top degree not spanned by the point
  CHECK_THROWS_AS(make_ring(V{{"a", 1}, {"b", 1}}, std::vector<RuleText>{{"a", 2, "0"}, {"b", 2, "0"}}, 1, "a"),
                  DomainError);
}

TEST_CASE("mixing rings is rejected") {
  Variety p1 = projective_space(1), p2 = projective_space(2);
  CHECK_THROWS_AS(p1.cls("h") + p2.cls("h"), DomainError);
  CHECK_THROWS_AS(p1.cls("h") * p2.cls("h"), DomainError);
}

TEST_CASE("exp and log are inverse") {
  for (const auto& [name, v] : sncdp::testing::sample_varieties()) {
    CAPTURE(name);
    ChowClass x = random_class(v.ring, -1, false);
    CHECK(log_one_plus(exp_nilpotent(x) - ChowClass::constant(v.ring, 1)) == x);
  }
}
