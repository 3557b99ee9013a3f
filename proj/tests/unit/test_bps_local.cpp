#include <doctest.h>

#include "sncdp/bps_local.hpp"
#include "support.hpp"

using namespace sncdp;

TEST_CASE("weighted Euler characteristics") {
  CHECK(weighted_euler_smooth(projective_space(1)) == -2);
  CHECK(weighted_euler_smooth(product(projective_space(1, "f1"), projective_space(1, "f2"))) == 4);
  CHECK(weighted_euler_smooth(point()) == 1);
  CHECK(weighted_euler_smooth(projective_space(3)) == -4);
  auto vs = sncdp::testing::sample_varieties();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Variety& x = vs[i].v;
      const Variety& y = vs[j].v;
      if (x.dim + y.dim > 3) continue;
      Integer sign = (x.dim + y.dim) % 2 == 0 ? 1 : -1;
      CHECK(weighted_euler_smooth(product(x, y)) == sign * euler_number(x) * euler_number(y));
    }
  }
}

TEST_CASE("GV tables") {
  GVTable t1 = gv_table(builtin_sheaf_moduli("f1f1"));
  CHECK(t1.n0 == -2);
  GVTable t2 = gv_table(builtin_sheaf_moduli("p2f6"), 5);
  CHECK(t2.n0 == 4);
  REQUIRE(t2.higher.size() == 5);
  for (int g = 1; g <= 5; ++g) CHECK(t2.at(g) == 0);
  CHECK(t2.at(0) == 4);

  SheafModuli m = builtin_sheaf_moduli("f1f1");
  m.hilbert_chow_embedding = false;
  try {
    gv_table(m);
    FAIL("expected a refusal");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("higher-genus GV undefined here") != std::string::npos);
  }
}

TEST_CASE("multiple cover check") {
  GVTable minus_two = gv_table(builtin_sheaf_moduli("f1f1"));
  GVTable four = gv_table(builtin_sheaf_moduli("p2f6"));
  CHECK(multiple_cover_check(Rational(-2), minus_two, true).pass);
  CHECK(multiple_cover_check(Rational(4), four, true).pass);
  CHECK_FALSE(multiple_cover_check(Rational(4), minus_two, true).pass);
  CHECK_THROWS_AS(multiple_cover_check(Rational(4), four, false), DomainError);

  for (const auto& name : builtin_example_names()) {
    Rational n0 = local_gw_genus0(builtin_example(name));
    CHECK(multiple_cover_check(n0, gv_table(builtin_sheaf_moduli(name)), true).pass);
  }
}
