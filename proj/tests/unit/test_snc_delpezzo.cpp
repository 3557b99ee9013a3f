#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace sncdp;

namespace {

std::vector<std::string> descriptions(const Classification& c) {
  std::vector<std::string> out;
  for (const auto& cfg : c.configurations) out.push_back(cfg.to_string());
  return out;
}

SncConfiguration pair(SurfaceType a, std::pair<int, int> ca, SurfaceType b, std::pair<int, int> cb) {
  return {{make_component(a, {ca}), make_component(b, {cb})}, {{0, 0, 1, 0}}};
}

}  // namespace

TEST_CASE("ampleness") {
  Variety f6 = surface_variety(SurfaceType::f(6));
  CHECK(is_ample(SurfaceType::f(6), f6.cls("e+8*f")));
  CHECK_FALSE(is_ample(SurfaceType::f(6), f6.cls("e+6*f")));
  Variety p2 = surface_variety(SurfaceType::p2());
  CHECK(is_ample(SurfaceType::p2(), p2.cls("l")));
  CHECK_FALSE(is_ample(SurfaceType::p2(), p2.cls("-l")));
  Variety f2 = surface_variety(SurfaceType::f(2));
  CHECK_FALSE(is_ample(SurfaceType::f(2), f2.cls("e+2*f")));
  for (int n = 0; n <= 8; ++n) {
    Variety f = surface_variety(SurfaceType::f(n));
    CHECK(is_ample(SurfaceType::f(n), -f.canonical_class) == (n <= 1));
  }
}

TEST_CASE("smooth rational curves") {
  auto p2 = smooth_rational_curves(SurfaceType::p2(), 8);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].to_string() == "l");
  CHECK(p2[0].self_intersection == 1);
  CHECK(p2[1].to_string() == "2*l");
  CHECK(p2[1].self_intersection == 4);

  auto f6 = smooth_rational_curves(SurfaceType::f(6), 8);
  auto e = std::find_if(f6.begin(), f6.end(), [](const auto& c) { return c.to_string() == "e"; });
  REQUIRE(e != f6.end());
  CHECK(e->self_intersection == -6);

  auto f0 = smooth_rational_curves(SurfaceType::f(0), 8);
  auto ef = std::find_if(f0.begin(), f0.end(), [](const auto& c) { return c.to_string() == "e+f"; });
  REQUIRE(ef != f0.end());
  CHECK(ef->self_intersection == 2);

  for (int n = 0; n <= 8; ++n) {
    Variety s = surface_variety(SurfaceType::f(n));
    for (const auto& c : smooth_rational_curves(SurfaceType::f(n), 8)) {
      ChowClass k = s.canonical_class;
      CHECK(integrate(s, c.cls * c.cls + c.cls * k) == -2);
    }
  }
}

TEST_CASE("check_config verdicts") {
  CHECK(check_config(pair(SurfaceType::f(1), {1, 0}, SurfaceType::f(1), {1, 0})).pass);
  Verdict bad = check_config(pair(SurfaceType::p2(), {1, 0}, SurfaceType::f(5), {1, 0}));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(std::any_of(bad.violations.begin(), bad.violations.end(),
                    [](const std::string& v) { return v.find("-4") != std::string::npos; }));

  SncConfiguration tri{{make_component(SurfaceType::f(2), {{0, 1}, {1, 0}}),
                        make_component(SurfaceType::f(2), {{0, 1}, {1, 0}}),
                        make_component(SurfaceType::f(2), {{0, 1}, {1, 0}})},
                       {{0, 1, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 0}}};
  CHECK(check_config(tri).pass);
  Variety f2 = surface_variety(SurfaceType::f(2));
  CHECK(-(f2.canonical_class + f2.cls("e+f")) == f2.cls("e+3*f"));
  CHECK(is_ample(SurfaceType::f(2), f2.cls("e+3*f")));

  SncConfiguration dangling{{make_component(SurfaceType::f(1), {{1, 0}}), make_component(SurfaceType::f(1), {{1, 0}})},
                            {}};
  CHECK_THROWS_AS(check_config(dangling), DomainError);
  SncConfiguration out_of_range = pair(SurfaceType::f(1), {1, 0}, SurfaceType::f(1), {1, 0});
  out_of_range.gluings[0].component_j = 5;
  CHECK_THROWS_AS(check_config(out_of_range), DomainError);
}

TEST_CASE("rank-2 classification") {
  Classification c = classify(2, 8, 8);
  CHECK(c.complete);
  std::vector<std::string> expected{"P2 u F3 (l ~ e)",    "F0 u F2 (e ~ e)",     "F1 u F1 (e ~ e)",
                                    "F1 u F3 (e+f ~ e)", "F0 u F4 (e+f ~ e)", "P2 u F6 (2*l ~ e)"};
  auto got = descriptions(c);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  for (const auto& cfg : c.configurations) CHECK(check_config(cfg).pass);
}

TEST_CASE("rank-3 classification") {
  Classification c = classify(3, 8, 8);
  CHECK(c.complete);
  REQUIRE(c.configurations.size() == 1);
  for (const auto& comp : c.configurations[0].components) CHECK(comp.type == SurfaceType::f(2));
}

TEST_CASE("classification saturates") {
  for (int rank : {2, 3}) {
    auto base = descriptions(classify(rank, 8, 8));
    for (int n = 8; n <= 12; n += 2) {
      for (int b = 8; b <= 12; b += 2) CHECK(descriptions(classify(rank, n, b)) == base);
    }
  }
}

TEST_CASE("small bounds are flagged") {
  Classification c = classify(2, 2, 8);
  CHECK_FALSE(c.complete);
  auto got = descriptions(c);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"F0 u F2 (e ~ e)", "F1 u F1 (e ~ e)"});
  CHECK_THROWS_AS(classify(4, 8, 8), DomainError);
}

TEST_CASE("sheaf characters") {
  Variety p2 = surface_variety(SurfaceType::p2());
  CHECK(e_character(p2).ch() == p2.cls("3+6*l^2"));
  Variety f6 = surface_variety(SurfaceType::f(6));
  CHECK(e_character(f6).ch() == f6.cls("3+4*e*f"));
  Variety f1 = surface_variety(SurfaceType::f(1));
  CHECK(e_character(f1).ch() == f1.cls("3+4*e*f"));
  for (int rank : {2, 3}) {
    for (const auto& cfg : classify(rank, 8, 8).configurations) {
      for (const auto& comp : cfg.components) {
        KClass e = e_character(comp);
        CHECK(e.rank() == 3);
        CHECK(e.ch_part(1).is_zero());
      }
    }
  }
}
