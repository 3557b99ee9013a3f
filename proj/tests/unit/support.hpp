#pragma once

#include <random>
#include <string>
#include <vector>

#include "sncdp/gw_local.hpp"

namespace sncdp::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240517);
  return gen;
}

inline Rational random_rational(int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng())) / Rational(den(rng()));
}

// Random rational combination of standard monomials of degree <= max_degree.
inline ChowClass random_class(const RingPtr& ring, int max_degree = -1, bool with_constant = true) {
  if (max_degree < 0) max_degree = ring->dim();
  Terms t;
  for (int d = with_constant ? 0 : 1; d <= max_degree; ++d) {
    for (const auto& m : ring->basis(d)) t[m] = random_rational();
  }
  return ChowClass(ring, t);
}

inline ChowClass random_homogeneous(const RingPtr& ring, int degree) {
  Terms t;
  for (const auto& m : ring->basis(degree)) t[m] = random_rational();
  return ChowClass(ring, t);
}

inline KClass random_kclass(const RingPtr& ring) {
  std::uniform_int_distribution<int> rank(-3, 3);
  ChowClass c = random_class(ring, -1, false);
  c += ChowClass::constant(ring, Rational(rank(rng())));
  return KClass(c);
}

// Signed sum of line bundles with integral first Chern classes.
inline KClass random_integral_kclass(const RingPtr& ring) {
  std::uniform_int_distribution<int> coeff(-3, 3), count(1, 3);
  KClass out = KClass::zero(ring);
  for (int i = count(rng()); i > 0; --i) {
    Terms t;
    for (const auto& m : ring->basis(1)) t[m] = coeff(rng());
    KClass l = KClass::line_bundle(ChowClass(ring, t));
    if (coeff(rng()) < 0) out -= l; else out += l;
  }
  return out;
}

struct NamedVariety {
  std::string name;
  Variety v;
};

inline std::vector<NamedVariety> sample_varieties() {
  std::vector<NamedVariety> out{
      {"P1", projective_space(1)},
      {"P2", projective_space(2)},
      {"P3", projective_space(3)},
      {"P1xP1", product(projective_space(1, "f1"), projective_space(1, "f2"))},
      {"F6xP1", product(hirzebruch(6), projective_space(1, "g"))},
  };
  for (int n = 0; n <= 6; ++n) out.push_back({"F" + std::to_string(n), hirzebruch(n)});
  Variety m = product(projective_space(1, "f1"), projective_space(1, "f2"));
  out.push_back({"P(alpha^*Q)", projective_bundle(m, {2, m.cls("1+f1+f2+2*f1*f2")}, "h").total});
  return out;
}


struct PushCase {
  std::string name;
  Pushforward pf;
};

inline std::vector<PushCase> bundle_cases() {
  std::vector<PushCase> out;
  for (int n = 0; n <= 6; ++n) out.push_back({"F" + std::to_string(n) + " -> P1", hirzebruch_bundle(n).projection});
  Variety m = product(projective_space(1, "f1"), projective_space(1, "f2"));
  out.push_back({"P(alpha^*Q) -> P1xP1", projective_bundle(m, {2, m.cls("1+f1+f2+2*f1*f2")}, "h").projection});
  Variety c2 = product(hirzebruch(6), projective_space(1, "g"));
  out.push_back({"F6xP1 -> P1xP1", Pushforward::projective_bundle(c2.ring, "e", m.ring, {{"f1", "f"}, {"f2", "g"}})});
  Variety p2 = projective_space(2);
  out.push_back({"P(T_P2) -> P2", projective_bundle(p2, {2, p2.cls("1+3*h+3*h^2")}, "xi").projection});
  return out;
}

inline std::vector<PushCase> product_cases() {
  std::vector<PushCase> out;
  Variety p1a = projective_space(1, "f1"), p1b = projective_space(1, "f2");
  Product ab = product_with_projections(p1a, p1b);
  out.push_back({"P1xP1 -> P1 (first)", ab.to_first});
  out.push_back({"P1xP1 -> P1 (second)", ab.to_second});
  Product fg = product_with_projections(hirzebruch(6), projective_space(1, "g"));
  out.push_back({"F6xP1 -> F6", fg.to_first});
  out.push_back({"F6xP1 -> P1", fg.to_second});
  Product pp = product_with_projections(projective_space(2), projective_space(1));
  out.push_back({"P2xP1 -> P2", pp.to_first});
  out.push_back({"P1 -> pt", Pushforward::product_projection(projective_space(1).ring, {"h"}, point().ring, {})});
  return out;
}

inline std::vector<PushCase> iso_cases() {
  std::vector<PushCase> out;
  Variety m = product(projective_space(1, "f1"), projective_space(1, "f2"));
  RingMap swap = RingMap::from_text(m.ring, m.ring, {{"f1", "f2"}, {"f2", "f1"}});
  out.push_back({"swap on P1xP1", Pushforward::isomorphism(swap, swap)});
  Variety f0 = hirzebruch(0);
  RingMap shear = RingMap::from_text(f0.ring, f0.ring, {{"f", "f"}, {"e", "e"}});
  out.push_back({"identity on F0", Pushforward::isomorphism(shear, shear)});
  Variety d = product(projective_space(1, "a"), projective_space(1, "b"));
  out.push_back({"D -> M", Pushforward::isomorphism(RingMap::from_text(d.ring, m.ring, {{"a", "f1"}, {"b", "f2"}}),
                                                    RingMap::from_text(m.ring, d.ring, {{"f1", "a"}, {"f2", "b"}}))});
  return out;
}

// pi_*(pi^*a * b) = a * pi_*b on `per_case` random pairs per map. Returns the
// number of cases checked; failures are counted separately.
inline int projection_formula_cases(const std::vector<PushCase>& cases, int per_case, int& failures) {
  int checked = 0;
  for (const auto& c : cases) {
    for (int i = 0; i < per_case; ++i) {
      ChowClass a = random_class(c.pf.target());
      ChowClass b = random_class(c.pf.source());
      if (c.pf.push(c.pf.pull(a) * b) != a * c.pf.push(b)) ++failures;
      ++checked;
    }
  }
  return checked;
}

// Random rank-2 bundles with integral Chern classes on a few bases.
inline std::vector<ProjectiveBundle> random_bundles(int count) {
  std::vector<Variety> bases{projective_space(1, "t"), projective_space(2, "t"),
                             product(projective_space(1, "s"), projective_space(1, "t"))};
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<ProjectiveBundle> out;
  for (int i = 0; i < count; ++i) {
    const Variety& base = bases[i % bases.size()];
    Terms t;
    for (int d = 1; d <= std::min(2, base.dim); ++d) {
      for (const auto& m : base.ring->basis(d)) t[m] = coeff(rng());
    }
    t[base.ring->unit_monomial()] = 1;
    out.push_back(projective_bundle(base, {2, ChowClass(base.ring, t)}, "xi"));
  }
  return out;
}

}  // namespace sncdp::testing
