#pragma once

#include <string>

#include "sncdp/pushforward.hpp"

namespace sncdp {

struct Variety {
  RingPtr ring;
  int dim = 0;
  KClass tangent_ch;
  ChowClass canonical_class;
  std::string label;

  ChowClass cls(std::string_view text) const { return parse_class(ring, text); }
  ChowClass generator(std::string_view name) const { return ChowClass::generator(ring, name); }
  ChowClass point_class() const;
};

// Builds a variety from a presentation and its tangent Chern character;
// the canonical class is read off as -ch_1(T).
Variety make_variety(RingPtr ring, KClass tangent_ch, std::string label);

// Rank-2 bundle on a base, by total Chern class 1 + c1 + c2.
struct BundleData {
  int rank = 2;
  ChowClass total_chern;
};

struct ProjectiveBundle {
  Variety total;
  Pushforward projection;
  KClass relative_tangent;
};

struct Product {
  Variety total;
  Pushforward to_first;
  Pushforward to_second;
};

// Q[h]/(h^(n+1)) with T = (n+1) O(1) - O.
Variety projective_space(int n, const std::string& variable = "h");
Variety point();

// P(O + O(-n)) over P^1: base class f, tautological class e, e^2 = -n e f.
Variety hirzebruch(int n);
ProjectiveBundle hirzebruch_bundle(int n);

// Generators of Y that clash with X are renamed with a numeric suffix.
Product product_with_projections(const Variety& x, const Variety& y);
Variety product(const Variety& x, const Variety& y);

// Grothendieck quotient convention: xi^2 - c1(E) xi + c2(E) = 0, pi_* xi = 1,
// c1(T_pi) = 2 xi - c1(E).
ProjectiveBundle projective_bundle(const Variety& base, const BundleData& bundle,
                                   const std::string& fiber_variable = "xi",
                                   const std::string& label = "");

Rational integrate(const Variety& x, const ChowClass& c);

// Integral of the top Chern class of the tangent bundle.
Integer euler_number(const Variety& x);

}  // namespace sncdp
