/*
 * snc_delpezzo.hpp
 * ----------------
 * Configurations of P^2 and Hirzebruch surfaces glued along smooth rational
 * curves, the local del Pezzo conditions on them, and an exhaustive search
 * for all configurations of rank 2 and 3.
 *
 * A configuration is "local snc del Pezzo" when
 *   (a) each glued curve C satisfies (C.C)_{S_i} + (C.C)_{S_j} = -2, and
 *   (b) on every component, -(K + sum of boundary curves) is ample.
 *
 * Curve classes are a*l on P^2 and a*e + b*f on F_n.
 */
#pragma once

#include <string>
#include <vector>

#include "sncdp/variety.hpp"

namespace sncdp {

enum class SurfaceKind { P2, Hirzebruch };

struct SurfaceType {
  SurfaceKind kind = SurfaceKind::P2;
  int n = 0;  // Hirzebruch index

  static SurfaceType p2() { return {SurfaceKind::P2, 0}; }
  static SurfaceType f(int n) { return {SurfaceKind::Hirzebruch, n}; }

  std::string to_string() const;
  auto operator<=>(const SurfaceType&) const = default;
};

// Variety of a surface type: P^2 uses the generator "l", F_n uses "f", "e".
Variety surface_variety(const SurfaceType& type);

struct CurveClassOnComponent {
  int a = 0;  // coefficient of l (P^2) or e (F_n)
  int b = 0;  // coefficient of f (F_n only)
  ChowClass cls;
  int self_intersection = 0;

  std::string to_string() const;  // "2*l", "e+f", "f"
};

CurveClassOnComponent make_curve(const SurfaceType& type, const Variety& surface, int a, int b);

struct ComponentSurface {
  SurfaceType type;
  Variety variety;
  std::vector<CurveClassOnComponent> boundary_curves;
};

ComponentSurface make_component(const SurfaceType& type, const std::vector<std::pair<int, int>>& curves);

// Curve `curve_i` of component `component_i` is identified with curve
// `curve_j` of component `component_j`.
struct Gluing {
  int component_i = 0;
  int curve_i = 0;
  int component_j = 0;
  int curve_j = 0;
};

struct SncConfiguration {
  std::vector<ComponentSurface> components;
  std::vector<Gluing> gluings;

  int rank() const { return static_cast<int>(components.size()); }
  // e.g. "P2 u F6 (2*l ~ e)"
  std::string to_string() const;
};

struct Verdict {
  bool pass = true;
  std::vector<std::string> violations;
};

// Throws DomainError on malformed input (bad indices, curves not attached).
Verdict check_config(const SncConfiguration& config);

// Ampleness of a degree-1 class with integer coefficients:
// P^2: d > 0; F_n: a e + b f is ample iff a > 0 and b > n a.
bool is_ample(const SurfaceType& type, const ChowClass& divisor);

// Irreducible smooth rational curve classes: l, 2l on P^2; e, f and
// e + b f (max(n,1) <= b <= bound) on F_n.
std::vector<CurveClassOnComponent> smooth_rational_curves(const SurfaceType& type, int coefficient_bound);

struct Classification {
  std::vector<SncConfiguration> configurations;
  // False when the bounds do not certify that nothing was missed.
  bool complete = false;
  std::string completeness_note;
};

// Exhaustive search over P^2 and F_0..F_{n_max}, boundary curves with fiber
// coefficient <= b_max. Rank must be 2 or 3. Output is deduplicated up to
// component permutation (and cyclic reflection for rank 3) and the e <-> f
// symmetry of F_0, and sorted deterministically.
Classification classify(int rank, int n_max, int b_max);

// ch(E|_S) = ch(Omega_S) + ch(omega_S^*) for the rank-3 bundle E.
KClass e_character(const Variety& surface);
KClass e_character(const ComponentSurface& component);

}  // namespace sncdp
