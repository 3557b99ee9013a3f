/*
 * gw_local.hpp
 * ------------
 * Genus-0 local Gromov-Witten invariants of a rank-2 snc surface from an
 * explicitly declared universal curve.
 *
 * The universal curve over a smooth moduli space M is a union of components
 * C_i -> M (rank-2 projective bundles, i.e. families of P^1), each mapping to
 * one surface component S_i, glued along a divisor D that is a section of
 * every C_i and is identified with M. With E the rank-3 bundle with
 * ch(E|S_i) = ch(Omega) + ch(omega^*),
 *
 *   ind R pi_* f^*V = sum_i ind R pi_i* f_i^*V - ind f_D^*V,
 *   ind R pi_* T_pi = sum_i ind R pi_i* T_pi_i(-D) - T_pi_1|D (x) T_pi_2|D,
 *   N^0 = integral over M of c(-ind R pi_* f^*E^* + ind R pi_* T_pi) c(T_M).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sncdp/snc_delpezzo.hpp"

namespace sncdp {

struct CurveFamilyComponent {
  Variety total;
  Pushforward projection;  // C_i -> M
  KClass rel_tangent;      // T_{pi_i}
  int surface_component = 0;
  RingMap surface_pullback;  // f_i^*: A(S_i) -> A(C_i)
};

struct GluedDivisor {
  RingPtr ring;                       // A(D)
  std::vector<ChowClass> class_in;    // [D] in each A(C_i)
  std::vector<RingMap> restrict_from; // A(C_i) -> A(D)
  Pushforward to_moduli;              // D ~ M
};

struct FamilySetup {
  std::string name;
  std::string curve_class_label;
  Variety moduli;
  bool moduli_smooth = true;
  std::vector<CurveFamilyComponent> components;
  std::optional<GluedDivisor> divisor;
  SncConfiguration surface;
  // Optional overrides of ch(E|S_i), one per surface component.
  std::vector<std::optional<KClass>> sheaf_characters;
};

// Throws DomainError naming the first failed invariant.
void validate(const FamilySetup& setup);

struct IndexBreakdown {
  std::vector<KClass> component_terms;  // on M
  std::optional<KClass> divisor_term;   // on M, subtracted
  KClass total;
};

// V[i] lives on surface component i; v_on_d on D.
IndexBreakdown family_index_breakdown(const FamilySetup& setup, const std::vector<KClass>& v,
                                      const KClass& v_on_d);
KClass family_index_bundle(const FamilySetup& setup, const std::vector<KClass>& v, const KClass& v_on_d);

// Per component: the sheaf f_i^*V restricted to D (as a class on D).
KClass restrict_to_divisor(const FamilySetup& setup, int component, const KClass& v);

struct TangentIndexBreakdown {
  std::vector<KClass> twisted_terms;    // ch(ind R pi_i* T_pi_i(-D)) on M
  std::optional<KClass> node_term;      // ch(T_pi_1|D (x) T_pi_2|D) on M
  KClass total;
};

TangentIndexBreakdown relative_tangent_breakdown(const FamilySetup& setup);
KClass relative_tangent_index(const FamilySetup& setup);

// ch(E|S_i): the declared override, else e_character of the component.
KClass sheaf_character(const FamilySetup& setup, int surface_component);

struct GwResult {
  Rational value;
  IndexBreakdown e_dual_index;       // ind R pi_* f^*E^*
  KClass e_dual_on_divisor;          // f_D^*E^* on M
  TangentIndexBreakdown tangent_index;
  KClass difference;                 // -ind f^*E^* + ind T_pi
  ChowClass chern_class;             // c(difference)
  ChowClass moduli_chern_class;      // c(T_M)
  Integer virtual_rank;
};

GwResult local_gw_genus0_detailed(const FamilySetup& setup);
Rational local_gw_genus0(const FamilySetup& setup);

// ind R pi_* omega_S via the normalization sequence
//   0 -> omega_S -> (+)_i omega_{S_i}(C) -> omega_C -> 0,
// for families whose universal map is an isomorphism onto the surface.
KClass dualizing_index(const FamilySetup& setup);
// deg( c(ind R pi_* omega_S)^{-1} cap [M] ), valid under the same hypothesis.
Rational local_gw_genus0_via_dualizing(const FamilySetup& setup);

// "f1f1": F1 u F1 along e, gamma = f1 + f2, M = P^1.
// "p2f6": P2 u F6 along a conic ~ e, gamma = l + f, M = P^1 x P^1.
FamilySetup builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace sncdp
