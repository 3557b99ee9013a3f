/*
 * setup_io.hpp
 * ------------
 * Sectioned plain-text description of a family setup. Values are written in
 * the Chow ring grammar of the ring they live in. Example:
 *
 *   [setup]
 *   name = p2f6
 *   curve_class = l+f
 *   moduli = M
 *
 *   [variety M]
 *   construct = product P1a P1b        # or a raw presentation, see below
 *
 *   [variety C1]
 *   variables = f1, f2, h
 *   relations = f1^2 = 0; f2^2 = 0; h^2 = f1*h+f2*h-2*f1*f2
 *   dim = 3
 *   point = f1*f2*h
 *   tangent_ch = ...
 *
 *   [surface]
 *   components = P2, F6
 *   boundary.0 = 2*l
 *   boundary.1 = e
 *   gluing = 0.0 ~ 1.0
 *
 *   [component 0]
 *   total = C1
 *   surface_component = 0
 *   projection = bundle h       # or: product <integrated generators>
 *   base = f1=f1, f2=f2         # M generator = generator of the total space
 *   surface_pullback = l=h
 *   divisor = h+f1-f2
 *   restrict = f1=f1, f2=f2, h=2*f1
 *
 *   [divisor]
 *   variety = D
 *   to_moduli = f1=f1, f2=f2
 *   from_moduli = f1=f1, f2=f2
 *
 * Optional sections: [sheaf_characters] (one "i = ch" per surface component)
 * and [sheaf_moduli] (variety, hilbert_chow_embedding, polarization,
 * primitive). Lines starting with '#' are comments.
 *
 * Construct forms: "point", "projective_space N VAR", "hirzebruch N",
 * "product A B", "bundle A VAR <total chern class>".
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sncdp/bps_local.hpp"
#include "sncdp/gw_local.hpp"

namespace sncdp {

struct SetupDocument {
  FamilySetup family;
  std::optional<SheafModuli> sheaf_moduli;
  bool primitive = true;
};

// ParseError (position = line number) on syntax; DomainError on bad content.
SetupDocument parse_setup(std::string_view text);
SetupDocument load_setup(const std::string& path);

// Always writes raw presentations, so the output does not depend on
// constructor defaults.
std::string serialize_setup(const SetupDocument& doc);

SetupDocument builtin_document(const std::string& name);

}  // namespace sncdp
