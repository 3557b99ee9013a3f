#pragma once

#include <string>
#include <vector>

#include "sncdp/variety.hpp"

namespace sncdp {

// A moduli space of one-dimensional sheaves, declared smooth.
struct SheafModuli {
  Variety space;
  std::string label;         // curve class
  std::string polarization;  // carried verbatim; independence is assumed, not checked
  bool hilbert_chow_embedding = false;
};

// Behrend-weighted Euler characteristic of a smooth space: (-1)^dim e(M).
Integer weighted_euler_smooth(const Variety& m);

struct GVTable {
  Integer n0;
  std::vector<Integer> higher;  // n_1, n_2, ...

  Integer at(int genus) const;
};

// Requires the Hilbert-Chow embedding flag; higher-genus entries vanish.
GVTable gv_table(const SheafModuli& m, int max_genus = 3);

struct MultipleCoverReport {
  bool pass = false;
  std::string detail;
};

// Only the k = 1 term applies at primitive classes: N0 = n0.
MultipleCoverReport multiple_cover_check(const Rational& gw, const GVTable& table, bool primitive);

SheafModuli builtin_sheaf_moduli(const std::string& name);

}  // namespace sncdp
