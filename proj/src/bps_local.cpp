#include "sncdp/bps_local.hpp"

namespace sncdp {

Integer weighted_euler_smooth(const Variety& m) {
  Integer e = euler_number(m);
  return m.dim % 2 == 0 ? e : Integer(-e);
}

Integer GVTable::at(int genus) const {
  if (genus < 0) throw DomainError("genus must be non-negative");
  if (genus == 0) return n0;
  if (genus - 1 >= static_cast<int>(higher.size())) throw DomainError("genus beyond the table");
  return higher[genus - 1];
}

GVTable gv_table(const SheafModuli& m, int max_genus) {
  if (!m.hilbert_chow_embedding) {
    throw DomainError("higher-genus GV undefined here: the Hilbert-Chow map is not declared an embedding");
  }
  if (max_genus < 0) throw DomainError("max_genus must be non-negative");
  GVTable t;
  t.n0 = weighted_euler_smooth(m.space);
  t.higher.assign(max_genus, Integer(0));
  return t;
}

MultipleCoverReport multiple_cover_check(const Rational& gw, const GVTable& table, bool primitive) {
  if (!primitive) {
    throw DomainError("multiple-cover check is only implemented for primitive curve classes");
  }
  MultipleCoverReport r;
  r.pass = gw == Rational(table.n0);
  r.detail = "N0 = " + to_string(gw) + ", n0 = " + table.n0.str();
  return r;
}

SheafModuli builtin_sheaf_moduli(const std::string& name) {
  if (name == "f1f1") {
    return {projective_space(1, "f1"), "f1+f2", "any", true};
  }
  if (name == "p2f6") {
    return {product(projective_space(1, "f1"), projective_space(1, "f2")), "l+f", "any", true};
  }
  throw DomainError("unknown example '" + name + "'");
}

}  // namespace sncdp
