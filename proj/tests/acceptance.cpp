// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

#include "sncdp/bps_local.hpp"
#include "sncdp/gw_local.hpp"
#include "unit/support.hpp"

using namespace sncdp;
namespace t = sncdp::testing;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) failures.push_back(what);
  }
};

std::string str(const KClass& k) { return k.to_string(); }

void example1(Check& c) {
  FamilySetup s = builtin_example("f1f1");
  c.equal(local_gw_genus0(s), Rational(-2), "N0 = -2");
  c.equal(local_gw_genus0_via_dualizing(s), Rational(-2), "dualizing route gives -2");
}

void example2(Check& c) {
  GwResult r = local_gw_genus0_detailed(builtin_example("p2f6"));
  c.equal(r.value, Rational(4), "N0 = 4");
  c.equal(str(r.e_dual_index.component_terms.at(0)), "3+6*f1+6*f2-6*f1*f2", "P2 component index");
  c.equal(str(r.e_dual_index.component_terms.at(1)), "3+4*f1", "F6 component index");
  c.equal(str(*r.e_dual_index.divisor_term), "3", "divisor term");
  c.equal(str(r.e_dual_index.total), "3+10*f1+6*f2-6*f1*f2", "index total");
  c.equal(str(r.tangent_index.twisted_terms.at(0)), "2-3*f1+f2-3*f1*f2", "tangent row 1");
  c.equal(str(r.tangent_index.twisted_terms.at(1)), "2+6*f1", "tangent row 2");
  c.equal(str(*r.tangent_index.node_term), "1-3*f1-f2+3*f1*f2", "node row");
  c.equal(str(r.tangent_index.total), "3+6*f1+2*f2-6*f1*f2", "tangent total");
  c.equal(r.chern_class.to_string(), "1-4*f1-4*f2+16*f1*f2", "Chern class");
}

void bps(Check& c) {
  c.equal(weighted_euler_smooth(projective_space(1)), Integer(-2), "P1 weighted Euler");
  c.equal(weighted_euler_smooth(product(projective_space(1, "f1"), projective_space(1, "f2"))), Integer(4),
          "P1xP1 weighted Euler");
  for (const auto& name : builtin_example_names()) {
    GVTable table = gv_table(builtin_sheaf_moduli(name));
    for (const auto& n : table.higher) c.equal(n, Integer(0), name + " higher genus vanishes");
    c.expect(multiple_cover_check(local_gw_genus0(builtin_example(name)), table, true).pass,
             name + " multiple cover");
  }
}

std::vector<std::string> names(const Classification& cl) {
  std::vector<std::string> out;
  for (const auto& cfg : cl.configurations) out.push_back(cfg.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

void classification(Check& c) {
  std::vector<std::string> rank2{"F0 u F2 (e ~ e)",   "F0 u F4 (e+f ~ e)", "F1 u F1 (e ~ e)",
                                 "F1 u F3 (e+f ~ e)", "P2 u F3 (l ~ e)",   "P2 u F6 (2*l ~ e)"};
  auto got2 = names(classify(2, 8, 8));
  c.equal(got2, rank2, "six rank-2 configurations");
  auto got3 = names(classify(3, 8, 8));
  c.equal(got3, std::vector<std::string>{"F2 u F2 u F2 (f ~ e, f ~ e, f ~ e)"}, "F2 triangle");
  for (int bound : {10, 12, 16}) {
    c.equal(names(classify(2, bound, bound)), rank2, "rank 2 saturated at " + std::to_string(bound));
    c.equal(names(classify(3, bound, bound)), got3, "rank 3 saturated at " + std::to_string(bound));
  }
}

void geometry(Check& c) {
  FamilySetup s = builtin_example("p2f6");
  const auto& c1 = s.components.at(0);
  c.equal(c1.projection.push(c1.total.cls("h^2")), s.moduli.cls("f1+f2"), "pi_* h^2 = f1+f2");
  c.equal(s.divisor->class_in.at(0), c1.total.cls("h+f1-f2"), "[D] = h+f1-f2");
  try {
    validate(s);
  } catch (const DomainError& e) {
    c.expect(false, std::string("[D] rejected: ") + e.what());
  }
  try {
    RingMap r = RingMap::from_text(c1.total.ring, s.divisor->ring, {{"f1", "f1"}, {"f2", "f2"}, {"h", "2*f1"}});
    c.equal(r.apply(c1.total.cls("h")), parse_class(s.divisor->ring, "2*f1"), "h|D = 2 f1");
  } catch (const DomainError& e) {
    c.expect(false, std::string("h -> 2 f1 rejected: ") + e.what());
  }
}

void sheaf_characters(Check& c) {
  Variety p2 = surface_variety(SurfaceType::p2());
  Variety f6 = surface_variety(SurfaceType::f(6));
  c.equal(e_character(p2).ch(), p2.cls("6*l^2") + ChowClass::constant(p2.ring, 3), "3 + 6 p1 on P2");
  c.equal(e_character(f6).ch(), f6.cls("3+4*e*f"), "3 + 4 p2 on F6");
  for (int rank : {2, 3}) {
    for (const auto& cfg : classify(rank, 8, 8).configurations) {
      for (const auto& comp : cfg.components) {
        KClass e = e_character(comp);
        c.equal(e.rank(), Integer(3), comp.type.to_string() + " rank 3");
        c.expect(e.ch_part(1).is_zero(), comp.type.to_string() + " c1 = 0");
      }
    }
  }
}

void properties(Check& c) {
  int failures = 0;
  int b = t::projection_formula_cases(t::bundle_cases(), 12, failures);
  int p = t::projection_formula_cases(t::product_cases(), 20, failures);
  int i = t::projection_formula_cases(t::iso_cases(), 40, failures);
  c.expect(b >= 100 && p >= 100 && i >= 100, "at least 100 projection-formula cases per kind");
  c.equal(failures, 0, "projection formula");

  for (const auto& pb : t::random_bundles(30)) {
    c.equal(grr_index(pb.projection, pb.relative_tangent, KClass::trivial(pb.total.ring, 1)),
            KClass::trivial(pb.projection.target(), 1), "pi_* td(T_pi) = 1");
  }
  for (const auto& [name, v] : t::sample_varieties()) {
    for (int rank = 0; rank <= 3; ++rank) {
      ChowClass total = ChowClass::constant(v.ring, 1) + t::random_class(v.ring, -1, false);
      c.equal(ch_to_chern(chern_to_ch(rank, total)), total, "ch/Chern roundtrip on " + name);
    }
    KClass k = t::random_kclass(v.ring);
    c.equal(dual(dual(k)), k, "dual involution on " + name);
  }
  c.equal(euler_number(projective_space(2)), Integer(3), "e(P2) = 3");
  for (int n = 0; n <= 8; ++n) c.equal(euler_number(hirzebruch(n)), Integer(4), "e(Fn) = 4");
  c.equal(euler_number(product(projective_space(1, "f1"), projective_space(1, "f2"))), Integer(4), "e(P1xP1) = 4");

  Variety p1 = projective_space(1);
  Pushforward to_point = Pushforward::product_projection(p1.ring, {"h"}, point().ring, {});
  for (int d = -10; d <= 10; ++d) {
    KClass chi = grr_index(to_point, p1.tangent_ch, KClass::line_bundle(p1.cls(std::to_string(d) + "*h")));
    c.equal(chi, KClass::trivial(point().ring, d + 1), "chi(O(" + std::to_string(d) + ")) = d+1");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"f1f1 (F1 u F1) gives N0 = -2 by both routes", example1},
      {"p2f6 (P2 u F6) gives N0 = 4 with exact intermediates", example2},
      {"BPS numbers, vanishing higher genus and multiple covers", bps},
      {"classification of rank 2 and 3 with saturation", classification},
      {"geometry anchors for P(alpha^*Q) and D", geometry},
      {"sheaf characters on P2, F6 and all classified components", sheaf_characters},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
    if (!ok) {
      std::cout << " [" << c.failures.front();
      if (c.failures.size() > 1) std::cout << " and " << c.failures.size() - 1 << " more";
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return failed;
}
