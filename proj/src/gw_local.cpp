#include "sncdp/gw_local.hpp"

namespace sncdp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("inconsistent setup: " + what);
}

std::vector<Monomial> full_basis(const RingPtr& ring) {
  std::vector<Monomial> out;
  for (int d = 0; d <= ring->dim(); ++d) {
    auto part = ring->basis(d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

const GluedDivisor& divisor_of(const FamilySetup& setup) {
  if (!setup.divisor) throw DomainError("inconsistent setup: missing divisor data");
  return *setup.divisor;
}

ChowClass integral_chern(const KClass& k, const std::string& what) {
  ChowClass c = ch_to_chern(k);
  for (const auto& [m, coeff] : c.terms()) {
    if (!is_integer(coeff)) {
      throw DomainError("non-integral Chern class " + c.to_string() + " for " + what);
    }
  }
  return c;
}

}  // namespace

void validate(const FamilySetup& setup) {
  require(setup.moduli.ring != nullptr, "moduli space missing");
  if (!setup.moduli_smooth) {
    throw DomainError("non-smooth moduli declared; only smooth moduli spaces are supported");
  }
  require(!setup.components.empty(), "no curve family components");
  require(setup.components.size() <= 2, "at most two curve family components are supported");
  require(setup.components.size() == 1 || setup.divisor.has_value(), "missing divisor data");

  Verdict verdict = check_config(setup.surface);
  if (!verdict.pass) throw DomainError("surface fails the local snc del Pezzo conditions: " + verdict.violations.front());
  require(setup.sheaf_characters.empty() ||
              setup.sheaf_characters.size() == setup.surface.components.size(),
          "one sheaf character per surface component");
  for (std::size_t s = 0; s < setup.sheaf_characters.size(); ++s) {
    if (!setup.sheaf_characters[s]) continue;
    require(same_ring(setup.sheaf_characters[s]->ring(), setup.surface.components[s].variety.ring),
            "sheaf character " + std::to_string(s) + " lives on the wrong surface");
  }

  for (std::size_t i = 0; i < setup.components.size(); ++i) {
    const auto& c = setup.components[i];
    const std::string tag = "component " + std::to_string(i) + ": ";
    require(same_ring(c.projection.source(), c.total.ring), tag + "projection source is not the total space");
    require(same_ring(c.projection.target(), setup.moduli.ring), tag + "projection does not target M");
    require(c.projection.fiber_dimension() == 1, tag + "fibers must be curves");
    require(same_ring(c.rel_tangent.ring(), c.total.ring), tag + "relative tangent on the wrong ring");
    require(c.rel_tangent.rank() == 1, tag + "relative tangent must have rank 1");
    require(c.surface_component >= 0 && c.surface_component < setup.surface.rank(),
            tag + "surface component index out of range");
    require(same_ring(c.surface_pullback.source(), setup.surface.components[c.surface_component].variety.ring),
            tag + "surface pullback has the wrong source");
    require(same_ring(c.surface_pullback.target(), c.total.ring), tag + "surface pullback has the wrong target");
  }

  if (!setup.divisor) return;
  const auto& d = *setup.divisor;
  require(d.class_in.size() == setup.components.size(), "one divisor class per component");
  require(d.restrict_from.size() == setup.components.size(), "one restriction map per component");
  require(d.to_moduli.kind() == PushforwardKind::Isomorphism, "D must be identified with M by an isomorphism");
  require(same_ring(d.to_moduli.source(), d.ring), "D identification has the wrong source");
  require(same_ring(d.to_moduli.target(), setup.moduli.ring), "D identification has the wrong target");
  for (std::size_t i = 0; i < setup.components.size(); ++i) {
    const auto& c = setup.components[i];
    const std::string tag = "divisor in component " + std::to_string(i) + ": ";
    require(same_ring(d.class_in[i].ring(), c.total.ring) && d.class_in[i].is_homogeneous(1) &&
                !d.class_in[i].is_zero(),
            tag + "[D] must be a nonzero degree-1 class");
    require(same_ring(d.restrict_from[i].source(), c.total.ring) && same_ring(d.restrict_from[i].target(), d.ring),
            tag + "restriction map has the wrong rings");
    // D is a section of pi_i: pi_*([D] a) = a|_D for every class a.
    for (const auto& m : full_basis(c.total.ring)) {
      ChowClass a(c.total.ring, Terms{{m, Rational(1)}});
      ChowClass lhs = c.projection.push(d.class_in[i] * a);
      ChowClass rhs = d.to_moduli.push(d.restrict_from[i].apply(a));
      require(lhs == rhs, tag + "pi_*([D] * " + a.to_string() + ") = " + lhs.to_string() +
                              " but the restriction gives " + rhs.to_string());
    }
  }
}

KClass restrict_to_divisor(const FamilySetup& setup, int component, const KClass& v) {
  const auto& d = divisor_of(setup);
  const auto& c = setup.components.at(component);
  return d.restrict_from[component].apply(c.surface_pullback.apply(v));
}

IndexBreakdown family_index_breakdown(const FamilySetup& setup, const std::vector<KClass>& v,
                                      const KClass& v_on_d) {
  require(v.size() == setup.surface.components.size(), "one sheaf per surface component");
  IndexBreakdown out;
  out.total = KClass::zero(setup.moduli.ring);
  for (const auto& c : setup.components) {
    const KClass& sheaf = v[c.surface_component];
    KClass term = grr_index(c.projection, c.rel_tangent, c.surface_pullback.apply(sheaf));
    out.total += term;
    out.component_terms.push_back(std::move(term));
  }
  if (setup.divisor) {
    for (const auto& c : setup.components) {
      if (v[c.surface_component].rank() != v_on_d.rank()) {
        throw DomainError("rank incompatibility on D: " + v[c.surface_component].rank().str() + " vs " +
                          v_on_d.rank().str());
      }
    }
    KClass d_term = setup.divisor->to_moduli.push(v_on_d);
    out.total -= d_term;
    out.divisor_term = std::move(d_term);
  }
  return out;
}

KClass family_index_bundle(const FamilySetup& setup, const std::vector<KClass>& v, const KClass& v_on_d) {
  return family_index_breakdown(setup, v, v_on_d).total;
}

TangentIndexBreakdown relative_tangent_breakdown(const FamilySetup& setup) {
  TangentIndexBreakdown out;
  out.total = KClass::zero(setup.moduli.ring);
  if (!setup.divisor) {
    for (const auto& c : setup.components) {
      KClass term = grr_index(c.projection, c.rel_tangent, c.rel_tangent);
      out.total += term;
      out.twisted_terms.push_back(std::move(term));
    }
    return out;
  }
  const auto& d = *setup.divisor;
  require(setup.components.size() == 2, "the node correction needs exactly two components");
  for (std::size_t i = 0; i < setup.components.size(); ++i) {
    const auto& c = setup.components[i];
    KClass twisted = tensor(c.rel_tangent, KClass::line_bundle(-d.class_in[i]));
    KClass term = grr_index(c.projection, c.rel_tangent, twisted);
    out.total += term;
    out.twisted_terms.push_back(std::move(term));
  }
  KClass node = tensor(d.restrict_from[0].apply(setup.components[0].rel_tangent),
                       d.restrict_from[1].apply(setup.components[1].rel_tangent));
  KClass node_on_m = d.to_moduli.push(node);
  out.total -= node_on_m;
  out.node_term = std::move(node_on_m);
  return out;
}

KClass relative_tangent_index(const FamilySetup& setup) { return relative_tangent_breakdown(setup).total; }

KClass sheaf_character(const FamilySetup& setup, int surface_component) {
  if (surface_component < static_cast<int>(setup.sheaf_characters.size()) &&
      setup.sheaf_characters[surface_component]) {
    return *setup.sheaf_characters[surface_component];
  }
  return e_character(setup.surface.components.at(surface_component));
}

GwResult local_gw_genus0_detailed(const FamilySetup& setup) {
  validate(setup);
  std::vector<KClass> e_dual;
  for (int s = 0; s < setup.surface.rank(); ++s) e_dual.push_back(dual(sheaf_character(setup, s)));

  GwResult r;
  KClass on_d = KClass::zero(setup.moduli.ring);
  if (setup.divisor) {
    KClass first = restrict_to_divisor(setup, 0, e_dual[setup.components[0].surface_component]);
    for (std::size_t i = 1; i < setup.components.size(); ++i) {
      KClass other = restrict_to_divisor(setup, static_cast<int>(i), e_dual[setup.components[i].surface_component]);
      require(other == first, "f_D^*E^* differs between components (" + first.to_string() + " vs " +
                                  other.to_string() + ")");
    }
    on_d = first;
    r.e_dual_on_divisor = setup.divisor->to_moduli.push(first);
  } else {
    r.e_dual_on_divisor = KClass::zero(setup.moduli.ring);
  }
  r.e_dual_index = family_index_breakdown(setup, e_dual, on_d);
  r.tangent_index = relative_tangent_breakdown(setup);
  r.difference = -r.e_dual_index.total + r.tangent_index.total;
  r.virtual_rank = r.difference.rank();
  if (r.virtual_rank != 0) {
    throw DomainError("nonzero excess: -ind f^*E^* + ind T_pi has virtual rank " + r.virtual_rank.str() +
                      ", expected 0 (inconsistent setup)");
  }
  r.chern_class = integral_chern(r.difference, "-ind f^*E^* + ind T_pi");
  r.moduli_chern_class = integral_chern(setup.moduli.tangent_ch, "T_M");
  ChowClass product = r.chern_class * r.moduli_chern_class;
  r.value = integrate(setup.moduli, product.graded_part(setup.moduli.dim));
  return r;
}

Rational local_gw_genus0(const FamilySetup& setup) { return local_gw_genus0_detailed(setup).value; }

KClass dualizing_index(const FamilySetup& setup) {
  validate(setup);
  for (const auto& c : setup.components) {
    const auto& map = c.surface_pullback;
    bool iso = map.source()->size() == map.target()->size() && map.source()->dim() == map.target()->dim();
    for (const auto& img : map.images()) {
      iso = iso && img.terms().size() == 1 && img.terms().begin()->second == 1 && img.top_degree() == 1;
    }
    if (!iso) throw DomainError("universal map is not an isomorphism onto the surface");
  }
  KClass total = KClass::zero(setup.moduli.ring);
  std::vector<ChowClass> twisted;
  for (std::size_t i = 0; i < setup.components.size(); ++i) {
    const auto& c = setup.components[i];
    ChowClass k = c.surface_pullback.apply(setup.surface.components[c.surface_component].variety.canonical_class);
    if (setup.divisor) k += setup.divisor->class_in[i];
    twisted.push_back(k);
    total += grr_index(c.projection, c.rel_tangent, KClass::line_bundle(k));
  }
  if (setup.divisor) {
    const auto& d = *setup.divisor;
    // omega_{S_i}(C)|_C = omega_C by adjunction, from either side.
    ChowClass kc = d.restrict_from[0].apply(twisted[0]);
    require(d.restrict_from[1].apply(twisted[1]) == kc, "omega_C differs between components");
    total -= d.to_moduli.push(KClass::line_bundle(kc));
  }
  return total;
}

Rational local_gw_genus0_via_dualizing(const FamilySetup& setup) {
  ChowClass inverse = ch_to_chern(-dualizing_index(setup));
  return integrate(setup.moduli, inverse.graded_part(setup.moduli.dim));
}

std::vector<std::string> builtin_example_names() { return {"f1f1", "p2f6"}; }

namespace {

FamilySetup build_f1f1() {
  FamilySetup s;
  s.name = "f1f1";
  s.curve_class_label = "f1+f2";
  s.moduli = projective_space(1, "f1");
  s.surface = {{make_component(SurfaceType::f(1), {{1, 0}}), make_component(SurfaceType::f(1), {{1, 0}})},
               {{0, 0, 1, 0}}};

  GluedDivisor d;
  d.ring = projective_space(1, "f1").ring;
  RingMap id_d = RingMap::from_text(d.ring, s.moduli.ring, {{"f1", "f1"}});
  RingMap id_m = RingMap::from_text(s.moduli.ring, d.ring, {{"f1", "f1"}});
  d.to_moduli = Pushforward::isomorphism(id_d, id_m);

  for (int i = 0; i < 2; ++i) {
    CurveFamilyComponent c;
    c.total = hirzebruch(1);
    c.projection = Pushforward::projective_bundle(c.total.ring, "e", s.moduli.ring, {{"f1", "f"}});
    c.rel_tangent = c.projection.relative_tangent();
    c.surface_component = i;
    c.surface_pullback =
        RingMap::from_text(s.surface.components[i].variety.ring, c.total.ring, {{"f", "f"}, {"e", "e"}});
    d.class_in.push_back(c.total.cls("e"));
    d.restrict_from.push_back(RingMap::from_text(c.total.ring, d.ring, {{"f", "f1"}, {"e", "-f1"}}));
    s.components.push_back(std::move(c));
  }
  s.divisor = std::move(d);
  return s;
}

FamilySetup build_p2f6() {
  FamilySetup s;
  s.name = "p2f6";
  s.curve_class_label = "l+f";
  s.moduli = product(projective_space(1, "f1"), projective_space(1, "f2"));
  s.surface = {{make_component(SurfaceType::p2(), {{2, 0}}), make_component(SurfaceType::f(6), {{1, 0}})},
               {{0, 0, 1, 0}}};

  GluedDivisor d;
  d.ring = product(projective_space(1, "f1"), projective_space(1, "f2")).ring;
  RingMap id_d = RingMap::from_text(d.ring, s.moduli.ring, {{"f1", "f1"}, {"f2", "f2"}});
  RingMap id_m = RingMap::from_text(s.moduli.ring, d.ring, {{"f1", "f1"}, {"f2", "f2"}});
  d.to_moduli = Pushforward::isomorphism(id_d, id_m);

  // C_1 = P(alpha^*Q), alpha^*h = f1 + f2, c(Q) = 1 + h + h^2.
  {
    ProjectiveBundle pb = projective_bundle(s.moduli, {2, s.moduli.cls("1+f1+f2+2*f1*f2")}, "h", "P(alpha^*Q)");
    CurveFamilyComponent c{pb.total, pb.projection, pb.relative_tangent, 0, {}};
    c.surface_pullback = RingMap::from_text(s.surface.components[0].variety.ring, c.total.ring, {{"l", "h"}});
    d.class_in.push_back(c.total.cls("h+f1-f2"));
    d.restrict_from.push_back(
        RingMap::from_text(c.total.ring, d.ring, {{"f1", "f1"}, {"f2", "f2"}, {"h", "2*f1"}}));
    s.components.push_back(std::move(c));
  }
  // C_2 = F6 x P1 over M via pi_F6 x id.
  {
    CurveFamilyComponent c;
    c.total = product(hirzebruch(6), projective_space(1, "g"));
    c.projection = Pushforward::projective_bundle(c.total.ring, "e", s.moduli.ring, {{"f1", "f"}, {"f2", "g"}});
    c.rel_tangent = c.projection.relative_tangent();
    c.surface_component = 1;
    c.surface_pullback =
        RingMap::from_text(s.surface.components[1].variety.ring, c.total.ring, {{"f", "f"}, {"e", "e"}});
    d.class_in.push_back(c.total.cls("e"));
    d.restrict_from.push_back(
        RingMap::from_text(c.total.ring, d.ring, {{"f", "f1"}, {"e", "-6*f1"}, {"g", "f2"}}));
    s.components.push_back(std::move(c));
  }
  s.divisor = std::move(d);
  return s;
}

}  // namespace

FamilySetup builtin_example(const std::string& name) {
  FamilySetup s;
  if (name == "f1f1") {
    s = build_f1f1();
  } else if (name == "p2f6") {
    s = build_p2f6();
  } else {
    throw DomainError("unknown example '" + name + "'");
  }
  validate(s);
  return s;
}

}  // namespace sncdp
