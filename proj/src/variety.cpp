#include "sncdp/variety.hpp"

#include <algorithm>

namespace sncdp {

namespace {

Monomial widen(const Monomial& m, std::size_t offset, std::size_t size) {
  Monomial out(size, 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[offset + i] = m[i];
  return out;
}

Terms widen(const Terms& t, std::size_t offset, std::size_t size) {
  Terms out;
  for (const auto& [m, c] : t) out.emplace(widen(m, offset, size), c);
  return out;
}

std::vector<std::pair<std::string, std::string>> same_names(const RingPtr& ring) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : ring->variables()) out.emplace_back(v.name, v.name);
  return out;
}

}  // namespace

ChowClass Variety::point_class() const {
  return ChowClass(ring, Terms{{ring->point_monomial(), Rational(1)}});
}

Variety make_variety(RingPtr ring, KClass tangent_ch, std::string label) {
  if (!same_ring(ring, tangent_ch.ring())) throw DomainError("tangent class lives in another ring");
  if (tangent_ch.rank() != ring->dim()) {
    throw DomainError("tangent rank " + tangent_ch.rank().str() + " differs from dimension " +
                      std::to_string(ring->dim()));
  }
  Variety v;
  v.ring = ring;
  v.dim = ring->dim();
  v.canonical_class = -tangent_ch.ch_part(1);
  v.tangent_ch = std::move(tangent_ch);
  v.label = std::move(label);
  return v;
}

Variety projective_space(int n, const std::string& variable) {
  if (n < 1) throw DomainError("projective_space needs n >= 1");
  Monomial top{n};
  auto ring = make_ring({{variable, 1}}, std::vector<RewriteRule>{{variable, n + 1, {}}}, n, top);
  ChowClass h = ChowClass::generator(ring, variable);
  ChowClass ch = exp_nilpotent(h) * Rational(n + 1) - ChowClass::constant(ring, 1);
  return make_variety(ring, KClass(ch), "P" + std::to_string(n));
}

Variety point() {
  auto ring = make_ring({}, std::vector<RewriteRule>{}, 0, Monomial{});
  return make_variety(ring, KClass::zero(ring), "pt");
}

ProjectiveBundle hirzebruch_bundle(int n) {
  if (n < 0) throw DomainError("hirzebruch needs n >= 0");
  Variety base = projective_space(1, "f");
  ChowClass c = ChowClass::constant(base.ring, 1) - base.generator("f") * Rational(n);
  return projective_bundle(base, {2, c}, "e", "F" + std::to_string(n));
}

Variety hirzebruch(int n) { return hirzebruch_bundle(n).total; }

ProjectiveBundle projective_bundle(const Variety& base, const BundleData& bundle,
                                   const std::string& fiber_variable, const std::string& label) {
  if (bundle.rank != 2) throw DomainError("only rank-2 projective bundles are supported");
  if (!same_ring(bundle.total_chern.ring(), base.ring)) throw DomainError("bundle lives on another base");
  if (bundle.total_chern.constant_term() != 1) throw DomainError("total Chern class must start with 1");
  for (int d = bundle.rank + 1; d <= base.dim; ++d) {
    if (!bundle.total_chern.graded_part(d).is_zero()) {
      throw DomainError("Chern class c_" + std::to_string(d) + " of a rank-2 bundle must vanish");
    }
  }
  if (base.ring->index_of(fiber_variable) >= 0) {
    throw DomainError("fiber variable '" + fiber_variable + "' clashes with the base");
  }
  const std::size_t nb = base.ring->size();
  const std::size_t n = nb + 1;

  std::vector<VariableSpec> vars = base.ring->variables();
  vars.push_back({fiber_variable, 1});
  std::vector<RewriteRule> rules;
  for (const auto& r : base.ring->rules()) rules.push_back({r.variable, r.power, widen(r.replacement, 0, n)});

  Terms xi_rule;
  const ChowClass c1 = bundle.total_chern.graded_part(1);
  const ChowClass c2 = bundle.total_chern.graded_part(2);
  for (const auto& [m, c] : c1.terms()) {
    Monomial w = widen(m, 0, n);
    w[nb] = 1;
    xi_rule.emplace(w, c);
  }
  for (const auto& [m, c] : c2.terms()) xi_rule.emplace(widen(m, 0, n), -c);
  rules.push_back({fiber_variable, 2, xi_rule});

  Monomial point = widen(base.ring->point_monomial(), 0, n);
  point[nb] = 1;
  auto ring = make_ring(std::move(vars), std::move(rules), base.dim + 1, point);

  Pushforward pf = Pushforward::projective_bundle(ring, fiber_variable, base.ring, same_names(base.ring));
  KClass rel = pf.relative_tangent();
  KClass tangent = KClass(pf.pull(base.tangent_ch.ch())) + rel;
  std::string name = label.empty() ? "P(E) over " + base.label : label;
  return {make_variety(ring, tangent, name), pf, rel};
}

Product product_with_projections(const Variety& x, const Variety& y) {
  const std::size_t nx = x.ring->size();
  const std::size_t n = nx + y.ring->size();
  std::vector<VariableSpec> vars = x.ring->variables();
  std::vector<std::pair<std::string, std::string>> renames;
  std::string rename_note;
  for (const auto& v : y.ring->variables()) {
    std::string name = v.name;
    auto taken = [&](const std::string& candidate) {
      return std::any_of(vars.begin(), vars.end(), [&](const VariableSpec& s) { return s.name == candidate; });
    };
    for (int k = 2; taken(name); ++k) name = v.name + "_" + std::to_string(k);
    if (name != v.name) rename_note += (rename_note.empty() ? "" : ",") + v.name + "->" + name;
    renames.emplace_back(v.name, name);
    vars.push_back({name, v.degree});
  }

  std::vector<RewriteRule> rules;
  for (const auto& r : x.ring->rules()) rules.push_back({r.variable, r.power, widen(r.replacement, 0, n)});
  for (std::size_t i = 0; i < y.ring->size(); ++i) {
    const auto& r = y.ring->rule_for(static_cast<int>(i));
    rules.push_back({renames[i].second, r.power, widen(r.replacement, nx, n)});
  }
  Monomial point = widen(x.ring->point_monomial(), 0, n);
  for (std::size_t i = 0; i < y.ring->size(); ++i) point[nx + i] = y.ring->point_monomial()[i];
  auto ring = make_ring(std::move(vars), std::move(rules), x.dim + y.dim, point);

  std::vector<std::string> x_names;
  for (const auto& v : x.ring->variables()) x_names.push_back(v.name);
  std::vector<std::string> y_names;
  for (const auto& [orig, renamed] : renames) y_names.push_back(renamed);

  Pushforward to_first = Pushforward::product_projection(ring, y_names, x.ring, same_names(x.ring));
  Pushforward to_second = Pushforward::product_projection(ring, x_names, y.ring, renames);

  KClass tangent(to_first.pull(x.tangent_ch.ch()) + to_second.pull(y.tangent_ch.ch()));
  std::string label = x.label;
  if (y.ring->size() > 0 || y.dim > 0) {
    label += " x " + y.label;
    if (!rename_note.empty()) label += " [" + rename_note + "]";
  }
  return {make_variety(ring, tangent, label), to_first, to_second};
}

Variety product(const Variety& x, const Variety& y) { return product_with_projections(x, y).total; }

Rational integrate(const Variety& x, const ChowClass& c) {
  if (!same_ring(x.ring, c.ring())) throw DomainError("integrate: ring mismatch");
  return c.coefficient(x.ring->point_monomial());
}

Integer euler_number(const Variety& x) {
  ChowClass c = ch_to_chern(x.tangent_ch);
  Rational value = integrate(x, c.graded_part(x.dim));
  if (!is_integer(value)) {
    throw DomainError("non-integral Euler number " + to_string(value) + " for " + x.label);
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace sncdp
