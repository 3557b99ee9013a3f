#include "sncdp/pushforward.hpp"

#include <algorithm>

namespace sncdp {

namespace {

int require_index(const RingPtr& ring, const std::string& name, const char* what) {
  int i = ring->index_of(name);
  if (i < 0) throw DomainError(std::string(what) + ": unknown variable '" + name + "'");
  return i;
}

// Source monomial restricted to base generators, re-indexed in the target.
Monomial translate(const Monomial& m, const std::vector<int>& base_index, std::size_t target_size) {
  Monomial out(target_size, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (base_index[i] < 0) throw DomainError("monomial involves a non-base generator");
    out[base_index[i]] = m[i];
  }
  return out;
}

std::vector<int> base_correspondence(const RingPtr& source, const RingPtr& target,
                                     const std::vector<std::pair<std::string, std::string>>& names,
                                     const std::vector<int>& excluded) {
  std::vector<int> base(source->size(), -1);
  std::vector<bool> covered(target->size(), false);
  for (const auto& [tname, sname] : names) {
    int t = require_index(target, tname, "base map");
    int s = require_index(source, sname, "base map");
    if (covered[t] || base[s] >= 0) throw DomainError("base map is not one-to-one at '" + tname + "'");
    if (target->variables()[t].degree != source->variables()[s].degree) {
      throw DomainError("base map changes the degree of '" + tname + "'");
    }
    covered[t] = true;
    base[s] = t;
  }
  for (std::size_t t = 0; t < target->size(); ++t) {
    if (!covered[t]) throw DomainError("base map misses '" + target->variables()[t].name + "'");
  }
  for (std::size_t s = 0; s < source->size(); ++s) {
    bool skip = std::find(excluded.begin(), excluded.end(), static_cast<int>(s)) != excluded.end();
    if (!skip && base[s] < 0) {
      throw DomainError("generator '" + source->variables()[s].name + "' is neither base nor fiber");
    }
    if (skip && base[s] >= 0) throw DomainError("fiber generator used as base generator");
  }
  // Base relations in the source must be exactly the target relations.
  for (std::size_t s = 0; s < source->size(); ++s) {
    if (base[s] < 0) continue;
    const auto& rs = source->rule_for(static_cast<int>(s));
    const auto& rt = target->rule_for(base[s]);
    Terms translated;
    for (const auto& [m, c] : rs.replacement) translated.emplace(translate(m, base, target->size()), c);
    if (rs.power != rt.power || target->reduce(translated, ReductionOrder::LowestIndexFirst, false) !=
                                    target->reduce(rt.replacement, ReductionOrder::LowestIndexFirst, false)) {
      throw DomainError("relation of '" + source->variables()[s].name + "' differs from the base relation");
    }
  }
  return base;
}

RingMap pullback_from(const RingPtr& source, const RingPtr& target, const std::vector<int>& base) {
  std::vector<ChowClass> images(target->size());
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (base[s] < 0) continue;
    Monomial m = source->unit_monomial();
    m[s] = 1;
    images[base[s]] = ChowClass(source, Terms{{m, Rational(1)}});
  }
  return RingMap(target, source, std::move(images));
}

}  // namespace

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<ChowClass> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw DomainError("ring map needs both rings");
  if (images_.size() != source_->size()) throw DomainError("ring map needs one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i].ring()) images_[i] = ChowClass(target_);
    if (!same_ring(images_[i].ring(), target_)) throw DomainError("ring map image in the wrong ring");
    if (!images_[i].is_homogeneous(source_->variables()[i].degree)) {
      throw DomainError("image of '" + source_->variables()[i].name + "' has the wrong degree");
    }
  }
  for (std::size_t i = 0; i < source_->size(); ++i) {
    const auto& rule = source_->rule_for(static_cast<int>(i));
    ChowClass lhs = images_[i].pow(rule.power);
    ChowClass rhs = apply(ChowClass(source_, rule.replacement));
    if (!(lhs == rhs)) {
      throw DomainError("ring map violates the relation for " + source_->variables()[i].name + "^" +
                        std::to_string(rule.power) + ": " + lhs.to_string() + " != " + rhs.to_string());
    }
  }
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<ChowClass> images;
  for (const auto& v : ring->variables()) images.push_back(ChowClass::generator(ring, v.name));
  return RingMap(ring, ring, std::move(images));
}

RingMap RingMap::from_text(const RingPtr& source, const RingPtr& target,
                           const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<ChowClass> out(source->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& [name, text] : images) {
    int i = require_index(source, name, "ring map");
    if (seen[i]) throw DomainError("ring map assigns '" + name + "' twice");
    seen[i] = true;
    out[i] = parse_class(target, text);
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw DomainError("ring map has no image for '" + source->variables()[i].name + "'");
  }
  return RingMap(source, target, std::move(out));
}

ChowClass RingMap::apply(const ChowClass& c) const {
  if (!same_ring(c.ring(), source_)) throw DomainError("ring map applied to a class from another ring");
  ChowClass out(target_);
  for (const auto& [m, coeff] : c.terms()) {
    ChowClass term = ChowClass::constant(target_, coeff);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term *= images_[i].pow(m[i]);
    }
    out += term;
  }
  return out;
}

RingMap RingMap::then(const RingMap& next) const {
  if (!same_ring(target_, next.source_)) throw DomainError("ring maps do not compose");
  std::vector<ChowClass> images;
  for (const auto& img : images_) images.push_back(next.apply(img));
  return RingMap(source_, next.target_, std::move(images));
}

ChowClass pullback(const RingMap& map, const ChowClass& c) { return map.apply(c); }
KClass pullback(const RingMap& map, const KClass& k) { return map.apply(k); }

std::string to_string(PushforwardKind kind) {
  switch (kind) {
    case PushforwardKind::ProjectiveBundle: return "projective_bundle";
    case PushforwardKind::ProductProjection: return "product_projection";
    case PushforwardKind::Isomorphism: return "isomorphism";
  }
  return "unknown";
}

Pushforward Pushforward::projective_bundle(const RingPtr& source, const std::string& fiber_variable,
                                           const RingPtr& target,
                                           const std::vector<std::pair<std::string, std::string>>& base_names) {
  Pushforward pf;
  pf.kind_ = PushforwardKind::ProjectiveBundle;
  pf.source_ = source;
  pf.target_ = target;
  pf.fiber_ = require_index(source, fiber_variable, "projective bundle");
  if (source->dim() != target->dim() + 1) {
    throw DomainError("projective bundle must raise the dimension by one");
  }
  if (source->variables()[pf.fiber_].degree != 1) throw DomainError("fiber class must have degree 1");
  pf.base_index_ = base_correspondence(source, target, base_names, {pf.fiber_});

  const auto& rule = source->rule_for(pf.fiber_);
  if (rule.power != 2) throw DomainError("only rank-2 projective bundles are supported");
  Terms c1;
  Terms c2;
  for (const auto& [m, c] : rule.replacement) {
    Monomial base = m;
    base[pf.fiber_] = 0;
    Monomial t = translate(base, pf.base_index_, target->size());
    if (m[pf.fiber_] == 1) {
      c1.emplace(t, c);
    } else {
      c2.emplace(t, -c);
    }
  }
  pf.bundle_c1_ = ChowClass(target, c1);
  pf.bundle_c2_ = ChowClass(target, c2);
  pf.pullback_ = pullback_from(source, target, pf.base_index_);
  return pf;
}

Pushforward Pushforward::product_projection(const RingPtr& source,
                                            const std::vector<std::string>& integrated,
                                            const RingPtr& target,
                                            const std::vector<std::pair<std::string, std::string>>& kept_names) {
  Pushforward pf;
  pf.kind_ = PushforwardKind::ProductProjection;
  pf.source_ = source;
  pf.target_ = target;
  for (const auto& name : integrated) pf.integrated_.push_back(require_index(source, name, "projection"));
  pf.base_index_ = base_correspondence(source, target, kept_names, pf.integrated_);
  for (int v : pf.integrated_) {
    for (const auto& [m, c] : source->rule_for(v).replacement) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0 && pf.base_index_[i] >= 0) {
          throw DomainError("integrated factor is not a product factor");
        }
      }
    }
  }
  const int factor_dim = source->dim() - target->dim();
  if (factor_dim < 0) throw DomainError("projection cannot raise dimension");
  std::vector<Monomial> top;
  for (const auto& m : source->basis(factor_dim)) {
    bool only_factor = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0 && pf.base_index_[i] >= 0) only_factor = false;
    }
    if (only_factor) top.push_back(m);
  }
  if (top.size() != 1) throw DomainError("integrated factor has no unique point class");
  pf.factor_point_ = top.front();
  pf.pullback_ = pullback_from(source, target, pf.base_index_);
  return pf;
}

Pushforward Pushforward::isomorphism(const RingMap& forward, const RingMap& inverse) {
  if (!same_ring(forward.source(), inverse.target()) || !same_ring(forward.target(), inverse.source())) {
    throw DomainError("non-invertible isomorphism data: rings do not match");
  }
  auto round_trip = [](const RingMap& a, const RingMap& b) {
    RingMap composite = a.then(b);
    for (std::size_t i = 0; i < composite.images().size(); ++i) {
      const auto& ring = a.source();
      if (!(composite.images()[i] == ChowClass::generator(ring, ring->variables()[i].name))) return false;
    }
    return true;
  };
  if (!round_trip(forward, inverse) || !round_trip(inverse, forward)) {
    throw DomainError("non-invertible isomorphism data");
  }
  Pushforward pf;
  pf.kind_ = PushforwardKind::Isomorphism;
  pf.source_ = forward.source();
  pf.target_ = forward.target();
  pf.pullback_ = inverse;
  pf.forward_ = forward;
  return pf;
}

int Pushforward::fiber_dimension() const {
  switch (kind_) {
    case PushforwardKind::ProjectiveBundle: return 1;
    case PushforwardKind::ProductProjection: return source_->dim() - target_->dim();
    case PushforwardKind::Isomorphism: return 0;
  }
  return 0;
}

KClass Pushforward::relative_tangent() const {
  if (kind_ != PushforwardKind::ProjectiveBundle) {
    throw DomainError("relative tangent is only tabulated for projective bundles");
  }
  Monomial m = source_->unit_monomial();
  m[fiber_] = 1;
  ChowClass xi(source_, Terms{{m, Rational(1)}});
  return KClass::line_bundle(xi * Rational(2) - pull(bundle_c1_));
}

ChowClass Pushforward::push(const ChowClass& c) const {
  if (!same_ring(c.ring(), source_)) throw DomainError("pushforward applied to a class from another ring");
  switch (kind_) {
    case PushforwardKind::ProjectiveBundle: {
      Terms out;
      for (const auto& [m, coeff] : c.terms()) {
        if (m[fiber_] != 1) continue;
        Monomial base = m;
        base[fiber_] = 0;
        out[translate(base, base_index_, target_->size())] += coeff;
      }
      return ChowClass(target_, out);
    }
    case PushforwardKind::ProductProjection: {
      Terms out;
      for (const auto& [m, coeff] : c.terms()) {
        bool hits_point = true;
        Monomial kept = m;
        for (int v : integrated_) {
          if (m[v] != factor_point_[v]) hits_point = false;
          kept[v] = 0;
        }
        if (!hits_point) continue;
        out[translate(kept, base_index_, target_->size())] += coeff;
      }
      return ChowClass(target_, out);
    }
    case PushforwardKind::Isomorphism: return forward_->apply(c);
  }
  return ChowClass(target_);
}

ChowClass push(const Pushforward& pf, const ChowClass& c) { return pf.push(c); }

KClass grr_index(const Pushforward& pf, const KClass& relative_tangent, const KClass& sheaf) {
  if (!same_ring(relative_tangent.ring(), pf.source()) || !same_ring(sheaf.ring(), pf.source())) {
    throw DomainError("grr_index: classes must live on the source of the pushforward");
  }
  if (relative_tangent.rank() != pf.fiber_dimension()) {
    throw DomainError("grr_index: relative tangent rank " + relative_tangent.rank().str() +
                      " does not match fiber dimension " + std::to_string(pf.fiber_dimension()));
  }
  return KClass(pf.push(sheaf.ch() * todd(relative_tangent)));
}

}  // namespace sncdp
