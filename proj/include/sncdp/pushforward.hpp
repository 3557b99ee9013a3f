#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sncdp/ktheory.hpp"

namespace sncdp {

// Ring homomorphism given by images of the source generators. Construction
// checks that every relation of the source maps to a relation of the target.
class RingMap {
 public:
  RingMap() = default;
  RingMap(RingPtr source, RingPtr target, std::vector<ChowClass> images);

  static RingMap identity(const RingPtr& ring);
  // Images given as text in the target ring, keyed by source generator name.
  static RingMap from_text(const RingPtr& source, const RingPtr& target,
                           const std::vector<std::pair<std::string, std::string>>& images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<ChowClass>& images() const { return images_; }

  ChowClass apply(const ChowClass& c) const;
  KClass apply(const KClass& k) const { return KClass(apply(k.ch())); }
  // Composite: first this, then `next`.
  RingMap then(const RingMap& next) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<ChowClass> images_;
};

ChowClass pullback(const RingMap& map, const ChowClass& c);
KClass pullback(const RingMap& map, const KClass& k);

enum class PushforwardKind { ProjectiveBundle, ProductProjection, Isomorphism };

std::string to_string(PushforwardKind kind);

// Proper pushforward along one of three kinds of maps. Every kind carries
// the pullback in the opposite direction, so the projection formula can be
// checked against it.
class Pushforward {
 public:
  // P(E) -> B for a rank-2 bundle E. `fiber_variable` is the tautological
  // class xi with xi^2 = c1(E) xi - c2(E); `base_names` identifies each target
  // generator with a source generator (target name, source name).
  static Pushforward projective_bundle(const RingPtr& source, const std::string& fiber_variable,
                                       const RingPtr& target,
                                       const std::vector<std::pair<std::string, std::string>>& base_names);

  // X x Y -> X: integrates out the generators listed in `integrated`, whose
  // top monomial must be `factor_point`. `kept_names` as in projective_bundle.
  static Pushforward product_projection(const RingPtr& source,
                                        const std::vector<std::string>& integrated,
                                        const RingPtr& target,
                                        const std::vector<std::pair<std::string, std::string>>& kept_names);

  // Isomorphism with explicit inverse; both composites must be the identity.
  static Pushforward isomorphism(const RingMap& forward, const RingMap& inverse);

  PushforwardKind kind() const { return kind_; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const RingMap& pullback_map() const { return pullback_; }
  int fiber_dimension() const;

  // Projective-bundle data: index of xi and c1(E), c2(E) on the target.
  int fiber_variable() const { return fiber_; }
  const ChowClass& bundle_c1() const { return bundle_c1_; }
  const ChowClass& bundle_c2() const { return bundle_c2_; }
  // Relative tangent line bundle, c1 = 2 xi - c1(E). Projective bundles only.
  KClass relative_tangent() const;

  const std::vector<int>& integrated_variables() const { return integrated_; }
  // Base generator correspondence (source index -> target index, or -1).
  const std::vector<int>& base_index() const { return base_index_; }
  const std::optional<RingMap>& forward_map() const { return forward_; }

  ChowClass push(const ChowClass& c) const;
  KClass push(const KClass& k) const { return KClass(push(k.ch())); }
  ChowClass pull(const ChowClass& c) const { return pullback_.apply(c); }

 private:
  PushforwardKind kind_ = PushforwardKind::Isomorphism;
  RingPtr source_;
  RingPtr target_;
  RingMap pullback_;
  std::vector<int> base_index_;
  int fiber_ = -1;
  ChowClass bundle_c1_;
  ChowClass bundle_c2_;
  std::vector<int> integrated_;
  Monomial factor_point_;
  std::optional<RingMap> forward_;
};

ChowClass push(const Pushforward& pf, const ChowClass& c);

// ch(ind R pi_* F) = pi_*(ch(F) td(T_rel)). The rank of `relative_tangent`
// must equal the fiber dimension of `pf`.
KClass grr_index(const Pushforward& pf, const KClass& relative_tangent, const KClass& sheaf);

}  // namespace sncdp
