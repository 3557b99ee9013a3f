#include "sncdp/snc_delpezzo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sncdp {

std::string SurfaceType::to_string() const {
  return kind == SurfaceKind::P2 ? "P2" : "F" + std::to_string(n);
}

Variety surface_variety(const SurfaceType& type) {
  if (type.kind == SurfaceKind::P2) {
    Variety v = projective_space(2, "l");
    return v;
  }
  return hirzebruch(type.n);
}

namespace {

int to_int(const Rational& r, const char* what) {
  if (!is_integer(r)) throw DomainError(std::string(what) + " must have integer coefficients");
  return boost::multiprecision::numerator(r).convert_to<int>();
}

std::string curve_string(const SurfaceType& type, int a, int b) {
  if (type.kind == SurfaceKind::P2) return a == 1 ? "l" : std::to_string(a) + "*l";
  std::string s;
  if (a != 0) s = (a == 1 ? "" : std::to_string(a) + "*") + std::string("e");
  if (b != 0) {
    if (!s.empty()) s += b > 0 ? "+" : "-";
    else if (b < 0) s += "-";
    int mag = b < 0 ? -b : b;
    s += (mag == 1 ? "" : std::to_string(mag) + "*") + std::string("f");
  }
  return s.empty() ? "0" : s;
}

// Coefficients (a, b) of a degree-1 class on the surface ring.
std::pair<int, int> coefficients(const SurfaceType& type, const ChowClass& divisor) {
  if (!divisor.is_homogeneous(1)) throw DomainError("divisor must be a degree-1 class");
  const auto& ring = divisor.ring();
  if (type.kind == SurfaceKind::P2) {
    if (ring->size() != 1 || ring->index_of("l") != 0) throw DomainError("divisor is not on P2");
    return {to_int(divisor.coefficient({1}), "divisor"), 0};
  }
  int ie = ring->index_of("e");
  int iff = ring->index_of("f");
  if (ring->size() != 2 || ie < 0 || iff < 0) {
    throw DomainError("divisor is not on " + type.to_string());
  }
  Monomial me(2, 0), mf(2, 0);
  me[ie] = 1;
  mf[iff] = 1;
  return {to_int(divisor.coefficient(me), "divisor"), to_int(divisor.coefficient(mf), "divisor")};
}

int intersect(const Variety& s, const ChowClass& a, const ChowClass& b) {
  return to_int(integrate(s, a * b), "intersection number");
}

}  // namespace

std::string CurveClassOnComponent::to_string() const {
  if (!cls.ring()) return "?";
  bool p2 = cls.ring()->index_of("l") >= 0;
  return curve_string(p2 ? SurfaceType::p2() : SurfaceType::f(0), a, b);
}

CurveClassOnComponent make_curve(const SurfaceType& type, const Variety& surface, int a, int b) {
  CurveClassOnComponent c;
  c.a = a;
  c.b = b;
  if (type.kind == SurfaceKind::P2) {
    if (b != 0) throw DomainError("P2 curve classes have no f coefficient");
    c.cls = surface.generator("l") * Rational(a);
  } else {
    c.cls = surface.generator("e") * Rational(a) + surface.generator("f") * Rational(b);
  }
  c.self_intersection = intersect(surface, c.cls, c.cls);
  return c;
}

ComponentSurface make_component(const SurfaceType& type, const std::vector<std::pair<int, int>>& curves) {
  ComponentSurface comp{type, surface_variety(type), {}};
  for (const auto& [a, b] : curves) comp.boundary_curves.push_back(make_curve(type, comp.variety, a, b));
  return comp;
}

std::string SncConfiguration::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " u ";
    s += components[i].type.to_string();
  }
  s += " (";
  for (std::size_t g = 0; g < gluings.size(); ++g) {
    const auto& gl = gluings[g];
    if (g) s += ", ";
    s += components[gl.component_i].boundary_curves[gl.curve_i].to_string() + " ~ " +
         components[gl.component_j].boundary_curves[gl.curve_j].to_string();
  }
  return s + ")";
}

bool is_ample(const SurfaceType& type, const ChowClass& divisor) {
  auto [a, b] = coefficients(type, divisor);
  if (type.kind == SurfaceKind::P2) return a > 0;
  return a > 0 && b > type.n * a;
}

std::vector<CurveClassOnComponent> smooth_rational_curves(const SurfaceType& type, int coefficient_bound) {
  Variety s = surface_variety(type);
  std::vector<CurveClassOnComponent> out;
  if (type.kind == SurfaceKind::P2) {
    out.push_back(make_curve(type, s, 1, 0));
    out.push_back(make_curve(type, s, 2, 0));
  } else {
    out.push_back(make_curve(type, s, 1, 0));
    out.push_back(make_curve(type, s, 0, 1));
    for (int b = std::max(type.n, 1); b <= coefficient_bound; ++b) out.push_back(make_curve(type, s, 1, b));
  }
  for (const auto& c : out) {
    // arithmetic genus from adjunction: (C^2 + C.K)/2 + 1
    int ck = intersect(s, c.cls, s.canonical_class);
    if ((c.self_intersection + ck) / 2 + 1 != 0) {
      throw DomainError("internal: curve " + c.to_string() + " is not rational");
    }
  }
  return out;
}

Verdict check_config(const SncConfiguration& config) {
  Verdict v;
  auto fail = [&](std::string msg) {
    v.pass = false;
    v.violations.push_back(std::move(msg));
  };
  const int n = config.rank();
  if (n < 1) throw DomainError("configuration has no components");

  std::vector<std::vector<int>> used(n);
  for (int i = 0; i < n; ++i) {
    const auto& comp = config.components[i];
    if (comp.boundary_curves.empty() || comp.boundary_curves.size() > 2) {
      throw DomainError("component " + std::to_string(i) + " must carry one or two boundary curves");
    }
    used[i].assign(comp.boundary_curves.size(), 0);
  }
  for (const auto& g : config.gluings) {
    if (g.component_i < 0 || g.component_i >= n || g.component_j < 0 || g.component_j >= n ||
        g.component_i == g.component_j) {
      throw DomainError("gluing refers to invalid components");
    }
    const auto& ci = config.components[g.component_i].boundary_curves;
    const auto& cj = config.components[g.component_j].boundary_curves;
    if (g.curve_i < 0 || g.curve_i >= static_cast<int>(ci.size()) || g.curve_j < 0 ||
        g.curve_j >= static_cast<int>(cj.size())) {
      throw DomainError("gluing refers to invalid boundary curves");
    }
    used[g.component_i][g.curve_i]++;
    used[g.component_j][g.curve_j]++;
  }
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < used[i].size(); ++c) {
      if (used[i][c] != 1) throw DomainError("every boundary curve must be glued exactly once");
    }
  }

  for (int i = 0; i < n; ++i) {
    const auto& comp = config.components[i];
    const Variety& s = comp.variety;
    ChowClass boundary(s.ring);
    for (const auto& c : comp.boundary_curves) {
      int ck = intersect(s, c.cls, s.canonical_class);
      if ((c.self_intersection + ck) / 2 + 1 != 0 || (c.self_intersection + ck) % 2 != 0) {
        fail("curve " + c.to_string() + " on " + comp.type.to_string() + " has positive genus");
      }
      boundary += c.cls;
    }
    if (!is_ample(comp.type, -(s.canonical_class + boundary))) {
      fail("-(K + C) is not ample on component " + std::to_string(i) + " (" + comp.type.to_string() + ")");
    }
    if (comp.boundary_curves.size() == 2) {
      int meet = intersect(s, comp.boundary_curves[0].cls, comp.boundary_curves[1].cls);
      if (meet != 1) {
        fail("boundary curves on component " + std::to_string(i) + " meet with multiplicity " +
             std::to_string(meet) + ", expected 1");
      }
    }
  }

  for (const auto& g : config.gluings) {
    const auto& ci = config.components[g.component_i].boundary_curves[g.curve_i];
    const auto& cj = config.components[g.component_j].boundary_curves[g.curve_j];
    int sum = ci.self_intersection + cj.self_intersection;
    if (sum != -2) {
      fail("gluing " + ci.to_string() + " ~ " + cj.to_string() + ": self-intersections sum to " +
           std::to_string(sum) + ", expected -2");
    }
  }

  // connectivity
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& g : config.gluings) parent[find(g.component_i)] = find(g.component_j);
  for (int i = 1; i < n; ++i) {
    if (find(i) != find(0)) {
      fail("components do not form a connected surface");
      break;
    }
  }
  return v;
}

namespace {

struct LocalOption {
  SurfaceType type;
  std::vector<std::pair<int, int>> curves;  // (a, b)
  std::vector<int> self;
};

std::string option_key(const SurfaceType& type, std::vector<std::pair<int, int>> curves, bool swap) {
  if (swap) {
    for (auto& [a, b] : curves) std::swap(a, b);
  }
  std::string key = type.to_string() + "[";
  for (const auto& [a, b] : curves) key += curve_string(type, a, b) + ";";
  return key + "]";
}

// Sort key making P2 < F0 < F1 < ...
std::string type_order(const SurfaceType& t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", t.kind == SurfaceKind::P2 ? 0 : t.n + 1);
  return buf;
}

std::string canonical_key_rank2(const LocalOption& x, const LocalOption& y) {
  auto one = [](const LocalOption& o) {
    std::string k = type_order(o.type) + option_key(o.type, o.curves, false);
    if (o.type.kind == SurfaceKind::Hirzebruch && o.type.n == 0) {
      k = std::min(k, type_order(o.type) + option_key(o.type, o.curves, true));
    }
    return k;
  };
  std::string a = one(x), b = one(y);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

// Components in cyclic order; curves as (in, out).
std::string canonical_key_cycle(const std::vector<LocalOption>& cycle) {
  const int n = static_cast<int>(cycle.size());
  std::string best;
  bool first = true;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < n; ++shift) {
      std::vector<LocalOption> seq;
      for (int k = 0; k < n; ++k) {
        int idx = reflect ? (shift - k + n) % n : (shift + k) % n;
        LocalOption o = cycle[idx];
        if (reflect) std::swap(o.curves[0], o.curves[1]);
        seq.push_back(o);
      }
      std::vector<int> f0;
      for (int k = 0; k < n; ++k) {
        if (seq[k].type.kind == SurfaceKind::Hirzebruch && seq[k].type.n == 0) f0.push_back(k);
      }
      for (int mask = 0; mask < (1 << f0.size()); ++mask) {
        std::string key;
        for (int k = 0; k < n; ++k) {
          bool swap = false;
          for (std::size_t j = 0; j < f0.size(); ++j) {
            if (f0[j] == k && (mask >> j) & 1) swap = true;
          }
          key += type_order(seq[k].type) + option_key(seq[k].type, seq[k].curves, swap) + "|";
        }
        if (first || key < best) {
          best = key;
          first = false;
        }
      }
    }
  }
  return best;
}

}  // namespace

Classification classify(int rank, int n_max, int b_max) {
  if (rank != 2 && rank != 3) throw DomainError("classify supports rank 2 and 3 only");
  if (n_max < 0 || b_max < 0) throw DomainError("classify bounds must be nonnegative");

  std::vector<SurfaceType> types{SurfaceType::p2()};
  for (int n = 0; n <= n_max; ++n) types.push_back(SurfaceType::f(n));

  // Per-component necessary condition: -(K + boundary) ample.
  std::vector<LocalOption> options;
  int max_positive = 0;
  for (const auto& t : types) {
    Variety s = surface_variety(t);
    auto curves = smooth_rational_curves(t, b_max);
    if (rank == 2) {
      for (const auto& c : curves) {
        if (!is_ample(t, -(s.canonical_class + c.cls))) continue;
        options.push_back({t, {{c.a, c.b}}, {c.self_intersection}});
        max_positive = std::max(max_positive, c.self_intersection);
      }
    } else {
      for (const auto& c1 : curves) {
        for (const auto& c2 : curves) {
          if (intersect(s, c1.cls, c2.cls) != 1) continue;
          if (!is_ample(t, -(s.canonical_class + c1.cls + c2.cls))) continue;
          options.push_back({t, {{c1.a, c1.b}, {c2.a, c2.b}}, {c1.self_intersection, c2.self_intersection}});
          max_positive = std::max({max_positive, c1.self_intersection, c2.self_intersection});
        }
      }
    }
  }

  std::map<std::string, SncConfiguration> found;
  auto accept = [&](const std::string& key, SncConfiguration config) {
    if (found.count(key)) return;
    if (check_config(config).pass) found.emplace(key, std::move(config));
  };

  if (rank == 2) {
    for (std::size_t i = 0; i < options.size(); ++i) {
      for (std::size_t j = i; j < options.size(); ++j) {
        const auto& x = options[i];
        const auto& y = options[j];
        if (x.self[0] + y.self[0] != -2) continue;
        std::string key = canonical_key_rank2(x, y);
        // Lower-sorting component first.
        bool flip = canonical_key_rank2(x, x) > canonical_key_rank2(y, y);
        const auto& p = flip ? y : x;
        const auto& q = flip ? x : y;
        SncConfiguration config{{make_component(p.type, p.curves), make_component(q.type, q.curves)},
                                {{0, 0, 1, 0}}};
        accept(key, std::move(config));
      }
    }
  } else {
    for (const auto& x : options) {
      for (const auto& y : options) {
        if (x.self[1] + y.self[0] != -2) continue;
        for (const auto& z : options) {
          if (y.self[1] + z.self[0] != -2 || z.self[1] + x.self[0] != -2) continue;
          std::string key = canonical_key_cycle({x, y, z});
          SncConfiguration config{{make_component(x.type, x.curves), make_component(y.type, y.curves),
                                   make_component(z.type, z.curves)},
                                  {{0, 1, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 0}}};
          accept(key, std::move(config));
        }
      }
    }
  }

  Classification result;
  for (auto& [key, config] : found) result.configurations.push_back(std::move(config));
  // A component F_n with n > n_max admits only the curve e (e^2 = -n) locally,
  // whose partner would need self-intersection n - 2 > max_positive; and
  // -(K + e + b f) = e + (n + 2 - b) f loses ampleness monotonically in b.
  result.complete = n_max >= max_positive + 2 && b_max >= 2;
  result.completeness_note = "largest admissible boundary self-intersection " + std::to_string(max_positive) +
                             "; certified for n_max >= " + std::to_string(max_positive + 2) +
                             " and b_max >= 2";
  return result;
}

KClass e_character(const Variety& surface) {
  return dual(surface.tangent_ch) + KClass(exp_nilpotent(-surface.canonical_class));
}

KClass e_character(const ComponentSurface& component) { return e_character(component.variety); }

}  // namespace sncdp
