#include "sncdp/chow_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sncdp {

Terms parse_terms(const std::vector<VariableSpec>& variables, std::string_view text);

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(value);
  if (!is_integer(value)) out << '/' << boost::multiprecision::denominator(value);
  return out.str();
}

namespace {

void add_term(Terms& terms, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

int raw_degree(const std::vector<VariableSpec>& vars, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) d += m[i] * vars[i].degree;
  return d;
}

}  // namespace

int RingPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int RingPresentation::degree(const Monomial& m) const { return raw_degree(variables_, m); }

Terms RingPresentation::reduce(Terms input, ReductionOrder order, bool truncate) const {
  Terms done;
  Terms pending = std::move(input);
  const int n = static_cast<int>(variables_.size());
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    const Rational& c = node.mapped();
    if (c == 0) continue;
    if (truncate && degree(m) > dim_) continue;

    int pick = -1;
    for (int step = 0; step < n; ++step) {
      int i = order == ReductionOrder::LowestIndexFirst ? step : n - 1 - step;
      if (m[i] >= rule_for(i).power) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      add_term(done, m, c);
      continue;
    }
    Monomial rest = m;
    rest[pick] -= rule_for(pick).power;
    for (const auto& [rm, rc] : rule_for(pick).replacement) {
      add_term(pending, add_monomials(rest, rm), c * rc);
    }
  }
  return done;
}

std::vector<Monomial> RingPresentation::basis(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current(variables_.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int remaining) {
    if (i == variables_.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int dv = variables_[i].degree;
    for (int e = 0; e < rule_for(static_cast<int>(i)).power && e * dv <= remaining; ++e) {
      current[i] = e;
      walk(i + 1, remaining - e * dv);
    }
    current[i] = 0;
  };
  walk(0, degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string RingPresentation::monomial_to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variables_[i].name;
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

bool RingPresentation::same_as(const RingPresentation& other) const {
  if (variables_ != other.variables_ || dim_ != other.dim_ || point_ != other.point_) return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& a = rule_for(static_cast<int>(i));
    const auto& b = other.rule_for(static_cast<int>(i));
    if (a.power != b.power || a.replacement != b.replacement) return false;
  }
  return true;
}

RingPtr make_ring(std::vector<VariableSpec> variables, std::vector<RewriteRule> rules, int dim,
                  Monomial point_monomial) {
  if (dim < 0) throw DomainError("ring dimension must be nonnegative");
  const std::size_t n = variables.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (variables[i].name.empty()) throw DomainError("empty variable name");
    if (variables[i].degree < 1) {
      throw DomainError("variable '" + variables[i].name + "' must have degree >= 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i].name == variables[j].name) {
        throw DomainError("duplicate variable name '" + variables[i].name + "'");
      }
    }
  }

  std::vector<int> rule_of(n, -1);
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto& rule = rules[r];
    int v = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (variables[i].name == rule.variable) v = static_cast<int>(i);
    }
    if (v < 0) throw DomainError("rule for unknown variable '" + rule.variable + "'");
    if (rule_of[v] >= 0) throw DomainError("more than one rule for '" + rule.variable + "'");
    if (rule.power < 1) throw DomainError("rule power for '" + rule.variable + "' must be >= 1");
    rule_of[v] = static_cast<int>(r);
    const int lead_degree = rule.power * variables[v].degree;
    for (const auto& [m, c] : rule.replacement) {
      if (m.size() != n) throw DomainError("rule for '" + rule.variable + "' has malformed monomial");
      if (c == 0) continue;
      if (raw_degree(variables, m) != lead_degree) {
        throw DomainError("rule degree mismatch for " + rule.variable + "^" +
                          std::to_string(rule.power));
      }
      if (m[v] >= rule.power) {
        throw DomainError("replacement of " + rule.variable + "^" + std::to_string(rule.power) +
                          " does not lower its exponent");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rule_of[i] < 0) throw DomainError("no rule for variable '" + variables[i].name + "'");
  }

  // Dependency graph: v depends on u when u occurs in v's replacement.
  std::vector<int> state(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (const auto& [m, c] : rules[rule_of[v]].replacement) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || m[u] == 0 || c == 0) continue;
        if (state[u] == 1) {
          throw DomainError("rewrite rules are cyclic through '" + variables[u].name +
                            "'; no terminating order exists");
        }
        if (state[u] == 0) visit(u);
      }
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0) visit(v);
  }

  auto ring = std::make_shared<RingPresentation>();
  ring->variables_ = std::move(variables);
  ring->rules_ = std::move(rules);
  ring->rule_of_ = std::move(rule_of);
  ring->dim_ = dim;

  for (auto& rule : ring->rules_) {
    Terms cleaned;
    for (const auto& [m, c] : rule.replacement) add_term(cleaned, m, c);
    rule.replacement = std::move(cleaned);
  }
  for (auto& rule : ring->rules_) {
    rule.replacement = ring->reduce(rule.replacement, ReductionOrder::LowestIndexFirst, false);
  }

  // Critical-pair witnesses, reduced under two different strategies.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Monomial w(n, 0);
      w[i] += ring->rule_for(static_cast<int>(i)).power;
      w[j] += (i == j) ? 1 : ring->rule_for(static_cast<int>(j)).power;
      Terms t{{w, Rational(1)}};
      auto lo = ring->reduce(t, ReductionOrder::LowestIndexFirst, false);
      auto hi = ring->reduce(t, ReductionOrder::HighestIndexFirst, false);
      if (lo != hi) {
        throw DomainError("non-confluent rewrite system: witness " + ring->monomial_to_string(w));
      }
    }
  }

  if (point_monomial.size() != n) throw DomainError("point monomial has wrong length");
  if (raw_degree(ring->variables_, point_monomial) != dim) {
    throw DomainError("point monomial must have degree " + std::to_string(dim));
  }
  auto top = ring->basis(dim);
  if (top.size() != 1 || top.front() != point_monomial) {
    throw DomainError("degree-" + std::to_string(dim) + " part is not spanned by " +
                      ring->monomial_to_string(point_monomial));
  }
  ring->point_ = std::move(point_monomial);
  return ring;
}

RingPtr make_ring(std::vector<VariableSpec> variables, const std::vector<RuleText>& rules, int dim,
                  std::string_view point_monomial) {
  std::vector<RewriteRule> parsed;
  parsed.reserve(rules.size());
  for (const auto& r : rules) {
    parsed.push_back({r.variable, r.power, parse_terms(variables, r.replacement)});
  }
  Terms point = parse_terms(variables, point_monomial);
  if (point.size() != 1 || point.begin()->second != 1) {
    throw DomainError("point must be a single monomial with coefficient 1");
  }
  Monomial pm = point.begin()->first;
  return make_ring(std::move(variables), std::move(parsed), dim, std::move(pm));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------------------

ChowClass::ChowClass(RingPtr ring, Terms terms) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("class without a ring");
  for (const auto& [m, c] : terms) {
    if (m.size() != ring_->size()) throw DomainError("monomial does not match ring");
  }
  terms_ = ring_->reduce(std::move(terms));
}

ChowClass ChowClass::constant(RingPtr ring, const Rational& value) {
  Terms t;
  if (value != 0) t.emplace(ring->unit_monomial(), value);
  return ChowClass(std::move(ring), std::move(t));
}

ChowClass ChowClass::generator(RingPtr ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw DomainError("unknown variable '" + std::string(name) + "'");
  Monomial m = ring->unit_monomial();
  m[i] = 1;
  return ChowClass(std::move(ring), Terms{{m, Rational(1)}});
}

Rational ChowClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChowClass::constant_term() const {
  if (!ring_) return 0;
  return coefficient(ring_->unit_monomial());
}

ChowClass ChowClass::graded_part(int degree) const {
  ChowClass out(ring_);
  for (const auto& [m, c] : terms_) {
    if (ring_->degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

int ChowClass::top_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, ring_->degree(m));
  return d;
}

bool ChowClass::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return ring_->degree(t.first) == degree; });
}

void ChowClass::require_same_ring(const ChowClass& other) const {
  if (!same_ring(ring_, other.ring_)) throw DomainError("ring mismatch");
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& other) {
  require_same_ring(other);
  Terms product;
  for (const auto& [ma, ca] : terms_) {
    const int da = ring_->degree(ma);
    for (const auto& [mb, cb] : other.terms_) {
      if (da + ring_->degree(mb) > ring_->dim()) continue;
      add_term(product, add_monomials(ma, mb), ca * cb);
    }
  }
  terms_ = ring_->reduce(std::move(product));
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

ChowClass ChowClass::operator-() const {
  ChowClass out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ChowClass ChowClass::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power");
  ChowClass result = constant(ring_, 1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

bool ChowClass::operator==(const ChowClass& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string terms_to_string(const RingPresentation& ring, const Terms& terms) {
  if (terms.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    int da = ring.degree(a.first);
    int db = ring.degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool unit = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    Rational mag = c < 0 ? Rational(-c) : c;
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (unit) {
      out += sncdp::to_string(mag);
    } else {
      if (mag != 1) out += sncdp::to_string(mag) + '*';
      out += ring.monomial_to_string(m);
    }
    first = false;
  }
  return out;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  return terms_to_string(*ring_, terms_);
}

ChowClass normal_form(const RingPtr& ring, const Terms& terms) { return ChowClass(ring, terms); }

ChowClass graded_part(const ChowClass& c, int degree) { return c.graded_part(degree); }

ChowClass parse_class(const RingPtr& ring, std::string_view text) {
  return ChowClass(ring, parse_terms(ring->variables(), text));
}

ChowClass exp_nilpotent(const ChowClass& x) {
  if (x.constant_term() != 0) throw DomainError("exp of a class with nonzero constant term");
  const auto& ring = x.ring();
  ChowClass sum = ChowClass::constant(ring, 1);
  ChowClass power = sum;
  Rational factorial = 1;
  for (int j = 1; j <= ring->dim(); ++j) {
    power *= x;
    factorial *= j;
    sum += power * (Rational(1) / factorial);
  }
  return sum;
}

ChowClass log_one_plus(const ChowClass& x) {
  if (x.constant_term() != 0) throw DomainError("log(1+x) needs x without constant term");
  const auto& ring = x.ring();
  ChowClass sum(ring);
  ChowClass power = ChowClass::constant(ring, 1);
  for (int j = 1; j <= ring->dim(); ++j) {
    power *= x;
    Rational coeff = Rational(j % 2 == 1 ? 1 : -1) / j;
    sum += power * coeff;
  }
  return sum;
}

}  // namespace sncdp
