/*
 * chow_ring.hpp
 * -------------
 * Graded commutative Q-algebras presented by generators and one rewrite rule
 * per generator, truncated above a fixed dimension.
 *
 * Every rule has a pure power v^k as leading term; the replacement may use v
 * with exponent below k and any other generator, as long as the "appears in
 * the replacement of" relation between generators is acyclic. Under that
 * condition the leading terms are pairwise coprime in a compatible monomial
 * order, so the rules form a Groebner basis and substitution reaches a unique
 * normal form without any completion step.
 *
 * Example: the Hirzebruch surface F_6 is
 *   variables {f:1, e:1}, rules {f^2 -> 0, e^2 -> -6*e*f}, dim 2, point e*f.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sncdp/rational.hpp"

namespace sncdp {

struct VariableSpec {
  std::string name;
  int degree = 1;

  bool operator==(const VariableSpec&) const = default;
};

// Exponent vector indexed by the ring's variable order.
using Monomial = std::vector<int>;
using Terms = std::map<Monomial, Rational>;

struct RewriteRule {
  std::string variable;
  int power = 1;
  // Replacement for variable^power, in the ring's monomial indexing.
  Terms replacement;
};

// Rule with a textual replacement, parsed against the variable list when the
// ring is built. Convenient for hand-written presentations.
struct RuleText {
  std::string variable;
  int power = 1;
  std::string replacement;
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

enum class ReductionOrder { LowestIndexFirst, HighestIndexFirst };

class RingPresentation {
 public:
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int dim() const { return dim_; }
  const Monomial& point_monomial() const { return point_; }

  std::size_t size() const { return variables_.size(); }
  // Index of a generator by name, or -1.
  int index_of(std::string_view name) const;
  const RewriteRule& rule_for(int variable) const { return rules_[rule_of_[variable]]; }

  int degree(const Monomial& m) const;
  Monomial unit_monomial() const { return Monomial(variables_.size(), 0); }

  // Full reduction of raw terms: substitutes rules until every exponent is
  // below its rule's power. Terms above `dim` are dropped when `truncate`.
  Terms reduce(Terms input, ReductionOrder order = ReductionOrder::LowestIndexFirst,
               bool truncate = true) const;

  // Normal-form monomials of a given degree (a Q-basis of that graded piece).
  std::vector<Monomial> basis(int degree) const;

  std::string monomial_to_string(const Monomial& m) const;

  // Structural equality: same variables, rules, dim and point.
  bool same_as(const RingPresentation& other) const;

 private:
  friend RingPtr make_ring(std::vector<VariableSpec>, std::vector<RewriteRule>, int, Monomial);

  std::vector<VariableSpec> variables_;
  std::vector<RewriteRule> rules_;
  std::vector<int> rule_of_;
  int dim_ = 0;
  Monomial point_;
};

// Validates and builds a presentation. Throws DomainError on duplicate names,
// non-positive degrees, missing or duplicate rules, degree mismatches,
// cyclic rule dependencies, a non-confluent witness, or a top-degree piece not
// spanned by `point_monomial`.
RingPtr make_ring(std::vector<VariableSpec> variables, std::vector<RewriteRule> rules,
                  int dim, Monomial point_monomial);

RingPtr make_ring(std::vector<VariableSpec> variables, const std::vector<RuleText>& rules,
                  int dim, std::string_view point_monomial);

// Identical pointers or structurally equal presentations.
bool same_ring(const RingPtr& a, const RingPtr& b);

class ChowClass {
 public:
  ChowClass() = default;
  explicit ChowClass(RingPtr ring) : ring_(std::move(ring)) {}
  // Normalizes `terms` in `ring`.
  ChowClass(RingPtr ring, Terms terms);

  static ChowClass constant(RingPtr ring, const Rational& value);
  static ChowClass generator(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  ChowClass graded_part(int degree) const;
  // Largest degree carrying a nonzero term, -1 for zero.
  int top_degree() const;
  bool is_homogeneous(int degree) const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const ChowClass& other);
  ChowClass& operator*=(const Rational& scalar);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  ChowClass operator-() const;

  ChowClass pow(int exponent) const;

  // Equal rings and equal normal forms.
  bool operator==(const ChowClass& other) const;

  // Compact form, e.g. "3+10*f1+6*f2-6*f1*f2"; terms by ascending degree,
  // then lexicographic in variable order.
  std::string to_string() const;

 private:
  void require_same_ring(const ChowClass& other) const;

  RingPtr ring_;
  Terms terms_;
};

ChowClass normal_form(const RingPtr& ring, const Terms& terms);
ChowClass graded_part(const ChowClass& c, int degree);

// Grammar: signed sum of terms; a term is a '*'-separated product of
// rational literals (n or p/q) and variable powers (v or v^k). Whitespace is
// ignored and the empty string is zero. Throws ParseError.
ChowClass parse_class(const RingPtr& ring, std::string_view text);

// Prints raw terms (not reduced) in the same format as ChowClass::to_string.
std::string terms_to_string(const RingPresentation& ring, const Terms& terms);

// exp(x) and log(1 + x) for x without constant term (nilpotent), truncated at
// the ring dimension.
ChowClass exp_nilpotent(const ChowClass& x);
ChowClass log_one_plus(const ChowClass& x);

}  // namespace sncdp
