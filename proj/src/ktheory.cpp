#include "sncdp/ktheory.hpp"

namespace sncdp {

KClass::KClass(ChowClass ch) : ch_(std::move(ch)) {
  if (!ch_.ring()) throw DomainError("K-class without a ring");
  if (!is_integer(ch_.constant_term())) {
    throw DomainError("virtual rank " + sncdp::to_string(ch_.constant_term()) + " is not an integer");
  }
}

KClass KClass::trivial(const RingPtr& ring, int rank) {
  return KClass(ChowClass::constant(ring, rank));
}

KClass KClass::line_bundle(const ChowClass& c1) {
  if (!c1.is_homogeneous(1)) throw DomainError("line bundle needs a degree-1 class");
  return KClass(exp_nilpotent(c1));
}

Integer KClass::rank() const { return boost::multiprecision::numerator(ch_.constant_term()); }

KClass& KClass::operator+=(const KClass& other) {
  ch_ += other.ch_;
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  ch_ -= other.ch_;
  return *this;
}

KClass chern_to_ch(int rank, const ChowClass& total_chern) {
  if (total_chern.constant_term() != 1) {
    throw DomainError("total Chern class must start with 1, got " + total_chern.to_string());
  }
  const auto& ring = total_chern.ring();
  ChowClass log_c = log_one_plus(total_chern - ChowClass::constant(ring, 1));
  ChowClass ch = ChowClass::constant(ring, rank);
  Rational factorial = 1;  // (k-1)!
  for (int k = 1; k <= ring->dim(); ++k) {
    if (k > 1) factorial *= (k - 1);
    Rational sign = (k % 2 == 1) ? 1 : -1;
    ch += log_c.graded_part(k) * (sign / factorial);
  }
  return KClass(std::move(ch));
}

ChowClass ch_to_chern(const KClass& k) {
  const auto& ring = k.ring();
  ChowClass log_c(ring);
  Rational factorial = 1;
  for (int d = 1; d <= ring->dim(); ++d) {
    if (d > 1) factorial *= (d - 1);
    Rational sign = (d % 2 == 1) ? 1 : -1;
    log_c += k.ch().graded_part(d) * (sign * factorial);
  }
  return exp_nilpotent(log_c);
}

KClass dual(const KClass& k) {
  ChowClass out(k.ring());
  for (int d = 0; d <= k.ring()->dim(); ++d) {
    ChowClass part = k.ch().graded_part(d);
    out += (d % 2 == 0) ? part : -part;
  }
  return KClass(std::move(out));
}

KClass tensor(const KClass& a, const KClass& b) { return KClass(a.ch() * b.ch()); }

ChowClass todd(const KClass& k) {
  const auto& ring = k.ring();
  ChowClass c = ch_to_chern(k);
  ChowClass c1 = c.graded_part(1);
  ChowClass c2 = c.graded_part(2);
  ChowClass td = ChowClass::constant(ring, 1);
  td += c1 * Rational(1, 2);
  td += (c1 * c1 + c2) * Rational(1, 12);
  td += (c1 * c2) * Rational(1, 24);
  return td;
}

}  // namespace sncdp
