#pragma once

#include "sncdp/chow_ring.hpp"

namespace sncdp {

// A virtual sheaf class, stored as its Chern character. The degree-0 part
// is the virtual rank and must be an integer.
class KClass {
 public:
  KClass() = default;
  explicit KClass(ChowClass ch);

  static KClass zero(const RingPtr& ring) { return KClass(ChowClass(ring)); }
  static KClass trivial(const RingPtr& ring, int rank);
  // Line bundle with first Chern class c1: ch = exp(c1).
  static KClass line_bundle(const ChowClass& c1);

  const ChowClass& ch() const { return ch_; }
  const RingPtr& ring() const { return ch_.ring(); }
  Integer rank() const;
  ChowClass ch_part(int degree) const { return ch_.graded_part(degree); }

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  KClass operator-() const { return KClass(-ch_); }

  bool operator==(const KClass& other) const { return ch_ == other.ch_; }
  std::string to_string() const { return ch_.to_string(); }

 private:
  ChowClass ch_;
};

// Newton identities through the ring dimension: ch_k = (-1)^(k-1) [log c]_k / (k-1)!.
// Throws DomainError unless total_chern has constant term 1.
KClass chern_to_ch(int rank, const ChowClass& total_chern);

// Total Chern class of a (possibly virtual) class.
ChowClass ch_to_chern(const KClass& k);

// ch_d -> (-1)^d ch_d
KClass dual(const KClass& k);
KClass tensor(const KClass& a, const KClass& b);

// 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24, truncated at the ring dimension.
ChowClass todd(const KClass& k);

}  // namespace sncdp
