#pragma once

// The entailment-induced order on variable sets. A body A is below B when B
// entails everything in A; body minimization walks down this order.

#include "singlehead/horn.hpp"
#include "singlehead/propagation.hpp"

namespace singlehead {

enum class OrderRelation { Less, Greater, Equivalent, Incomparable };

// a is below b: f |= b -> a, i.e. a is contained in the consequences of b.
inline bool body_leq(const VarSet& a, const VarSet& b, const Formula& f) {
  return a.subset_of(consequences(b, f));
}

inline OrderRelation compare_bodies(const VarSet& a, const VarSet& b,
                                    const Formula& f) {
  bool ab = body_leq(a, b, f);
  bool ba = body_leq(b, a, f);
  if (ab && ba) return OrderRelation::Equivalent;
  if (ab) return OrderRelation::Less;
  if (ba) return OrderRelation::Greater;
  return OrderRelation::Incomparable;
}

}  // namespace singlehead
