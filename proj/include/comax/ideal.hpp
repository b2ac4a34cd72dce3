#pragma once

#include <optional>
#include <vector>

#include "comax/ring.hpp"

namespace comax {

// A left ideal of a finite ring: contains 0, closed under addition and under
// left multiplication by every ring element. Proper iff 1 is not a member.
struct LeftIdeal {
    RingPtr ring;
    std::vector<Elem> elements;   // sorted ascending
    DynBitset mask;
    std::vector<Elem> generators; // provenance; may be empty

    std::size_t size() const { return elements.size(); }
    bool contains(Elem a) const { return mask.test(a); }
    bool is_proper() const { return !mask.test(ring->one()); }
};

// Wraps a mask as a LeftIdeal after checking the closure invariants.
LeftIdeal ideal_from_mask(const RingPtr& R, DynBitset mask, std::vector<Elem> generators);
bool is_left_ideal_set(const FiniteRing& R, const DynBitset& mask);

LeftIdeal principal_left_ideal(const RingPtr& R, Elem a);
LeftIdeal left_ideal_closure(const RingPtr& R, const std::vector<Elem>& seed);
LeftIdeal ideal_sum(const LeftIdeal& I, const LeftIdeal& J);

// All maximal proper left ideals, deduplicated and sorted by element set.
// Enumeration: proper principal ideals saturated under proper pairwise sums;
// the maximal members of that family are returned.
std::vector<LeftIdeal> maximal_left_ideals(const RingPtr& R);

// Intersection of all maximal left ideals; all of R when there are none.
LeftIdeal jacobson_radical(const RingPtr& R);

bool is_two_sided(const LeftIdeal& I);

// Least element of (intersection of `inside`) minus (union of `avoid`), if any.
std::optional<Elem> avoidance_pick(const RingPtr& R, const std::vector<LeftIdeal>& inside,
                                   const std::vector<LeftIdeal>& avoid);

// Cached mask-level view used across modules.
const MaxIdealData& max_ideal_data(const FiniteRing& R);

}  // namespace comax
