#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comax/ideal.hpp"
#include "comax/ring.hpp"

namespace comax {

// Coset ring R/I for a two-sided ideal I. Canonical representative of each
// coset is its least element id; quotient ids follow representative order,
// so id 0 is the zero coset and id 1 the coset of 1.
struct QuotientRing {
    RingPtr ring;
    std::vector<Elem> projection;  // parent id -> quotient id
    std::vector<Elem> section;     // quotient id -> canonical representative
};
QuotientRing quotient_by(const RingPtr& R, const LeftIdeal& I, std::string label = "");

// Peirce components e_i*S for the primitive central idempotents e_i of a
// semisimple ring S (jacobson radical must be zero). Components are ordered
// by idempotent id.
std::vector<RingPtr> semisimple_decompose(const RingPtr& S);

// For a simple finite ring S, the unique (n, q) with |S| = q^(n^2) and
// (q^n - 1)/(q - 1) maximal left ideals; S is then M_n(GF(q)).
struct SimpleComponentId {
    unsigned n = 0;
    unsigned q = 0;
    std::size_t cardinality = 0;
    std::size_t max_left_ideal_count = 0;
};
SimpleComponentId identify_simple_component(const RingPtr& S);

// R/J(R) decomposed into matrix rings over finite fields, sorted by (q, n).
struct WedderburnReport {
    std::vector<SimpleComponentId> components;
    bool consistent = false;
    std::string quotient_label;
    std::size_t radical_size = 0;
};
WedderburnReport wedderburn_report(const RingPtr& R);

// The q+1 maximal left ideals of M2(GF(q)) built from the explicit matrix
// families (conjugates of the second-column-zero ideal by [[1,a],[0,1]],
// then the first-column-zero ideal); checked against the generic
// enumeration before returning. Order: M_0, ..., M_{q-1}, M'.
std::vector<LeftIdeal> remark6_maximal_ideals(unsigned q);

enum class IsoVerdict { isomorphic, not_isomorphic, unknown };
const char* to_string(IsoVerdict v);

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::unknown;
    std::optional<std::vector<Elem>> witness;    // A-id -> B-id, verified
    std::optional<std::string> obstruction;      // distinguishing invariant
};

// Invariant screen, then backtracking over images of a generating set.
// `unknown` only when the node budget runs out.
IsoResult ring_isomorphic(const RingPtr& A, const RingPtr& B,
                          std::size_t node_budget = 1000000);

// Checks that f is a bijective unital homomorphism on all pairs.
bool verify_isomorphism(const FiniteRing& A, const FiniteRing& B,
                        const std::vector<Elem>& f);

}  // namespace comax
