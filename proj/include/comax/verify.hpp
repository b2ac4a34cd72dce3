#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "comax/analysis.hpp"
#include "comax/graph.hpp"
#include "comax/ring_spec.hpp"
#include "comax/structure.hpp"

namespace comax {

struct CatalogEntry {
    std::string label;
    std::string spec;  // display string; parseable unless the entry is built in
    std::function<RingPtr()> build;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
};

// Z_n for n in [2,60]; all products of up to three fields drawn from
// GF(2), GF(3), GF(4), GF(5); M2(GF(q)) for q in {2,3,4,5}; the
// upper-triangular table rings T2(GF(2)) and T2(GF(3)); and Z2 x Z2 x Z2.
Catalog default_catalog();

// JSON array of spec strings or {"label": ..., "spec": ...} objects.
Catalog load_catalog(const std::string& path);

struct TheoremReport {
    std::string theorem_id;  // T1a, T2, R4, T5, R6, T7, CEX
    std::string ring_label;
    std::string verdict;     // pass | fail | inapplicable
    nlohmann::ordered_json certificate;
    double elapsed_ms = 0;   // console diagnostics only; not serialized
};

// T1: the maximal-ideal coloring of the core graph is proper with
// |Max(R)| colors, and the chromatic number is at least |Max(R)|.
TheoremReport check_T1a(const RingPtr& R);

// T2: the core graph has a clique of order |Max(R)|; for commutative rings
// the clique is built constructively and cross-checked against the search.
TheoremReport check_T2(const RingPtr& R);

// The counterexample to the naive clique argument: in Z2 x Z2 x Z2 the
// idempotents e1, e2 lie in m2\m1 and m1\m2 yet are not adjacent.
TheoremReport check_CEX();

// R4: adjacency transfers to R/J(R) and radical fibers are independent.
TheoremReport check_R4(const RingPtr& R);

// T5: a complete n-partite core forces n = 2 with R/J = GF(q1) x GF(q2),
// or n = q+1 with R/J = M2(GF(q)); maximal ideals intersect in J pairwise.
TheoremReport check_T5(const RingPtr& R);

// R6: the core of M2(GF(q)) is complete (q+1)-partite with parts m\{0} of
// size q^2-1, matching the explicit ideal families.
TheoremReport check_R6(unsigned q);

// T7: a universal core vertex forces R = Z2 x GF(q), and conversely.
TheoremReport check_T7(const RingPtr& R);

// Runs the selected checks (one of the ids above or "all") over the catalog.
// Reports are grouped by theorem, catalog order within each theorem.
std::vector<TheoremReport> run_catalog(const Catalog& catalog, const std::string& theorem);

nlohmann::ordered_json reports_to_json(const std::vector<TheoremReport>& reports);
int aggregate_exit_code(const std::vector<TheoremReport>& reports);  // 0 ok, 1 any fail

}  // namespace comax
