#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "comax/ideal.hpp"
#include "comax/ring.hpp"

namespace comax {

enum class GraphVariant { full, units_only, nonunits_only, core };

const char* to_string(GraphVariant v);
GraphVariant graph_variant_from_string(const std::string& s);

// Induced subgraph of the comaximal graph: a ~ b iff Ra + Rb = R.
// Variant `core` keeps the non-units outside the Jacobson radical.
struct ComaxGraph {
    std::string ring_label;
    GraphVariant variant = GraphVariant::core;
    std::vector<Elem> vertices;              // ascending element ids
    std::vector<std::string> vertex_labels;  // decoded literals
    std::vector<DynBitset> adj;              // symmetric, no self-loops

    std::size_t num_vertices() const { return vertices.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adj[i].test(j); }
    std::size_t degree(std::size_t i) const { return adj[i].count(); }
    std::optional<std::size_t> index_of(Elem v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // i < j, sorted
    std::size_t edge_count() const;
};

// Comaximality oracle; throws PreconditionError when a == b (simple graph).
bool adjacent(const FiniteRing& R, Elem a, Elem b);

ComaxGraph build_graph(const RingPtr& R, GraphVariant variant);

// Relation between the core graph of R and the core graph of R/J(R):
// adjacency transfers through the projection, fibers are independent sets,
// and every fiber has exactly |J(R)| vertices.
struct BlowupReport {
    std::size_t fiber_size = 0;
    bool adjacency_transfer_ok = false;
    bool fibers_independent_ok = false;
    bool fiber_sizes_ok = false;
    std::optional<std::pair<Elem, Elem>> witness_on_failure;
    std::string quotient_label;
    std::size_t core_vertices = 0;
    std::size_t quotient_core_vertices = 0;
    bool ok() const { return adjacency_transfer_ok && fibers_independent_ok && fiber_sizes_ok; }
};
BlowupReport blowup_check(const RingPtr& R);

std::string export_dot(const ComaxGraph& G);
nlohmann::ordered_json export_json(const ComaxGraph& G);

}  // namespace comax
