#include "comax/graph.hpp"

#include <algorithm>

#include "comax/structure.hpp"

namespace comax {

const char* to_string(GraphVariant v) {
    switch (v) {
        case GraphVariant::full: return "full";
        case GraphVariant::units_only: return "units_only";
        case GraphVariant::nonunits_only: return "nonunits_only";
        case GraphVariant::core: return "core";
    }
    return "?";
}

GraphVariant graph_variant_from_string(const std::string& s) {
    if (s == "full") return GraphVariant::full;
    if (s == "units" || s == "units_only") return GraphVariant::units_only;
    if (s == "nonunits" || s == "nonunits_only") return GraphVariant::nonunits_only;
    if (s == "core") return GraphVariant::core;
    throw InvalidSpecError("unknown graph variant: " + s);
}

std::optional<std::size_t> ComaxGraph::index_of(Elem v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> ComaxGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < num_vertices(); ++i)
        adj[i].for_each([&](std::size_t j) {
            if (i < j) es.emplace_back(i, j);
        });
    return es;
}

std::size_t ComaxGraph::edge_count() const {
    std::size_t d = 0;
    for (const auto& row : adj) d += row.count();
    return d / 2;
}

bool adjacent(const FiniteRing& R, Elem a, Elem b) {
    if (a == b) throw PreconditionError("adjacent: the comaximal graph is simple (a != b)");
    // Ra + Rb = R  iff  some u in Ra has 1 - u in Rb
    return R.principal_row(a).intersects(R.comax_row(b));
}

ComaxGraph build_graph(const RingPtr& R, GraphVariant variant) {
    const FiniteRing& r = *R;
    const std::size_t n = r.size();
    if (n > size_cap())
        throw SizeLimitError("graph over " + r.label() + " exceeds the size cap");

    ComaxGraph G;
    G.ring_label = r.label();
    G.variant = variant;
    const DynBitset& units = r.unit_mask();
    for (std::size_t a = 0; a < n; ++a) {
        bool take = false;
        switch (variant) {
            case GraphVariant::full: take = true; break;
            case GraphVariant::units_only: take = units.test(a); break;
            case GraphVariant::nonunits_only: take = !units.test(a); break;
            case GraphVariant::core:
                take = !units.test(a) && !max_ideal_data(r).radical.test(a);
                break;
        }
        if (take) G.vertices.push_back(static_cast<Elem>(a));
    }
    const std::size_t v = G.vertices.size();
    G.vertex_labels.reserve(v);
    for (Elem x : G.vertices) G.vertex_labels.push_back(r.render(x));
    G.adj.assign(v, DynBitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (adjacent(r, G.vertices[i], G.vertices[j])) {
                G.adj[i].set(j);
                G.adj[j].set(i);
            }
    return G;
}

BlowupReport blowup_check(const RingPtr& R) {
    LeftIdeal J = jacobson_radical(R);
    if (!J.is_proper())
        throw PreconditionError("blowup_check: ring has no maximal left ideal");

    QuotientRing Q = quotient_by(R, J, R->label() + "/J");
    ComaxGraph core = build_graph(R, GraphVariant::core);
    ComaxGraph qcore = build_graph(Q.ring, GraphVariant::core);

    BlowupReport rep;
    rep.fiber_size = J.size();
    rep.quotient_label = Q.ring->label();
    rep.core_vertices = core.num_vertices();
    rep.quotient_core_vertices = qcore.num_vertices();
    rep.adjacency_transfer_ok = true;
    rep.fibers_independent_ok = true;
    rep.fiber_sizes_ok = true;

    // fibers: every core vertex must project onto a quotient core vertex,
    // each quotient core vertex carrying exactly |J| preimages
    std::vector<std::size_t> fiber(qcore.num_vertices(), 0);
    for (Elem a : core.vertices) {
        auto qi = qcore.index_of(Q.projection[a]);
        if (!qi) {
            rep.fiber_sizes_ok = false;
            rep.witness_on_failure = {a, a};
            return rep;
        }
        ++fiber[*qi];
    }
    for (std::size_t i = 0; i < fiber.size(); ++i)
        if (fiber[i] != J.size()) {
            rep.fiber_sizes_ok = false;
            rep.witness_on_failure = {qcore.vertices[i], qcore.vertices[i]};
        }
    if (core.num_vertices() != qcore.num_vertices() * J.size()) rep.fiber_sizes_ok = false;

    for (std::size_t i = 0; i < core.num_vertices(); ++i) {
        Elem a = core.vertices[i];
        for (std::size_t j = i + 1; j < core.num_vertices(); ++j) {
            Elem b = core.vertices[j];
            bool ab = core.adjacent(i, j);
            if (Q.projection[a] == Q.projection[b]) {
                if (ab) {
                    rep.fibers_independent_ok = false;
                    rep.witness_on_failure = {a, b};
                    return rep;
                }
            } else {
                bool qab = adjacent(*Q.ring, Q.projection[a], Q.projection[b]);
                if (ab != qab) {
                    rep.adjacency_transfer_ok = false;
                    rep.witness_on_failure = {a, b};
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::string export_dot(const ComaxGraph& G) {
    std::string out = "graph \"" + G.ring_label + " " + to_string(G.variant) + "\" {\n";
    for (const auto& l : G.vertex_labels) out += "  \"" + l + "\";\n";
    for (auto [i, j] : G.edges())
        out += "  \"" + G.vertex_labels[i] + "\" -- \"" + G.vertex_labels[j] + "\";\n";
    out += "}\n";
    return out;
}

nlohmann::ordered_json export_json(const ComaxGraph& G) {
    nlohmann::ordered_json j;
    j["ring"] = G.ring_label;
    j["variant"] = to_string(G.variant);
    j["vertices"] = G.vertex_labels;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [a, b] : G.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace comax
