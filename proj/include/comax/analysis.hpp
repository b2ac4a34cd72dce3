#pragma once

#include <optional>
#include <vector>

#include "comax/graph.hpp"
#include "comax/ideal.hpp"

namespace comax {

// Partition of the vertex set into independent parts. When `complete`, every
// cross-part pair is an edge. Parts hold vertex indices, ordered by least
// member.
struct PartiteCertificate {
    std::vector<std::vector<std::size_t>> parts;
    bool complete = false;
};

// Returns the partition into non-adjacency classes when non-adjacency (plus
// equality) is an equivalence relation on the vertices; nullopt otherwise.
std::optional<PartiteCertificate> is_complete_multipartite(const ComaxGraph& G);
bool verify_partite(const ComaxGraph& G, const PartiteCertificate& cert);

struct ColoringResult {
    std::size_t num_colors = 0;
    std::vector<int> color;  // per vertex index
    bool exact = true;       // false: vertex limit exceeded, upper bound only
};

// Exact chromatic number via branch and bound (greedy upper bound, clique
// lower bound). Above the vertex limit the greedy bound is returned with
// exact = false.
ColoringResult chromatic_number(const ComaxGraph& G, std::size_t vertex_limit = 512);

// True when the graph colors with at most n colors; the coloring is the
// certificate. When the vertex limit forces an inexact coloring, value=true
// is still sound (a valid n-coloring was found) but value=false only means
// the greedy bound exceeded n.
struct NPartiteResult {
    bool value = false;
    ColoringResult coloring;
};
NPartiteResult is_n_partite(const ComaxGraph& G, std::size_t n, std::size_t vertex_limit = 512);

enum class CliqueConstruction { brute_force, theorem2 };
const char* to_string(CliqueConstruction c);

struct CliqueCertificate {
    std::vector<Elem> members;  // ring element ids, pairwise adjacent
    CliqueConstruction construction = CliqueConstruction::brute_force;
    bool exact = true;  // false: vertex limit exceeded, lower bound only
};

// Maximum clique via branch and bound; the reported clique is the
// lexicographically least maximum clique by element id.
CliqueCertificate max_clique(const ComaxGraph& G, std::size_t vertex_limit = 512);

// The constructive clique from the avoidance argument: given distinct maximal
// left ideals m_1..m_n of a commutative ring, picks x_i in m_i (least element
// at every choice point) so that {x_1..x_n} is pairwise adjacent. The result
// is aligned with `ms` (member i lies in ms[i]) and verified before return.
CliqueCertificate theorem2_clique(const RingPtr& R, const std::vector<LeftIdeal>& ms);

bool verify_clique(const FiniteRing& R, const std::vector<Elem>& members);

struct UniversalVertexReport {
    std::vector<Elem> universal;  // vertices adjacent to all other vertices
};
UniversalVertexReport universal_vertices(const ComaxGraph& G);

}  // namespace comax
