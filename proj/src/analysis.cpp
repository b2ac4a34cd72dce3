#include "comax/analysis.hpp"

#include <algorithm>
#include <map>

namespace comax {

const char* to_string(CliqueConstruction c) {
    return c == CliqueConstruction::brute_force ? "brute_force" : "theorem2";
}

// ---------------------------------------------------------------------------
// complete multipartite recognition

std::optional<PartiteCertificate> is_complete_multipartite(const ComaxGraph& G) {
    const std::size_t v = G.num_vertices();
    // group vertices by adjacency row; equal rows are never adjacent
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < v; ++i) groups[G.adj[i].words()].push_back(i);

    std::vector<std::vector<std::size_t>> parts;
    parts.reserve(groups.size());
    for (auto& [row, members] : groups) parts.push_back(members);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<int> part_of(v, -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t i : parts[p]) part_of[i] = static_cast<int>(p);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (part_of[i] != part_of[j] && !G.adjacent(i, j)) return std::nullopt;

    PartiteCertificate cert;
    cert.parts = std::move(parts);
    cert.complete = true;
    return cert;
}

bool verify_partite(const ComaxGraph& G, const PartiteCertificate& cert) {
    const std::size_t v = G.num_vertices();
    std::vector<int> part_of(v, -1);
    for (std::size_t p = 0; p < cert.parts.size(); ++p)
        for (std::size_t i : cert.parts[p]) {
            if (i >= v || part_of[i] != -1) return false;
            part_of[i] = static_cast<int>(p);
        }
    for (std::size_t i = 0; i < v; ++i)
        if (part_of[i] == -1) return false;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) {
            if (part_of[i] == part_of[j] && G.adjacent(i, j)) return false;
            if (cert.complete && part_of[i] != part_of[j] && !G.adjacent(i, j)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// clique search

namespace {

// Tomita-style branch and bound: candidates are color-sorted so the greedy
// color index bounds the clique extension.
struct CliqueSearch {
    const ComaxGraph& G;
    std::size_t best = 0;
    std::vector<std::size_t> best_set, cur;

    void expand(std::vector<std::size_t>& cand) {
        const std::size_t m = cand.size();
        std::vector<int> color(m);
        std::vector<DynBitset> classes;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].test(cand[i])) ++c;
            if (c == classes.size()) classes.emplace_back(G.num_vertices());
            // mark neighbours of cand[i] as blocked for class c
            G.adj[cand[i]].for_each([&](std::size_t nb) { classes[c].set(nb); });
            color[i] = static_cast<int>(c) + 1;
        }
        for (std::size_t idx = m; idx-- > 0;) {
            if (cur.size() + color[idx] <= best) return;
            std::size_t vtx = cand[idx];
            cur.push_back(vtx);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < idx; ++j)
                if (G.adj[vtx].test(cand[j])) next.push_back(cand[j]);
            if (next.empty()) {
                if (cur.size() > best) {
                    best = cur.size();
                    best_set = cur;
                }
            } else {
                expand(next);
            }
            cur.pop_back();
        }
    }
};

// First clique of the target size found by ascending-id DFS; this is the
// lexicographically least one.
bool lex_least_clique(const ComaxGraph& G, std::size_t target, std::vector<std::size_t>& cur,
                      const std::vector<std::size_t>& cand) {
    if (cur.size() == target) return true;
    for (std::size_t k = 0; k < cand.size(); ++k) {
        if (cur.size() + (cand.size() - k) < target) return false;
        std::size_t vtx = cand[k];
        std::vector<std::size_t> next;
        for (std::size_t j = k + 1; j < cand.size(); ++j)
            if (G.adj[vtx].test(cand[j])) next.push_back(cand[j]);
        cur.push_back(vtx);
        if (cur.size() + next.size() >= target && lex_least_clique(G, target, cur, next))
            return true;
        cur.pop_back();
    }
    return false;
}

std::vector<std::size_t> greedy_clique(const ComaxGraph& G) {
    std::vector<std::size_t> cur;
    for (std::size_t i = 0; i < G.num_vertices(); ++i) {
        bool ok = true;
        for (std::size_t j : cur)
            if (!G.adjacent(i, j)) {
                ok = false;
                break;
            }
        if (ok) cur.push_back(i);
    }
    return cur;
}

}  // namespace

CliqueCertificate max_clique(const ComaxGraph& G, std::size_t vertex_limit) {
    CliqueCertificate cert;
    cert.construction = CliqueConstruction::brute_force;
    const std::size_t v = G.num_vertices();
    if (v == 0) return cert;

    std::vector<std::size_t> verts;
    if (v > vertex_limit) {
        verts = greedy_clique(G);
        cert.exact = false;
    } else {
        CliqueSearch s{G, 0, {}, {}};
        std::vector<std::size_t> cand(v);
        // ascending degree so high-degree vertices are expanded first
        for (std::size_t i = 0; i < v; ++i) cand[i] = i;
        std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            auto da = G.degree(a), db = G.degree(b);
            return da != db ? da < db : a > b;
        });
        s.expand(cand);
        std::vector<std::size_t> cur;
        std::vector<std::size_t> all(v);
        for (std::size_t i = 0; i < v; ++i) all[i] = i;
        if (!lex_least_clique(G, s.best, cur, all)) cur = s.best_set;  // unreachable fallback
        verts = cur;
    }
    std::sort(verts.begin(), verts.end());
    for (std::size_t i : verts) cert.members.push_back(G.vertices[i]);
    return cert;
}

// ---------------------------------------------------------------------------
// coloring

namespace {

ColoringResult dsatur_greedy(const ComaxGraph& G) {
    const std::size_t v = G.num_vertices();
    ColoringResult res;
    res.color.assign(v, -1);
    std::vector<DynBitset> forbidden(v);
    for (auto& f : forbidden) f = DynBitset(v + 1);
    std::vector<std::size_t> sat(v, 0);
    for (std::size_t step = 0; step < v; ++step) {
        std::size_t pick = v;
        for (std::size_t i = 0; i < v; ++i) {
            if (res.color[i] != -1) continue;
            if (pick == v || sat[i] > sat[pick] ||
                (sat[i] == sat[pick] && G.degree(i) > G.degree(pick)))
                pick = i;
        }
        int c = 0;
        while (forbidden[pick].test(c)) ++c;
        res.color[pick] = c;
        res.num_colors = std::max(res.num_colors, static_cast<std::size_t>(c) + 1);
        G.adj[pick].for_each([&](std::size_t nb) {
            if (!forbidden[nb].test(c)) {
                forbidden[nb].set(c);
                ++sat[nb];
            }
        });
    }
    return res;
}

// Backtracking k-colorability; clique vertices are pre-colored.
bool color_with_k(const ComaxGraph& G, std::size_t k, const std::vector<std::size_t>& clique,
                  std::vector<int>& out) {
    const std::size_t v = G.num_vertices();
    out.assign(v, -1);
    if (clique.size() > k) return false;
    for (std::size_t i = 0; i < clique.size(); ++i) out[clique[i]] = static_cast<int>(i);

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < v; ++i)
        if (out[i] == -1) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto da = G.degree(a), db = G.degree(b);
        return da != db ? da > db : a < b;
    });

    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        std::size_t vtx = order[pos];
        for (std::size_t c = 0; c < k; ++c) {
            bool ok = true;
            G.adj[vtx].for_each([&](std::size_t nb) {
                if (out[nb] == static_cast<int>(c)) ok = false;
            });
            if (!ok) continue;
            out[vtx] = static_cast<int>(c);
            if (self(self, pos + 1)) return true;
            out[vtx] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

ColoringResult chromatic_number(const ComaxGraph& G, std::size_t vertex_limit) {
    const std::size_t v = G.num_vertices();
    if (v == 0) return {};
    ColoringResult greedy = dsatur_greedy(G);
    if (v > vertex_limit) {
        greedy.exact = false;
        return greedy;
    }
    CliqueCertificate clq = max_clique(G, vertex_limit);
    std::size_t lb = clq.members.size();
    if (lb == greedy.num_colors) return greedy;

    std::vector<std::size_t> clique_idx;
    for (Elem m : clq.members) clique_idx.push_back(*G.index_of(m));
    for (std::size_t k = lb; k < greedy.num_colors; ++k) {
        std::vector<int> col;
        if (color_with_k(G, k, clique_idx, col)) {
            ColoringResult res;
            res.num_colors = k;
            res.color = std::move(col);
            return res;
        }
    }
    return greedy;
}

NPartiteResult is_n_partite(const ComaxGraph& G, std::size_t n, std::size_t vertex_limit) {
    NPartiteResult res;
    res.coloring = chromatic_number(G, vertex_limit);
    res.value = res.coloring.num_colors <= n;
    return res;
}

// ---------------------------------------------------------------------------
// the constructive clique

bool verify_clique(const FiniteRing& R, const std::vector<Elem>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i] == members[j]) return false;
            if (!adjacent(R, members[i], members[j])) return false;
        }
    return true;
}

namespace {

// least element of m adjacent to x
std::optional<Elem> least_adjacent_in(const FiniteRing& R, const LeftIdeal& m, Elem x) {
    for (Elem cand : m.elements) {
        if (cand == x) continue;
        if (adjacent(R, cand, x)) return cand;
    }
    return std::nullopt;
}

std::vector<Elem> theorem2_rec(const RingPtr& R, Elem x1, const std::vector<LeftIdeal>& ms,
                               std::size_t k) {
    const FiniteRing& r = *R;
    if (k == 2) {
        auto x2 = least_adjacent_in(r, ms[1], x1);
        if (!x2)
            throw FalsificationError("theorem2_clique: no neighbour of " + r.render(x1) +
                                     " in the second ideal");
        return {x1, *x2};
    }
    std::vector<LeftIdeal> inside{ms[0], ms[k - 1]};
    std::vector<LeftIdeal> avoid(ms.begin() + 1, ms.begin() + (k - 1));
    auto y = avoidance_pick(R, inside, avoid);
    if (!y)
        throw FalsificationError(
            "theorem2_clique: avoidance set empty (prime avoidance would be violated)");
    Elem z = r.mul(x1, y.value());

    std::vector<Elem> sub = theorem2_rec(R, z, ms, k - 1);  // {z, x2, ..., x_{k-1}}
    std::vector<Elem> xs;
    xs.push_back(x1);
    xs.insert(xs.end(), sub.begin() + 1, sub.end());

    Elem prod = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) prod = r.mul(prod, xs[i]);
    if (ms[k - 1].contains(prod))
        throw FalsificationError("theorem2_clique: in " + r.label() + " the partial product " +
                                 r.render(prod) + " fell into ideal " + std::to_string(k) +
                                 ", contradicting the avoidance construction");
    auto xk = least_adjacent_in(r, ms[k - 1], prod);
    if (!xk)
        throw FalsificationError("theorem2_clique: in " + r.label() + " no element of ideal " +
                                 std::to_string(k) + " is adjacent to the partial product " +
                                 r.render(prod));
    xs.push_back(*xk);
    return xs;
}

}  // namespace

CliqueCertificate theorem2_clique(const RingPtr& R, const std::vector<LeftIdeal>& ms) {
    const FiniteRing& r = *R;
    if (!r.commutative())
        throw PreconditionError(
            "theorem2_clique: unsupported for non-commutative rings (the constructive argument "
            "needs prime ideals)");
    if (ms.size() < 2) throw PreconditionError("theorem2_clique: need at least two ideals");

    const MaxIdealData& d = max_ideal_data(r);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i].ring != R)
            throw PreconditionError("theorem2_clique: ideal belongs to another ring");
        bool maximal = false;
        for (const auto& m : d.ideals)
            if (ms[i].mask == m) {
                maximal = true;
                break;
            }
        if (!maximal) throw PreconditionError("theorem2_clique: ideal is not maximal");
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].mask == ms[j].mask)
                throw PreconditionError("theorem2_clique: ideals must be distinct");
    }

    std::vector<LeftIdeal> inside{ms[0]};
    std::vector<LeftIdeal> avoid(ms.begin() + 1, ms.end());
    auto x1 = avoidance_pick(R, inside, avoid);
    if (!x1)
        throw FalsificationError(
            "theorem2_clique: first ideal is covered by the others (prime avoidance would be "
            "violated)");

    std::vector<Elem> xs = theorem2_rec(R, *x1, ms, ms.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!ms[i].contains(xs[i]))
            throw FalsificationError("theorem2_clique: member " + r.render(xs[i]) +
                                     " is not in its ideal");
    if (!verify_clique(r, xs))
        throw FalsificationError(
            "theorem2_clique: constructed set is not a clique; this contradicts the avoidance "
            "argument");

    CliqueCertificate cert;
    cert.members = std::move(xs);
    cert.construction = CliqueConstruction::theorem2;
    return cert;
}

UniversalVertexReport universal_vertices(const ComaxGraph& G) {
    UniversalVertexReport rep;
    const std::size_t v = G.num_vertices();
    for (std::size_t i = 0; i < v; ++i)
        if (G.degree(i) + 1 == v) rep.universal.push_back(G.vertices[i]);
    return rep;
}

}  // namespace comax
