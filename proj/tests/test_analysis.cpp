#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "comax/analysis.hpp"
#include "comax/ring_spec.hpp"
#include "oracles.hpp"

using namespace comax;

namespace {

std::set<std::set<Elem>> parts_as_element_sets(const ComaxGraph& G,
                                               const PartiteCertificate& cert) {
    std::set<std::set<Elem>> out;
    for (const auto& part : cert.parts) {
        std::set<Elem> s;
        for (std::size_t i : part) s.insert(G.vertices[i]);
        out.insert(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("complete multipartite recognition") {
    RingPtr Z6 = make_zmod(6);
    ComaxGraph core6 = build_graph(Z6, GraphVariant::core);
    auto cert = is_complete_multipartite(core6);
    REQUIRE(cert.has_value());
    CHECK(cert->parts.size() == 2);
    CHECK(parts_as_element_sets(core6, *cert) == std::set<std::set<Elem>>{{3}, {2, 4}});
    CHECK(verify_partite(core6, *cert));

    ComaxGraph corem = build_graph(build_ring("M2(GF(2))"), GraphVariant::core);
    auto certm = is_complete_multipartite(corem);
    REQUIRE(certm.has_value());
    CHECK(certm->parts.size() == 3);
    CHECK(verify_partite(corem, *certm));

    RingPtr Z30 = make_zmod(30);
    ComaxGraph core30 = build_graph(Z30, GraphVariant::core);
    CHECK_FALSE(is_complete_multipartite(core30).has_value());
    // witness: non-adjacency is not transitive (2 ~/~ 6, 6 ~/~ 3, but 2 ~ 3)
    auto i2 = *core30.index_of(2), i3 = *core30.index_of(3), i6 = *core30.index_of(6);
    CHECK_FALSE(core30.adjacent(i2, i6));
    CHECK_FALSE(core30.adjacent(i6, i3));
    CHECK(core30.adjacent(i2, i3));

    // empty graph: zero parts
    ComaxGraph empty = build_graph(make_zmod(4), GraphVariant::core);
    auto ce = is_complete_multipartite(empty);
    REQUIRE(ce.has_value());
    CHECK(ce->parts.empty());
}

TEST_CASE("chromatic number") {
    RingPtr Z6 = make_zmod(6);
    ComaxGraph core6 = build_graph(Z6, GraphVariant::core);
    ColoringResult c6 = chromatic_number(core6);
    CHECK(c6.num_colors == 2);
    CHECK(c6.exact);

    ComaxGraph core3 = build_graph(build_ring("M2(GF(3))"), GraphVariant::core);
    CHECK(chromatic_number(core3).num_colors == 4);

    ComaxGraph empty = build_graph(make_zmod(9), GraphVariant::core);
    CHECK(chromatic_number(empty).num_colors == 0);

    // colorings come back proper
    for (const auto& spec : {"Z6", "Z30", "Z2 x Z2 x Z2", "M2(GF(2))"}) {
        ComaxGraph g = build_graph(build_ring(spec), GraphVariant::core);
        ColoringResult c = chromatic_number(g);
        CAPTURE(spec);
        for (auto [i, j] : g.edges()) CHECK(c.color[i] != c.color[j]);
        for (int col : c.color) CHECK(col < static_cast<int>(c.num_colors));
    }
}

TEST_CASE("chromatic number matches plain backtracking") {
    for (const auto& spec : {"Z6", "Z10", "Z12", "Z30", "Z2 x Z2 x Z2", "M2(GF(2))",
                             "Z2 x GF(4)", "GF(3) x GF(3)"}) {
        ComaxGraph g = build_graph(build_ring(spec), GraphVariant::core);
        CAPTURE(spec);
        CHECK(chromatic_number(g).num_colors == oracle::brute_chromatic_number(g));
    }
}

TEST_CASE("n-partite decisions") {
    ComaxGraph core6 = build_graph(make_zmod(6), GraphVariant::core);
    CHECK(is_n_partite(core6, 2).value);
    CHECK_FALSE(is_n_partite(core6, 1).value);

    ComaxGraph core30 = build_graph(make_zmod(30), GraphVariant::core);
    CHECK(is_n_partite(core30, 3).value);
    CHECK_FALSE(is_n_partite(core30, 2).value);
    CHECK(verify_clique(*make_zmod(30), {2, 3, 5}));  // the triangle behind the bound
}

TEST_CASE("maximum cliques") {
    ComaxGraph core6 = build_graph(make_zmod(6), GraphVariant::core);
    CliqueCertificate c6 = max_clique(core6);
    CHECK(c6.members == std::vector<Elem>{2, 3});  // least maximum clique
    CHECK(c6.exact);
    CHECK(c6.construction == CliqueConstruction::brute_force);

    ComaxGraph corem = build_graph(build_ring("M2(GF(2))"), GraphVariant::core);
    CliqueCertificate cm = max_clique(corem);
    CHECK(cm.members.size() == 3);
    CHECK(verify_clique(*build_ring("M2(GF(2))"), cm.members));

    RingPtr C = build_ring("Z2 x Z2 x Z2");
    ComaxGraph corec = build_graph(C, GraphVariant::core);
    CliqueCertificate cc = max_clique(corec);
    CHECK(cc.members == std::vector<Elem>{3, 5, 6});
    std::set<std::vector<unsigned>> lits;
    for (Elem m : cc.members) lits.insert(C->decode(m));
    CHECK(lits == std::set<std::vector<unsigned>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    CHECK(max_clique(build_graph(make_zmod(4), GraphVariant::core)).members.empty());
}

TEST_CASE("clique search matches plain enumeration") {
    for (const auto& spec : {"Z6", "Z12", "Z30", "Z60", "Z2 x Z2 x Z2", "M2(GF(2))",
                             "M2(GF(3))", "GF(2) x GF(3) x GF(5)"}) {
        ComaxGraph g = build_graph(build_ring(spec), GraphVariant::core);
        CAPTURE(spec);
        CliqueCertificate c = max_clique(g);
        CHECK(c.members.size() == oracle::brute_clique_number(g));
        CHECK(verify_clique(*build_ring(spec), c.members));
    }
}

TEST_CASE("constructive clique: frozen small cases") {
    RingPtr Z30 = make_zmod(30);
    CliqueCertificate c30 = theorem2_clique(Z30, maximal_left_ideals(Z30));
    CHECK(c30.members == std::vector<Elem>{2, 3, 5});
    CHECK(c30.construction == CliqueConstruction::theorem2);

    RingPtr Z6 = make_zmod(6);
    CliqueCertificate c6 = theorem2_clique(Z6, maximal_left_ideals(Z6));
    CHECK(c6.members == std::vector<Elem>{2, 3});

    RingPtr C = build_ring("Z2 x Z2 x Z2");
    auto msc = maximal_left_ideals(C);
    CliqueCertificate cc = theorem2_clique(C, msc);
    CHECK(cc.members == std::vector<Elem>{3, 6, 5});  // aligned with the sorted ideals
    for (std::size_t i = 0; i < 3; ++i) CHECK(msc[i].contains(cc.members[i]));
}

TEST_CASE("constructive clique: members live in their ideals and agree with search") {
    for (const auto& spec : {"Z30", "Z60", "Z2 x Z2 x Z2", "GF(2) x GF(3) x GF(5)",
                             "GF(4) x GF(4) x GF(4)", "Z36"}) {
        RingPtr R = build_ring(spec);
        auto ms = maximal_left_ideals(R);
        if (ms.size() < 2) continue;
        CAPTURE(spec);
        CliqueCertificate c = theorem2_clique(R, ms);
        CHECK(c.members.size() == ms.size());
        for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].contains(c.members[i]));
        CHECK(verify_clique(*R, c.members));
        ComaxGraph core = build_graph(R, GraphVariant::core);
        CHECK(max_clique(core).members.size() >= ms.size());
    }
}

TEST_CASE("constructive clique preconditions") {
    RingPtr M = build_ring("M2(GF(2))");
    CHECK_THROWS_AS(theorem2_clique(M, maximal_left_ideals(M)), PreconditionError);

    RingPtr Z6 = make_zmod(6);
    auto ms = maximal_left_ideals(Z6);
    CHECK_THROWS_AS(theorem2_clique(Z6, {ms[0]}), PreconditionError);
    CHECK_THROWS_AS(theorem2_clique(Z6, {ms[0], ms[0]}), PreconditionError);
    LeftIdeal not_maximal = principal_left_ideal(Z6, 0);
    CHECK_THROWS_AS(theorem2_clique(Z6, {ms[0], not_maximal}), PreconditionError);
}

TEST_CASE("vertex limits degrade to flagged bounds") {
    ComaxGraph core = build_graph(make_zmod(30), GraphVariant::core);
    ColoringResult c = chromatic_number(core, 2);
    CHECK_FALSE(c.exact);
    CHECK(c.num_colors >= 3);  // a greedy coloring is still an upper bound
    for (auto [i, j] : core.edges()) CHECK(c.color[i] != c.color[j]);

    CliqueCertificate q = max_clique(core, 2);
    CHECK_FALSE(q.exact);
    CHECK(verify_clique(*make_zmod(30), q.members));  // still a clique, maybe not maximum
}

TEST_CASE("universal vertices") {
    ComaxGraph core6 = build_graph(make_zmod(6), GraphVariant::core);
    CHECK(universal_vertices(core6).universal == std::vector<Elem>{3});

    ComaxGraph core9 = build_graph(build_ring("GF(3) x GF(3)"), GraphVariant::core);
    CHECK(universal_vertices(core9).universal.empty());

    ComaxGraph empty = build_graph(make_zmod(8), GraphVariant::core);
    CHECK(universal_vertices(empty).universal.empty());
}

TEST_CASE("core graphs are |Max|-partite via the least-ideal coloring") {
    for (const auto& spec : {"Z6", "Z12", "Z30", "Z60", "M2(GF(2))", "M2(GF(3))",
                             "Z2 x Z2 x Z2", "GF(2) x GF(4)"}) {
        RingPtr R = build_ring(spec);
        CAPTURE(spec);
        const MaxIdealData& d = max_ideal_data(*R);
        ComaxGraph core = build_graph(R, GraphVariant::core);
        std::vector<int> color(core.num_vertices(), -1);
        for (std::size_t i = 0; i < core.num_vertices(); ++i)
            for (std::size_t m = 0; m < d.ideals.size(); ++m)
                if (d.ideals[m].test(core.vertices[i])) {
                    color[i] = static_cast<int>(m);
                    break;
                }
        for (std::size_t i = 0; i < core.num_vertices(); ++i) REQUIRE(color[i] >= 0);
        for (auto [i, j] : core.edges()) CHECK(color[i] != color[j]);
        // and the chromatic number is sandwiched: clique <= chi <= |Max|
        ColoringResult chi = chromatic_number(core);
        CliqueCertificate clq = max_clique(core);
        CHECK(clq.members.size() <= chi.num_colors);
        if (core.num_vertices() > 0) CHECK(chi.num_colors <= d.ideals.size());
    }
}
