// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "comax/verify.hpp"
#include "oracles.hpp"

using namespace comax;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

RingPtr m2_gf(unsigned q) {
    unsigned p = 0, e = 0;
    is_prime_power(q, &p, &e);
    return make_matrix_ring(make_gf(p, e), 2);
}

// 1. Remark 6 reproduction: core of M2(GF(q)) is complete (q+1)-partite with
//    parts of size q^2-1 matching the explicit ideal families; < 10 s total.
bool crit_remark6(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        RingPtr M = m2_gf(q);
        ComaxGraph core = build_graph(M, GraphVariant::core);
        auto cert = is_complete_multipartite(core);
        bool here = cert.has_value() && cert->parts.size() == q + 1;
        if (here)
            for (const auto& part : cert->parts) here = here && part.size() == std::size_t(q) * q - 1;

        std::vector<LeftIdeal> explicit_ideals = remark6_maximal_ideals(q);
        std::vector<LeftIdeal> enumerated = maximal_left_ideals(M);
        std::set<std::vector<Elem>> a, b;
        for (const auto& I : explicit_ideals) a.insert(I.elements);
        for (const auto& I : enumerated) b.insert(I.elements);
        here = here && a == b && explicit_ideals.size() == q + 1;

        if (cert.has_value()) {
            std::set<std::vector<Elem>> parts, punctured;
            for (const auto& part : cert->parts) {
                std::vector<Elem> es;
                for (std::size_t i : part) es.push_back(core.vertices[i]);
                parts.insert(es);
            }
            for (const auto& I : enumerated) {
                std::vector<Elem> es;
                for (Elem x : I.elements)
                    if (x != 0) es.push_back(x);
                punctured.insert(es);
            }
            here = here && parts == punctured;
        }
        os << "q=" << q << (here ? " ok " : " FAIL ");
        ok = ok && here;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << "(" << secs << " s)";
    detail = os.str();
    return ok && secs < 10.0;
}

// 2. |Max(M2(GF(q)))| = q+1 for q in {2,3,4,5}, exact.
bool crit_lemma42(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        std::size_t count = maximal_left_ideals(m2_gf(q)).size();
        os << "q=" << q << ":" << count << " ";
        ok = ok && count == q + 1;
    }
    detail = os.str();
    return ok;
}

// 3. For Z_n (2 <= n <= 60) with k distinct prime factors: the ideal coloring
//    is proper with k colors and the chromatic number equals k on nonempty
//    cores; < 30 s for the whole range.
bool crit_zn_coloring(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream bad;
    for (unsigned n = 2; n <= 60; ++n) {
        RingPtr R = make_zmod(n);
        std::size_t k = distinct_prime_factors(n).size();
        const MaxIdealData& d = max_ideal_data(*R);
        bool here = d.ideals.size() == k;

        ComaxGraph core = build_graph(R, GraphVariant::core);
        std::vector<int> color(core.num_vertices(), -1);
        for (std::size_t i = 0; i < core.num_vertices(); ++i)
            for (std::size_t m = 0; m < d.ideals.size(); ++m)
                if (d.ideals[m].test(core.vertices[i])) {
                    color[i] = static_cast<int>(m);
                    break;
                }
        for (std::size_t i = 0; i < core.num_vertices(); ++i) {
            here = here && color[i] >= 0 && color[i] < static_cast<int>(k);
            for (std::size_t j = i + 1; j < core.num_vertices(); ++j)
                if (color[i] == color[j] && core.adjacent(i, j)) here = false;
        }
        if (core.num_vertices() > 0) {
            ColoringResult chi = chromatic_number(core);
            here = here && chi.exact && chi.num_colors == k;
        }
        if (!here) bad << "Z" << n << " ";
        ok = ok && here;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "n=2..60 (" << secs << " s)";
    if (!ok) os << " failing: " << bad.str();
    detail = os.str();
    return ok && secs < 30.0;
}

// 4. Constructive vs searched cliques agree on every commutative catalog ring
//    with at least two maximal left ideals.
bool crit_theorem2(std::string& detail) {
    Catalog cat = default_catalog();
    std::size_t checked = 0;
    bool ok = true;
    std::ostringstream bad;
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        if (!is_commutative(*R)) continue;
        auto ms = maximal_left_ideals(R);
        if (ms.size() < 2) continue;
        ++checked;
        bool here = true;
        CliqueCertificate built = theorem2_clique(R, ms);
        here = here && built.members.size() == ms.size() && verify_clique(*R, built.members);
        for (std::size_t i = 0; i < ms.size(); ++i)
            here = here && ms[i].contains(built.members[i]);
        ComaxGraph core = build_graph(R, GraphVariant::core);
        CliqueCertificate searched = max_clique(core);
        here = here && searched.members.size() >= ms.size() &&
               verify_clique(*R, searched.members);
        if (!here) bad << e.label << " ";
        ok = ok && here;
    }
    std::ostringstream os;
    os << checked << " commutative rings with |Max| >= 2";
    if (!ok) os << " failing: " << bad.str();
    detail = os.str();
    return ok && checked > 0;
}

// 5. Counterexample fidelity in Z2 x Z2 x Z2.
bool crit_counterexample(std::string& detail) {
    RingPtr R = make_product({make_zmod(2), make_zmod(2), make_zmod(2)});
    Elem e1 = R->encode({1, 0, 0});
    Elem e2 = R->encode({0, 1, 0});
    DynBitset m1(R->size()), m2(R->size());
    for (std::size_t a = 0; a < R->size(); ++a) {
        auto t = R->decode(static_cast<Elem>(a));
        if (t[0] == 0) m1.set(a);
        if (t[1] == 0) m2.set(a);
    }
    bool ok = m2.test(e1) && !m1.test(e1) && m1.test(e2) && !m2.test(e2) &&
              !adjacent(*R, e1, e2) && check_CEX().verdict == "pass";
    detail = "e1=(1,0,0) in m2\\m1, e2=(0,1,0) in m1\\m2, not adjacent";
    return ok;
}

// 6. Blow-up: Z12 and T2(GF(2)) transfer with fiber 2; J=0 rings project
//    identically.
bool crit_blowup(std::string& detail) {
    bool ok = true;
    for (const auto& mk : {std::function<RingPtr()>{[] { return make_zmod(12); }},
                           std::function<RingPtr()>{[] { return make_t2(2); }}}) {
        RingPtr R = mk();
        BlowupReport b = blowup_check(R);
        ok = ok && b.fiber_size == 2 && b.ok();
    }
    Catalog cat = default_catalog();
    std::size_t semisimple = 0;
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        LeftIdeal J = jacobson_radical(R);
        if (J.size() != 1) continue;
        ++semisimple;
        BlowupReport b = blowup_check(R);
        ok = ok && b.fiber_size == 1 && b.ok();
        QuotientRing Q = quotient_by(R, J);
        for (std::size_t a = 0; a < R->size() && ok; ++a)
            ok = Q.projection[a] == a;
    }
    std::ostringstream os;
    os << "Z12, T2(GF(2)) with |J|=2; " << semisimple << " semisimple rings project identically";
    detail = os.str();
    return ok && semisimple > 0;
}

// 7. T5 classification holds with zero exceptions across the catalog.
bool crit_t5(std::string& detail) {
    Catalog cat = default_catalog();
    std::size_t applicable = 0;
    bool ok = true;
    std::ostringstream bad;
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        TheoremReport rep = check_T5(R);
        if (rep.verdict == "inapplicable") continue;
        ++applicable;
        if (rep.verdict != "pass") {
            ok = false;
            bad << e.label << " ";
        }
    }
    std::ostringstream os;
    os << applicable << " complete-multipartite cores, zero exceptions";
    if (!ok) os << " failing: " << bad.str();
    detail = os.str();
    return ok && applicable > 0;
}

// 8. T7 equivalence across the catalog, with the named positive and negative
//    instances.
bool crit_t7(std::string& detail) {
    Catalog cat = default_catalog();
    bool ok = true;
    std::set<std::string> passes;
    std::ostringstream bad;
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        TheoremReport rep = check_T7(R);
        if (rep.verdict == "fail") {
            ok = false;
            bad << e.label << " ";
        }
        if (rep.verdict == "pass") passes.insert(e.label);
    }
    for (const auto& want : {"Z6", "GF(2) x GF(3)", "GF(2) x GF(4)", "GF(2) x GF(5)"})
        if (!passes.count(want)) {
            ok = false;
            bad << "missing:" << want << " ";
        }
    for (const auto& neg : {"GF(3) x GF(3)", "Z30", "M2(GF(2))"})
        if (passes.count(neg)) {
            ok = false;
            bad << "unexpected:" << neg << " ";
        }
    std::ostringstream os;
    os << passes.size() << " positive instances";
    if (!ok) os << " problems: " << bad.str();
    detail = os.str();
    return ok;
}

// 9. Fast adjacency equals the naive (r,s) double loop on every pair of every
//    catalog ring with at most 64 elements.
bool crit_cross_oracle(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    Catalog cat = default_catalog();
    std::size_t rings = 0, pairs = 0;
    bool ok = true;
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        if (R->size() > 64) continue;
        ++rings;
        for (std::size_t a = 0; a < R->size() && ok; ++a)
            for (std::size_t b = a + 1; b < R->size(); ++b) {
                ++pairs;
                if (adjacent(*R, Elem(a), Elem(b)) !=
                    oracle::naive_adjacent(*R, Elem(a), Elem(b))) {
                    ok = false;
                    break;
                }
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << rings << " rings, " << pairs << " pairs (" << secs << " s)";
    detail = os.str();
    return ok;
}

// 10. Two consecutive full runs serialize to byte-identical reports.
bool crit_determinism(std::string& detail) {
    std::string a = reports_to_json(run_catalog(default_catalog(), "all")).dump(2);
    std::string b = reports_to_json(run_catalog(default_catalog(), "all")).dump(2);
    std::ostringstream os;
    os << a.size() << " bytes per report";
    detail = os.str();
    return !a.empty() && a == b && aggregate_exit_code(run_catalog(default_catalog(), "all")) == 0;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"Remark 6 reproduction for q in {2,3,4,5}", crit_remark6},
        {"maximal left ideal count of M2(GF(q)) is q+1", crit_lemma42},
        {"Z_n coloring and chromatic number, n in [2,60]", crit_zn_coloring},
        {"constructive clique vs search oracle", crit_theorem2},
        {"counterexample fidelity in Z2 x Z2 x Z2", crit_counterexample},
        {"blow-up relation for Z12, T2(GF(2)) and semisimple rings", crit_blowup},
        {"T5 classification over the full catalog", crit_t5},
        {"T7 universal-vertex equivalence over the full catalog", crit_t7},
        {"fast adjacency equals naive double loop (|R| <= 64)", crit_cross_oracle},
        {"byte-identical reports across runs", crit_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2zu. %s — %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
