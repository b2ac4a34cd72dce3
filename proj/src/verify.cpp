#include "comax/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

namespace comax {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> labels_of(const FiniteRing& R, const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (Elem x : xs) out.push_back(R.render(x));
    return out;
}

template <class F>
TheoremReport timed_check(const std::string& id, const std::string& ring_label, F&& body) {
    TheoremReport rep;
    rep.theorem_id = id;
    rep.ring_label = ring_label;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(rep);
    } catch (const FalsificationError& e) {
        rep.verdict = "fail";
        rep.certificate["error"] = e.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// individual checks

TheoremReport check_T1a(const RingPtr& R) {
    return timed_check("T1a", R->label(), [&](TheoremReport& rep) {
        const FiniteRing& r = *R;
        const MaxIdealData& d = max_ideal_data(r);
        const std::size_t n = d.ideals.size();
        ComaxGraph core = build_graph(R, GraphVariant::core);

        // color each vertex by the least maximal ideal containing it
        std::vector<int> color(core.num_vertices(), -1);
        bool covered = true;
        for (std::size_t i = 0; i < core.num_vertices(); ++i) {
            for (std::size_t m = 0; m < n; ++m)
                if (d.ideals[m].test(core.vertices[i])) {
                    color[i] = static_cast<int>(m);
                    break;
                }
            if (color[i] < 0) covered = false;
        }
        bool proper = covered;
        std::optional<std::pair<Elem, Elem>> bad;
        for (std::size_t i = 0; i < core.num_vertices() && proper; ++i)
            for (std::size_t j = i + 1; j < core.num_vertices(); ++j)
                if (color[i] == color[j] && core.adjacent(i, j)) {
                    proper = false;
                    bad = {core.vertices[i], core.vertices[j]};
                    break;
                }

        // contrapositive of part (b): the core needs at least |Max(R)| colors
        ColoringResult chi = chromatic_number(core);
        bool lower_ok = core.num_vertices() == 0 || (chi.exact && chi.num_colors >= n);

        rep.verdict = proper && lower_ok ? "pass" : "fail";
        rep.certificate["max_left_ideals"] = n;
        rep.certificate["core_vertices"] = core.num_vertices();
        rep.certificate["coloring_proper"] = proper;
        rep.certificate["chromatic_number"] = chi.num_colors;
        rep.certificate["chromatic_at_least_max"] = lower_ok;
        ordered_json parts = ordered_json::array();
        for (std::size_t m = 0; m < n; ++m) {
            ordered_json part = ordered_json::array();
            for (std::size_t i = 0; i < core.num_vertices(); ++i)
                if (color[i] == static_cast<int>(m)) part.push_back(core.vertex_labels[i]);
            parts.push_back(std::move(part));
        }
        rep.certificate["parts"] = std::move(parts);
        if (bad) rep.certificate["witness"] = {r.render(bad->first), r.render(bad->second)};
    });
}

TheoremReport check_T2(const RingPtr& R) {
    return timed_check("T2", R->label(), [&](TheoremReport& rep) {
        const FiniteRing& r = *R;
        std::vector<LeftIdeal> ms = maximal_left_ideals(R);
        const std::size_t n = ms.size();
        rep.certificate["max_left_ideals"] = n;
        if (n < 2) {
            rep.verdict = "inapplicable";
            return;
        }
        rep.certificate["commutative"] = r.commutative();

        ComaxGraph core = build_graph(R, GraphVariant::core);
        CliqueCertificate search = max_clique(core);
        bool ok = search.members.size() >= n && verify_clique(r, search.members);
        rep.certificate["search_clique"] = labels_of(r, search.members);
        rep.certificate["clique_number"] = search.members.size();

        if (r.commutative()) {
            CliqueCertificate built = theorem2_clique(R, ms);  // throws on falsification
            ok = ok && built.members.size() == n && verify_clique(r, built.members);
            rep.certificate["constructive_clique"] = labels_of(r, built.members);

            // the naive pick x_i in m_i need not give a clique: exhibit the
            // non-adjacent pair e1 in m2\m1, e2 in m1\m2 when one exists
            if (n >= 3) {
                auto pick = [&](std::size_t skip) -> std::optional<Elem> {
                    std::vector<LeftIdeal> inside;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != skip) inside.push_back(ms[j]);
                    return avoidance_pick(R, inside, {ms[skip]});
                };
                auto e1 = pick(0);
                auto e2 = pick(1);
                if (e1 && e2) {
                    ordered_json naive;
                    naive["e1"] = r.render(*e1);
                    naive["e2"] = r.render(*e2);
                    naive["e1_in_m2_not_m1"] = ms[1].contains(*e1) && !ms[0].contains(*e1);
                    naive["e2_in_m1_not_m2"] = ms[0].contains(*e2) && !ms[1].contains(*e2);
                    naive["adjacent"] = adjacent(r, *e1, *e2);
                    rep.certificate["naive_pick_counterexample"] = std::move(naive);
                }
            }
        }
        rep.verdict = ok ? "pass" : "fail";
    });
}

TheoremReport check_CEX() {
    return timed_check("CEX", "Z2 x Z2 x Z2", [&](TheoremReport& rep) {
        RingPtr R = make_product({make_zmod(2), make_zmod(2), make_zmod(2)});
        const FiniteRing& r = *R;
        Elem e1 = r.encode({1, 0, 0});
        Elem e2 = r.encode({0, 1, 0});

        // m1, m2: elements whose first / second entry is zero
        DynBitset m1(r.size()), m2(r.size());
        for (std::size_t a = 0; a < r.size(); ++a) {
            auto t = r.decode(static_cast<Elem>(a));
            if (t[0] == 0) m1.set(a);
            if (t[1] == 0) m2.set(a);
        }
        LeftIdeal M1 = ideal_from_mask(R, std::move(m1), {});
        LeftIdeal M2 = ideal_from_mask(R, std::move(m2), {});

        bool e1_ok = M2.contains(e1) && !M1.contains(e1);
        bool e2_ok = M1.contains(e2) && !M2.contains(e2);
        bool nonadj = !adjacent(r, e1, e2);
        bool sane1 = adjacent(r, e1, r.encode({0, 1, 1}));
        bool sane2 = !adjacent(r, e1, r.encode({1, 0, 1}));

        rep.verdict = e1_ok && e2_ok && nonadj && sane1 && sane2 ? "pass" : "fail";
        rep.certificate["e1"] = r.render(e1);
        rep.certificate["e2"] = r.render(e2);
        rep.certificate["e1_in_m2_not_m1"] = e1_ok;
        rep.certificate["e2_in_m1_not_m2"] = e2_ok;
        rep.certificate["e1_e2_adjacent"] = !nonadj;
        rep.certificate["e1_adjacent_011"] = sane1;
        rep.certificate["e1_adjacent_101"] = !sane2;
    });
}

TheoremReport check_R4(const RingPtr& R) {
    return timed_check("R4", R->label(), [&](TheoremReport& rep) {
        BlowupReport b = blowup_check(R);
        rep.verdict = b.ok() ? "pass" : "fail";
        rep.certificate["fiber_size"] = b.fiber_size;
        rep.certificate["adjacency_transfer_ok"] = b.adjacency_transfer_ok;
        rep.certificate["fibers_independent_ok"] = b.fibers_independent_ok;
        rep.certificate["fiber_sizes_ok"] = b.fiber_sizes_ok;
        rep.certificate["quotient"] = b.quotient_label;
        rep.certificate["core_vertices"] = b.core_vertices;
        rep.certificate["quotient_core_vertices"] = b.quotient_core_vertices;
        // with a nontrivial radical the vertex counts differ, so the displayed
        // relation is a blow-up, not a literal graph isomorphism
        rep.certificate["literal_graph_isomorphism"] = b.fiber_size == 1;
        if (b.witness_on_failure) {
            rep.certificate["witness"] = {R->render(b.witness_on_failure->first),
                                          R->render(b.witness_on_failure->second)};
        }
    });
}

TheoremReport check_T5(const RingPtr& R) {
    return timed_check("T5", R->label(), [&](TheoremReport& rep) {
        std::vector<LeftIdeal> ms = maximal_left_ideals(R);
        ComaxGraph core = build_graph(R, GraphVariant::core);
        auto cm = is_complete_multipartite(core);
        bool applicable = cm.has_value() && cm->parts.size() >= 2 && ms.size() >= 2;
        rep.certificate["max_left_ideals"] = ms.size();
        rep.certificate["complete_multipartite"] = cm.has_value() && core.num_vertices() > 0;
        if (!applicable) {
            rep.verdict = "inapplicable";
            return;
        }
        const std::size_t n = cm->parts.size();
        rep.certificate["parts"] = n;
        // a complete n-partite core forces exactly n maximal left ideals
        bool count_ok = ms.size() == n;
        rep.certificate["max_ideal_count_equals_parts"] = count_ok;

        WedderburnReport wr = wedderburn_report(R);  // throws on falsification
        ordered_json comps = ordered_json::array();
        for (const auto& c : wr.components) comps.push_back({c.n, c.q});
        rep.certificate["wedderburn"] = std::move(comps);

        bool two_fields = n == 2 && wr.components.size() == 2 &&
                          wr.components[0].n == 1 && wr.components[1].n == 1;
        bool matrix2 = wr.components.size() == 1 && wr.components[0].n == 2 &&
                       n == wr.components[0].q + 1;
        rep.certificate["branch"] = two_fields   ? "two_division_rings"
                                    : matrix2    ? "matrix_2x2"
                                                 : "none";

        LeftIdeal J = jacobson_radical(R);
        bool inter_ok = true;
        for (std::size_t i = 0; i < ms.size() && inter_ok; ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j)
                if (!((ms[i].mask & ms[j].mask) == J.mask)) {
                    inter_ok = false;
                    break;
                }
        rep.certificate["pairwise_intersections_equal_radical"] = inter_ok;

        rep.verdict =
            ((two_fields != matrix2) && count_ok && inter_ok && wr.consistent) ? "pass" : "fail";
    });
}

TheoremReport check_R6(unsigned q) {
    return timed_check("R6", "M2(GF(" + std::to_string(q) + "))", [&](TheoremReport& rep) {
        unsigned p = 0, e = 0;
        if (!is_prime_power(q, &p, &e))
            throw InvalidSpecError("R6: q must be a prime power");
        RingPtr M = make_matrix_ring(make_gf(p, e), 2);
        const FiniteRing& m = *M;
        std::vector<LeftIdeal> ms = maximal_left_ideals(M);
        ComaxGraph core = build_graph(M, GraphVariant::core);
        auto cm = is_complete_multipartite(core);

        bool parts_ok = cm.has_value() && cm->parts.size() == q + 1;
        bool sizes_ok = parts_ok;
        if (parts_ok)
            for (const auto& part : cm->parts)
                if (part.size() != std::size_t(q) * q - 1) sizes_ok = false;

        // parts must be exactly the punctured maximal ideals m \ {0}
        bool parts_match = parts_ok && ms.size() == q + 1;
        if (parts_match) {
            std::set<std::vector<Elem>> part_sets, ideal_sets;
            for (const auto& part : cm->parts) {
                std::vector<Elem> es;
                for (std::size_t i : part) es.push_back(core.vertices[i]);
                std::sort(es.begin(), es.end());
                part_sets.insert(std::move(es));
            }
            for (const auto& I : ms) {
                std::vector<Elem> es;
                for (Elem x : I.elements)
                    if (x != FiniteRing::zero) es.push_back(x);
                ideal_sets.insert(std::move(es));
            }
            parts_match = part_sets == ideal_sets;
        }

        // every nonzero element of a maximal ideal generates it
        bool principal_ok = true;
        for (const auto& I : ms)
            for (Elem x : I.elements) {
                if (x == FiniteRing::zero) continue;
                if (!(m.principal_row(x) == I.mask)) {
                    principal_ok = false;
                    break;
                }
            }

        std::vector<LeftIdeal> explicit_ideals = remark6_maximal_ideals(q);  // self-checking

        rep.verdict =
            parts_ok && sizes_ok && parts_match && principal_ok && explicit_ideals.size() == q + 1
                ? "pass"
                : "fail";
        rep.certificate["q"] = q;
        rep.certificate["vertices"] = core.num_vertices();
        rep.certificate["edges"] = core.edge_count();
        rep.certificate["parts"] = cm ? cm->parts.size() : 0;
        rep.certificate["part_size"] = std::size_t(q) * q - 1;
        rep.certificate["parts_are_punctured_ideals"] = parts_match;
        rep.certificate["nonzero_elements_generate"] = principal_ok;
        rep.certificate["explicit_ideals"] = explicit_ideals.size();
    });
}

TheoremReport check_T7(const RingPtr& R) {
    return timed_check("T7", R->label(), [&](TheoremReport& rep) {
        const FiniteRing& r = *R;
        std::vector<LeftIdeal> ms = maximal_left_ideals(R);
        rep.certificate["max_left_ideals"] = ms.size();
        if (ms.size() < 2) {
            rep.verdict = "inapplicable";
            return;
        }
        ComaxGraph core = build_graph(R, GraphVariant::core);
        UniversalVertexReport uv = universal_vertices(core);
        rep.certificate["universal_vertices"] = labels_of(r, uv.universal);

        // is R isomorphic to Z2 x GF(q) for q = |R|/2?
        bool of_form = false;
        std::string form_label;
        IsoResult iso;
        unsigned p = 0, e = 0;
        if (r.size() % 2 == 0 && is_prime_power(static_cast<unsigned>(r.size() / 2), &p, &e)) {
            RingPtr target = make_product({make_zmod(2), make_gf(p, e)});
            form_label = target->label();
            iso = ring_isomorphic(R, target);
            if (iso.verdict == IsoVerdict::unknown)
                throw FalsificationError("T7: isomorphism search exhausted its budget on " +
                                         r.label());
            of_form = iso.verdict == IsoVerdict::isomorphic;
        }
        rep.certificate["z2_field_form"] = of_form;
        if (!form_label.empty()) rep.certificate["candidate_form"] = form_label;

        if (uv.universal.empty()) {
            // converse: the Z2 x GF(q) form must produce a universal vertex
            rep.verdict = of_form ? "fail" : "inapplicable";
            return;
        }

        LeftIdeal J = jacobson_radical(R);
        bool j_zero = J.size() == 1;
        bool rx_ok = true, idem_ok = true;
        for (Elem x : uv.universal) {
            const DynBitset& rx = r.principal_row(x);
            if (!(rx.count() == 2 && rx.test(FiniteRing::zero) && rx.test(x))) rx_ok = false;
            if (r.mul(x, x) != x) idem_ok = false;
        }
        rep.certificate["radical_zero"] = j_zero;
        rep.certificate["rx_equals_zero_x"] = rx_ok;
        rep.certificate["x_squared_equals_x"] = idem_ok;
        rep.verdict = j_zero && rx_ok && idem_ok && of_form ? "pass" : "fail";
    });
}

// ---------------------------------------------------------------------------
// catalog

namespace {

CatalogEntry spec_entry(const std::string& spec, std::string label = "") {
    CatalogEntry e;
    e.spec = spec;
    e.label = label.empty() ? spec : std::move(label);
    e.build = [spec] { return build_ring(spec); };
    return e;
}

}  // namespace

Catalog default_catalog() {
    Catalog cat;
    for (unsigned n = 2; n <= 60; ++n) cat.entries.push_back(spec_entry("Z" + std::to_string(n)));

    const unsigned qs[] = {2, 3, 4, 5};
    for (unsigned q : qs) cat.entries.push_back(spec_entry("GF(" + std::to_string(q) + ")"));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
            cat.entries.push_back(spec_entry("GF(" + std::to_string(qs[i]) + ") x GF(" +
                                             std::to_string(qs[j]) + ")"));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
            for (std::size_t k = j; k < 4; ++k)
                cat.entries.push_back(
                    spec_entry("GF(" + std::to_string(qs[i]) + ") x GF(" + std::to_string(qs[j]) +
                               ") x GF(" + std::to_string(qs[k]) + ")"));
    for (unsigned q : qs)
        cat.entries.push_back(spec_entry("M2(GF(" + std::to_string(q) + "))"));

    for (unsigned q : {2u, 3u}) {
        CatalogEntry e;
        e.label = "T2(GF(" + std::to_string(q) + "))";
        e.spec = "table:(built-in upper-triangular 2x2 over GF(" + std::to_string(q) + "))";
        e.build = [q] { return make_t2(q); };
        cat.entries.push_back(std::move(e));
    }

    cat.entries.push_back(spec_entry("Z2 x Z2 x Z2"));
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpecError("catalog: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpecError(std::string("catalog: invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidSpecError("catalog: expected a JSON array");
    Catalog cat;
    for (const auto& item : j) {
        if (item.is_string()) {
            cat.entries.push_back(spec_entry(item.get<std::string>()));
        } else if (item.is_object() && item.contains("spec")) {
            std::string label =
                item.contains("label") ? item["label"].get<std::string>() : std::string{};
            cat.entries.push_back(spec_entry(item["spec"].get<std::string>(), label));
        } else {
            throw InvalidSpecError("catalog: entries must be spec strings or {label, spec}");
        }
    }
    std::set<std::string> labels;
    for (const auto& e : cat.entries)
        if (!labels.insert(e.label).second)
            throw InvalidSpecError("catalog: duplicate label " + e.label);
    return cat;
}

std::vector<TheoremReport> run_catalog(const Catalog& catalog, const std::string& theorem) {
    static const std::vector<std::string> known = {"T1a", "T2", "R4", "T5", "R6", "T7", "CEX"};
    if (theorem != "all" && std::find(known.begin(), known.end(), theorem) == known.end())
        throw InvalidSpecError("unknown theorem id: " + theorem);
    auto selected = [&](const std::string& id) { return theorem == "all" || theorem == id; };

    std::vector<RingPtr> rings;
    rings.reserve(catalog.entries.size());
    std::vector<std::string> labels;
    for (const auto& e : catalog.entries) {
        RingPtr R = e.build();
        rings.push_back(R);
        labels.push_back(e.label);
    }

    std::vector<TheoremReport> out;
    auto run_per_ring = [&](const std::string& id, auto&& check) {
        if (!selected(id)) return;
        for (std::size_t i = 0; i < rings.size(); ++i) {
            TheoremReport rep = check(rings[i]);
            rep.ring_label = labels[i];
            out.push_back(std::move(rep));
        }
    };

    run_per_ring("T1a", [](const RingPtr& R) { return check_T1a(R); });
    run_per_ring("T2", [](const RingPtr& R) { return check_T2(R); });
    run_per_ring("R4", [](const RingPtr& R) { return check_R4(R); });
    run_per_ring("T5", [](const RingPtr& R) { return check_T5(R); });
    if (selected("R6")) {
        for (std::size_t i = 0; i < rings.size(); ++i) {
            const FiniteRing& r = *rings[i];
            if (r.codec_kind() == CodecKind::matrix && r.matrix_dim() == 2 &&
                r.parts()[0]->codec_kind() == CodecKind::poly) {
                TheoremReport rep = check_R6(static_cast<unsigned>(r.parts()[0]->size()));
                rep.ring_label = labels[i];
                out.push_back(std::move(rep));
            } else {
                TheoremReport rep;
                rep.theorem_id = "R6";
                rep.ring_label = labels[i];
                rep.verdict = "inapplicable";
                out.push_back(std::move(rep));
            }
        }
    }
    run_per_ring("T7", [](const RingPtr& R) { return check_T7(R); });
    if (selected("CEX")) out.push_back(check_CEX());
    return out;
}

nlohmann::ordered_json reports_to_json(const std::vector<TheoremReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["theorem_id"] = r.theorem_id;
        j["ring_label"] = r.ring_label;
        j["verdict"] = r.verdict;
        j["certificate"] = r.certificate;
        arr.push_back(std::move(j));
    }
    return arr;
}

int aggregate_exit_code(const std::vector<TheoremReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == "fail") return 1;
    return 0;
}

}  // namespace comax
