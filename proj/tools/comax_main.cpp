// comax: build finite rings, inspect their ideal structure, export comaximal
// graphs, and run the theorem verification suite over a ring catalog.
//
// Exit codes: 0 all pass / inapplicable, 1 any check failed, 2 usage or spec
// error, 3 size cap exceeded. COMAX_SIZE_CAP overrides the element cap.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "comax/verify.hpp"

namespace {

using namespace comax;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidSpecError("cannot open output file " + path);
    out << text;
}

std::string poly_string(const std::vector<unsigned>& coeffs) {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += '+';
        if (i == 0) {
            s += std::to_string(coeffs[i]);
        } else {
            if (coeffs[i] > 1) s += std::to_string(coeffs[i]);
            s += 'x';
            if (i > 1) s += '^' + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int cmd_ring_info(const std::string& spec) {
    RingPtr R = build_ring(spec);
    const FiniteRing& r = *R;
    std::cout << "ring:              " << r.label() << "\n";
    std::cout << "size:              " << r.size() << "\n";
    if (r.codec_kind() == CodecKind::poly && r.poly_degree() > 1)
        std::cout << "modulus:           " << poly_string(r.poly_modulus()) << "\n";
    std::cout << "characteristic:    " << additive_order(r, r.one()) << "\n";
    std::cout << "commutative:       " << (r.commutative() ? "yes" : "no");
    if (auto w = r.noncommuting_pair())
        std::cout << "  (e.g. " << r.render(w->first) << ", " << r.render(w->second) << ")";
    std::cout << "\n";
    std::cout << "units:             " << r.unit_mask().count() << "\n";
    std::cout << "central idempotents: " << central_idempotents(r).size() << "\n";
    LeftIdeal J = jacobson_radical(R);
    std::cout << "maximal left ideals: " << max_ideal_data(r).ideals.size() << "\n";
    std::cout << "radical size:      " << J.size() << "\n";
    WedderburnReport wr = wedderburn_report(R);
    std::cout << "R/J components:    ";
    for (std::size_t i = 0; i < wr.components.size(); ++i) {
        const auto& c = wr.components[i];
        if (i) std::cout << " x ";
        if (c.n == 1)
            std::cout << "GF(" << c.q << ")";
        else
            std::cout << "M" << c.n << "(GF(" << c.q << "))";
    }
    std::cout << "\n";
    return 0;
}

int cmd_ring_graph(const std::string& spec, const std::string& variant,
                   const std::string& format, const std::string& out_path) {
    RingPtr R = build_ring(spec);
    ComaxGraph G = build_graph(R, graph_variant_from_string(variant));
    if (format == "dot") {
        write_output(export_dot(G), out_path);
    } else if (format == "json") {
        write_output(export_json(G).dump(2) + "\n", out_path);
    } else {
        throw InvalidSpecError("unknown graph format: " + format);
    }
    return 0;
}

int cmd_ring_ideals(const std::string& spec) {
    RingPtr R = build_ring(spec);
    const FiniteRing& r = *R;
    std::vector<LeftIdeal> ms = maximal_left_ideals(R);
    std::cout << "maximal left ideals of " << r.label() << ": " << ms.size() << "\n";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::cout << "  m" << i + 1 << " (size " << ms[i].size()
                  << (is_two_sided(ms[i]) ? ", two-sided" : ", left only") << "): {";
        for (std::size_t j = 0; j < ms[i].elements.size(); ++j) {
            if (j) std::cout << ", ";
            std::cout << r.render(ms[i].elements[j]);
        }
        std::cout << "}\n";
    }
    LeftIdeal J = jacobson_radical(R);
    std::cout << "radical (size " << J.size() << "): {";
    for (std::size_t j = 0; j < J.elements.size(); ++j) {
        if (j) std::cout << ", ";
        std::cout << r.render(J.elements[j]);
    }
    std::cout << "}\n";
    return 0;
}

int cmd_ring_structure(const std::string& spec) {
    RingPtr R = build_ring(spec);
    const FiniteRing& r = *R;
    WedderburnReport wr = wedderburn_report(R);
    std::cout << "ring:       " << r.label() << " (size " << r.size() << ")\n";
    std::cout << "radical:    " << wr.radical_size << " elements\n";
    std::cout << "quotient:   " << wr.quotient_label << " (size " << r.size() / wr.radical_size
              << ")\n";
    std::cout << "components:\n";
    for (const auto& c : wr.components) {
        if (c.n == 1)
            std::cout << "  GF(" << c.q << ")";
        else
            std::cout << "  M" << c.n << "(GF(" << c.q << "))";
        std::cout << "  [size " << c.cardinality << ", " << c.max_left_ideal_count
                  << " maximal left ideal(s)]\n";
    }
    std::cout << "consistent: " << (wr.consistent ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const std::string& theorem, const std::string& catalog_path,
               const std::string& json_path) {
    Catalog cat = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
    std::vector<TheoremReport> reports = run_catalog(cat, theorem);

    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& rep : reports) {
        if (rep.verdict == "pass")
            ++pass;
        else if (rep.verdict == "fail")
            ++fail;
        else
            ++na;
        std::cout << std::left << std::setw(5) << rep.theorem_id << std::setw(26)
                  << rep.ring_label << std::setw(14) << rep.verdict << std::fixed
                  << std::setprecision(1) << rep.elapsed_ms << " ms\n";
        if (rep.verdict == "fail")
            std::cout << "      certificate: " << rep.certificate.dump() << "\n";
    }
    std::cout << reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << na
              << " inapplicable\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw InvalidSpecError("cannot open report file " + json_path);
        out << reports_to_json(reports).dump(2) << "\n";
    }
    return aggregate_exit_code(reports);
}

int cmd_catalog_list(const std::string& catalog_path) {
    Catalog cat = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
    for (const auto& e : cat.entries) {
        RingPtr R = e.build();
        std::cout << std::left << std::setw(26) << e.label << std::setw(6) << R->size() << e.spec
                  << "\n";
    }
    std::cout << cat.entries.size() << " entries\n";
    return 0;
}

int cmd_catalog_gen_tables(const std::string& dir) {
    for (unsigned q : {2u, 3u}) {
        std::string path = dir + "/t2_gf" + std::to_string(q) + ".json";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InvalidSpecError("cannot open " + path);
        out << t2_table_json_text(q) << "\n";
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring comaximal graph toolkit"};
    app.require_subcommand(1);

    std::string spec, variant = "core", format = "json", out_path;
    std::string theorem = "all", catalog_path, json_path, tables_dir = ".";

    auto* ring = app.add_subcommand("ring", "construct and inspect a single ring");
    ring->require_subcommand(1);
    auto* info = ring->add_subcommand("info", "summary of a ring");
    info->add_option("spec", spec, "ring spec, e.g. Z30, M2(GF(3)), Z2 x GF(4)")->required();
    auto* graph = ring->add_subcommand("graph", "export a comaximal graph");
    graph->add_option("spec", spec)->required();
    graph->add_option("--variant", variant, "core|full|units|nonunits")
        ->check(CLI::IsMember({"core", "full", "units", "nonunits"}));
    graph->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("-o,--output", out_path, "output file (default stdout)");
    auto* ideals = ring->add_subcommand("ideals", "maximal left ideals and the radical");
    ideals->add_option("spec", spec)->required();
    auto* structure = ring->add_subcommand("structure", "semisimple decomposition of R/J");
    structure->add_option("spec", spec)->required();

    auto* verify = app.add_subcommand("verify", "run theorem checks over a catalog");
    verify->add_option("--theorem", theorem, "T1a|T2|R4|T5|R6|T7|CEX|all");
    verify->add_option("--catalog", catalog_path, "catalog JSON file (default: built-in)");
    verify->add_option("--json", json_path, "write the report as JSON");

    auto* catalog = app.add_subcommand("catalog", "catalog utilities");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog entries");
    list->add_option("--catalog", catalog_path, "catalog JSON file (default: built-in)");
    auto* gen = catalog->add_subcommand("gen-tables", "write the T2(GF(q)) table files");
    gen->add_option("-o,--output-dir", tables_dir, "target directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits cleanly
    }

    try {
        if (*info) return cmd_ring_info(spec);
        if (*graph) return cmd_ring_graph(spec, variant, format, out_path);
        if (*ideals) return cmd_ring_ideals(spec);
        if (*structure) return cmd_ring_structure(spec);
        if (*verify) return cmd_verify(theorem, catalog_path, json_path);
        if (*list) return cmd_catalog_list(catalog_path);
        if (*gen) return cmd_catalog_gen_tables(tables_dir);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FalsificationError& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
