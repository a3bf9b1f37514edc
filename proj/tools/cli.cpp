#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphpoly/classic.hpp"
#include "graphpoly/hankel.hpp"
#include "graphpoly/harary.hpp"
#include "graphpoly/limits.hpp"
#include "graphpoly/properties.hpp"
#include "graphpoly/verify.hpp"
#include "graphpoly/xi.hpp"

namespace graphpoly::cli {

namespace {

struct GraphSource {
    std::string graph6;
    std::string edges_file;
    std::string named;
};

MultiGraph load_graph(const GraphSource& src) {
    const int given = !src.graph6.empty() + !src.edges_file.empty() + !src.named.empty();
    if (given != 1) throw CLI::ValidationError("graph", "give exactly one of --graph6, --edges, --named");
    if (!src.graph6.empty()) return parse_graph6(src.graph6);
    if (!src.named.empty()) return build_named(parse_named(src.named));
    std::ifstream in(src.edges_file);
    if (!in) throw ParseError("cannot read edge list file " + src.edges_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

/// Polynomial selector -> evaluator.
GraphPolynomial polynomial_by_kind(const std::string& kind) {
    auto harary_of = [](GraphProperty p) -> GraphPolynomial {
        return [p](const MultiGraph& g) { return harary_polynomial(p, g).poly; };
    };
    if (kind.rfind("harary:", 0) == 0) return harary_of(parse_property(kind.substr(7)));
    if (kind == "adjoint") return harary_of(properties::complete());
    if (kind == "convex") return harary_of(properties::connected());
    if (kind == "chromatic") return chromatic_dc;
    if (kind == "tutte") return tutte_statesum;
    if (kind == "xi") return xi_statesum;
    if (kind == "matching") return [](const MultiGraph& g) { return matching_polys(g).generating; };
    if (kind == "matching-defect") return [](const MultiGraph& g) { return matching_polys(g).defect; };
    if (kind == "independence")
        return [](const MultiGraph& g) { return subset_generating_poly(subset_predicates::independent(), g); };
    if (kind == "domination")
        return [](const MultiGraph& g) { return subset_generating_poly(subset_predicates::dominating(), g); };
    if (kind == "char") return [](const MultiGraph& g) { return spectrum_char_poly(g, SpectralMatrix::adjacency); };
    if (kind == "laplacian")
        return [](const MultiGraph& g) { return spectrum_char_poly(g, SpectralMatrix::laplacian); };
    throw ParseError("unknown polynomial kind: " + kind);
}

std::string graph_label(const MultiGraph& g) {
    return g.is_simple() && g.order() <= 62 ? write_graph6(g) : write_edge_list(g);
}

void add_graph_options(CLI::App* app, GraphSource& src) {
    app->add_option("--graph6", src.graph6, "graph in graph6 format");
    app->add_option("--edges", src.edges_file, "file with an edge list: \"n m\" then m lines \"u v\"");
    app->add_option("--named", src.named, "named graph: K4, E3, P3, C4, K2,3, M3, K1+K2, K1j(K2+K1)");
}

void add_format_option(CLI::App* app, std::string& format) {
    app->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
}

// ---------------------------------------------------------------- commands

int cmd_poly(const GraphSource& src, const std::string& kind, const std::string& format, std::ostream& out) {
    const MultiGraph g = load_graph(src);
    const MPoly p = polynomial_by_kind(kind)(g);
    if (format == "json") {
        nlohmann::json j = {{"graph", graph_label(g)}, {"kind", kind}, {"text", p.to_string()}, {"terms", p.to_json()}};
        out << j.dump() << "\n";
    } else {
        out << p.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, std::ostream& out) {
    const auto reports = run_suite(suite);
    if (format == "json") {
        out << reports_to_json(suite, reports).dump(2) << "\n";
    } else {
        out << reports_to_text(reports);
    }
    return all_pass(reports) ? 0 : 1;
}

std::vector<MultiGraph> family_members(const std::string& tag, int size) {
    static const std::map<std::string, Family> tags = {{"K", Family::complete}, {"E", Family::edgeless},
                                                       {"P", Family::path},     {"C", Family::cycle},
                                                       {"M", Family::matching}};
    const auto it = tags.find(tag);
    if (it == tags.end()) throw ParseError("unknown family: " + tag);
    std::vector<MultiGraph> out;
    const int first = it->second == Family::cycle ? 3 : 1;
    for (int i = first; i < first + size; ++i) out.push_back(build_named({it->second, i, 0}));
    return out;
}

int cmd_rank(const std::string& kind, const std::string& op_name, const std::string& fam, int size,
             const std::string& at, const std::string& format, std::ostream& out) {
    const Combine op = op_name == "join" ? Combine::join : Combine::disjoint_union;
    const auto graphs = family_members(fam, size);
    const auto section = hankel_section(polynomial_by_kind(kind), op, graphs);
    const int rank = rank_exact(section);
    std::optional<std::vector<std::vector<Rational>>> evaluated;
    if (!at.empty()) {
        Rational point;
        if (point.set_str(at, 10) != 0) throw ParseError("bad evaluation point: " + at);
        point.canonicalize();
        evaluated = evaluate_section(section, point);
    }
    if (format == "json") {
        nlohmann::json j = {{"poly", kind},   {"op", to_string(op)},          {"family", fam},
                            {"size", size},   {"rank", rank},                 {"section", section_to_json(section)}};
        if (evaluated) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : *evaluated) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& v : row) r.push_back(rational_to_json(v));
                rows.push_back(r);
            }
            j["evaluated_at"] = at;
            j["evaluated"] = rows;
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << "poly    " << kind << "\n"
        << "op      " << to_string(op) << "\n"
        << "family  " << fam << " (" << graphs.size() << " graphs)\n";
    if (evaluated) {
        out << "section at x = " << at << "\n";
        std::size_t width = 1;
        for (const auto& row : *evaluated)
            for (const auto& v : row) width = std::max(width, v.get_str().size());
        for (const auto& row : *evaluated) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? " " : "  ") << std::setw(static_cast<int>(width)) << row[c].get_str();
            out << "\n";
        }
    }
    out << "rank    " << rank << "\n";
    return 0;
}

int cmd_classify(const std::string& prop, int n_max, const std::string& format, std::ostream& out) {
    const GraphProperty p = parse_property(prop);
    const Classification c = classify(p, n_max);
    const std::pair<const char*, const ClosureReport*> rows[] = {
        {"hereditary", &c.hereditary}, {"monotone", &c.monotone}, {"additive", &c.additive},
        {"minor-closed", &c.minor_closed}};
    auto witness = [](const Counterexample& ce) {
        std::string s = graph_label(ce.member) + " " + ce.operation;
        if (ce.partner) s += " " + graph_label(*ce.partner);
        return s + " -> " + graph_label(ce.result);
    };
    if (format == "json") {
        nlohmann::json j = {{"property", p.name()}, {"nmax", n_max}};
        for (const auto& [name, r] : rows) {
            nlohmann::json e = {{"holds", r->holds}};
            if (r->counterexample) e["counterexample"] = witness(*r->counterexample);
            j[name] = e;
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << "property  " << p.name() << " (orders 1.." << n_max << ")\n";
    for (const auto& [name, r] : rows) {
        out << std::left << std::setw(14) << name << (r->holds ? "yes" : "no");
        if (r->counterexample) out << "   " << witness(*r->counterexample);
        out << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graph polynomials: Harary polynomials, xi, Tutte and friends"};
    app.require_subcommand(1);

    GraphSource src;
    std::string kind;
    std::string format = "text";
    auto* poly = app.add_subcommand("poly", "compute a polynomial of one graph");
    add_graph_options(poly, src);
    poly->add_option("--kind", kind,
                     "harary:<property>, chromatic, tutte, xi, matching, matching-defect, independence, "
                     "domination, char, laplacian, adjoint, convex")
        ->required();
    add_format_option(poly, format);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run reproduction checks");
    verify->add_option("--suite", suite, "suite name or all");
    add_format_option(verify, format);

    std::string op = "union";
    std::string fam = "K";
    int size = 4;
    std::string at;
    auto* rank = app.add_subcommand("rank", "rank of a connection-matrix section");
    rank->add_option("--poly", kind, "polynomial selector, as for poly --kind")->required();
    rank->add_option("--op", op, "union or join")->check(CLI::IsMember({"union", "join"}));
    rank->add_option("--family", fam, "K, E, P, C or M");
    rank->add_option("--size", size, "section size")->check(CLI::Range(1, 12));
    rank->add_option("--at", at, "also print the section evaluated at this rational x");
    add_format_option(rank, format);

    std::string prop;
    int n_max = 5;
    auto* classify_cmd = app.add_subcommand("classify", "bounded closure checks for a property");
    classify_cmd->add_option("--prop", prop, "edgeless, complete, connected, mcc:<t>, induced-free:<g>, "
                                             "subgraph-free:<g>, du:<g>")
        ->required();
    classify_cmd->add_option("--nmax", n_max, "largest order checked")->check(CLI::Range(1, 6));
    add_format_option(classify_cmd, format);

    try {
        set_limits(limits_from_environment());
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*poly) return cmd_poly(src, kind, format, out);
        if (*verify) return cmd_verify(suite, format, out);
        if (*rank) return cmd_rank(kind, op, fam, size, at, format, out);
        return cmd_classify(prop, n_max, format, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const IdentityViolation& e) {
        err << "identity violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace graphpoly::cli
