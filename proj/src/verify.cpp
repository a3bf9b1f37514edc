#include "graphpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "graphpoly/classic.hpp"
#include "graphpoly/harary.hpp"
#include "graphpoly/hankel.hpp"
#include "graphpoly/limits.hpp"
#include "graphpoly/xi.hpp"

namespace graphpoly {

namespace {

MultiGraph named(std::string_view text) { return build_named(parse_named(text)); }

Rational at(const MPoly& p, long v) { return p.eval({{Var::x, Rational(v)}}); }

std::string str(const Rational& q) { return q.get_str(); }

std::string str(const std::vector<Integer>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + "]";
}

std::string label(const MultiGraph& g) { return g.is_simple() ? write_graph6(g) : write_edge_list(g); }

std::vector<GraphProperty> builtin_properties() {
    return {properties::edgeless(),
            properties::complete(),
            properties::connected(),
            properties::max_component_order(1),
            properties::max_component_order(2),
            properties::max_component_order(3),
            properties::induced_free(named("P3"), "P3"),
            properties::induced_free(named("K3"), "K3"),
            properties::induced_free(named("K1+K2"), "K1+K2"),
            properties::subgraph_free(named("P3"), "P3"),
            properties::subgraph_free(named("K3"), "K3"),
            properties::disjoint_union_of(named("K1"), "K1"),
            properties::disjoint_union_of(named("K2"), "K2"),
            properties::disjoint_union_of(named("P3"), "P3")};
}

const std::vector<MultiGraph>& corpus(int n_max) {
    static std::map<int, std::vector<MultiGraph>> cache;
    static std::mutex mu;
    const std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n_max);
    if (it == cache.end()) it = cache.emplace(n_max, enumerate_nonisomorphic(n_max)).first;
    return it->second;
}

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void exact(const std::string& id, const std::string& location, const std::string& expected,
               const std::string& provenance, const std::string& computed, std::string note = {}) {
        out_.push_back({name_ + "/" + id, location, expected, provenance, computed, expected == computed,
                        std::move(note)});
    }

    /// Printed value disagrees with the definition: pass when the computed value
    /// matches the definition-derived one.
    void erratum(const std::string& id, const std::string& location, const std::string& printed,
                 const std::string& derived, const std::string& computed, const std::string& why) {
        out_.push_back({name_ + "/" + id, location, printed, "PUBLISHED", computed, computed == derived,
                        "erratum-expected-mismatch: " + why + "; definition gives " + derived});
    }

    /// Aggregated agreement over many cases; the first disagreement goes in the note.
    class Tally {
    public:
        void record(bool ok, const std::string& what) {
            ++total_;
            if (ok) {
                ++agree_;
            } else if (first_.empty()) {
                first_ = what;
            }
        }
        long total_ = 0;
        long agree_ = 0;
        std::string first_;
    };

    void tally(const std::string& id, const std::string& location, const std::string& provenance,
               const Tally& t, std::string note = {}) {
        if (!t.first_.empty()) note = (note.empty() ? "" : note + "; ") + "first disagreement: " + t.first_;
        out_.push_back({name_ + "/" + id, location, "agree on " + std::to_string(t.total_) + " cases", provenance,
                        "agree on " + std::to_string(t.agree_) + " of " + std::to_string(t.total_) + " cases",
                        t.agree_ == t.total_ && t.total_ > 0, std::move(note)});
    }

    std::vector<VerdictReport> take() { return std::move(out_); }

private:
    std::string name_;
    std::vector<VerdictReport> out_;
};

MPoly harary(const GraphProperty& p, const MultiGraph& g) { return harary_polynomial(p, g).poly; }

MPoly adjacency(const MultiGraph& g) { return spectrum_char_poly(g, SpectralMatrix::adjacency); }
MPoly laplacian(const MultiGraph& g) { return spectrum_char_poly(g, SpectralMatrix::laplacian); }

// ---------------------------------------------------------------- suites

std::vector<VerdictReport> published_values() {
    Suite s("published-values");
    const MultiGraph c4 = named("C4");
    const MPoly x = X();
    const std::string spectral = "characteristic and Laplacian polynomials";
    s.exact("char-C4", spectral, ((x - MPoly(2L)) * x * x * (x + MPoly(2L))).to_string(), "PUBLISHED",
            adjacency(c4).to_string());
    s.exact("lap-C4", spectral, (x * (x - MPoly(4L)) * (x - MPoly(2L)).pow(2)).to_string(), "PUBLISHED",
            laplacian(c4).to_string());
    s.exact("char-C4-at-1", spectral, "-3", "PUBLISHED", str(at(adjacency(c4), 1)));
    s.exact("lap-C4-at-1", spectral, "-3", "PUBLISHED", str(at(laplacian(c4), 1)));
    s.exact("ind-C4", "independence polynomial", "1 + 4x + 2x^2", "PUBLISHED",
            subset_generating_poly(subset_predicates::independent(), c4).to_string());
    s.exact("dom-K2", "domination polynomial", "2x + x^2", "PUBLISHED",
            subset_generating_poly(subset_predicates::dominating(), named("K2")).to_string());

    const std::string ee = "P3-free colourings and edge elimination";
    const GraphProperty fr = properties::induced_free(named("P3"), "P3");
    s.exact("fr-P3-K1", ee, "x", "PUBLISHED", harary(fr, named("K1")).to_string());
    s.exact("fr-P3-K2", ee, "x^2", "PUBLISHED", harary(fr, named("K2")).to_string());
    s.exact("fr-P3-P3", ee, "-x + x^3", "PUBLISHED", harary(fr, named("P3")).to_string());
    s.exact("fr-P3-K1uK2", ee, "x^3", "PUBLISHED", harary(fr, named("K1+K2")).to_string());

    const std::string ca = "convex and adjoint polynomials";
    const MultiGraph k1k1 = named("E2");
    s.exact("convex-K1", ca, "x", "PUBLISHED", harary(properties::connected(), named("K1")).to_string());
    s.exact("adjoint-K1", ca, "x", "PUBLISHED", harary(properties::complete(), named("K1")).to_string());
    s.exact("convex-K1uK1", ca, "-x + x^2", "PUBLISHED", harary(properties::connected(), k1k1).to_string());
    s.exact("adjoint-K1uK1", ca, "-x + x^2", "PUBLISHED", harary(properties::complete(), k1k1).to_string());
    return s.take();
}

std::vector<VerdictReport> matching_erratum() {
    Suite s("matching-erratum");
    const std::string loc = "matching polynomials of C4";
    const auto m = matching_polys(named("C4"));
    s.exact("counts-C4", loc, "[1, 4, 2]", "TRIVIAL", str(m.counts));
    s.erratum("M-C4", loc, "4x + 2x^2", "1 + 4x + 2x^2", m.generating.to_string(),
              "printed value drops the empty matching m_0 = 1");
    s.erratum("mu-C4", loc, "1 + 4x + 2x^2", "2 - 4x^2 + x^4", m.defect.to_string(),
              "printed value repeats the generating polynomial");
    s.erratum("M-C4-at-1", loc, "6", "7", str(at(m.generating, 1)), "follows from the printed M(C4)");
    s.erratum("mu-C4-at-1", loc, "7", "-1", str(at(m.defect, 1)), "follows from the printed mu(C4)");
    const auto wm = not_harary_witness(m.generating);
    const auto wmu = not_harary_witness(m.defect);
    s.exact("M-not-harary", loc, "value at 1 outside {0, 1}", "PUBLISHED",
            wm.is_obstruction ? "value at 1 outside {0, 1}" : "value at 1 is " + str(wm.value_at_1),
            "conclusion holds with the definition-derived value " + str(wm.value_at_1));
    s.exact("mu-not-harary", loc, "value at 1 outside {0, 1}", "PUBLISHED",
            wmu.is_obstruction ? "value at 1 outside {0, 1}" : "value at 1 is " + str(wmu.value_at_1),
            "conclusion holds with the definition-derived value " + str(wmu.value_at_1));
    return s.take();
}

std::vector<VerdictReport> not_harary() {
    Suite s("not-harary");
    const std::string loc = "polynomials that are not Harary polynomials";
    auto verdict = [](const MPoly& p) {
        const auto w = not_harary_witness(p);
        return str(w.value_at_1) + (w.is_obstruction ? ", obstruction" : ", no obstruction");
    };
    const MultiGraph c4 = named("C4");
    const auto m = matching_polys(c4);
    s.exact("1-char-C4", loc, "-3, obstruction", "PUBLISHED", verdict(adjacency(c4)));
    s.exact("2-lap-C4", loc, "-3, obstruction", "PUBLISHED", verdict(laplacian(c4)));
    s.erratum("3-M-C4", loc, "6, obstruction", "7, obstruction", verdict(m.generating),
              "printed M(C4) drops m_0");
    s.erratum("4-mu-C4", loc, "7, obstruction", "-1, obstruction", verdict(m.defect),
              "printed mu(C4) repeats M(C4)");
    s.exact("5-ind-C4", loc, "7, obstruction", "PUBLISHED",
            verdict(subset_generating_poly(subset_predicates::independent(), c4)));
    s.exact("6-dom-K2", loc, "3, obstruction", "PUBLISHED",
            verdict(subset_generating_poly(subset_predicates::dominating(), named("K2"))));
    return s.take();
}

std::vector<VerdictReport> harary_chromatic() {
    Suite s("harary-chromatic");
    Suite::Tally t;
    for (const auto& g : corpus(6)) {
        t.record(harary(properties::edgeless(), g) == chromatic_dc(g), label(g));
    }
    s.tally("edgeless-vs-dc", "Edgeless colourings are proper colourings", "DERIVED", t,
            "all non-isomorphic graphs of order at most 6");
    return s.take();
}

std::vector<VerdictReport> harary_direct() {
    Suite s("harary-direct");
    for (const auto& p : builtin_properties()) {
        Suite::Tally t;
        for (const auto& g : corpus(6)) {
            const MPoly chi = harary(p, g);
            for (long k = 0; k <= 3; ++k) {
                t.record(at(chi, k) == Rational(count_colorings_direct(p, g, static_cast<int>(k))),
                         label(g) + " k=" + std::to_string(k));
            }
        }
        s.tally(p.name(), "partition counts against direct colouring counts", "DERIVED", t);
    }
    return s.take();
}

std::vector<VerdictReport> xi_oracle() {
    Suite s("xi-oracle");
    const std::string loc = "xi state sum and edge-elimination recursion";
    Suite::Tally simple;
    Suite::Tally desc;
    for (const auto& g : corpus(5)) {
        simple.record(xi_statesum(g) == xi_recursive(g), label(g));
        for (std::size_t e = 0; e < g.size(); ++e) {
            const auto el = edge_eliminations(g, e);
            for (const MultiGraph* h : {&el.minus, &el.contracted, &el.extracted}) {
                desc.record(xi_statesum(*h) == xi_recursive(*h), label(*h));
            }
        }
    }
    s.tally("corpus-n5", loc, "DERIVED", simple);
    s.tally("descendants-n5", loc, "DERIVED", desc, "one elimination step, multigraphs included");
    return s.take();
}

std::vector<VerdictReport> tutte_xi() {
    Suite s("tutte-xi");
    Suite::Tally t;
    for (const auto& g : corpus(5)) t.record(substitute_instance(g, XiInstance::tutte) == tutte_statesum(g), label(g));
    s.tally("corpus-n5", "Tutte polynomial as a substitution instance of xi", "DERIVED", t);
    return s.take();
}

std::vector<VerdictReport> matching_xi() {
    Suite s("matching-xi");
    const std::string loc = "matching polynomials as substitution instances of xi";
    Suite::Tally biv;
    Suite::Tally def;
    for (const auto& g : corpus(6)) {
        const auto m = matching_polys(g);
        MPoly expected;
        for (std::size_t i = 0; i < m.counts.size(); ++i) {
            expected += MPoly::monomial(m.counts[i], Exponents{static_cast<std::uint32_t>(g.order() - 2 * i),
                                                               static_cast<std::uint32_t>(i), 0, 0});
        }
        biv.record(substitute_instance(g, XiInstance::matching_bivariate) == expected, label(g));
        def.record(substitute_instance(g, XiInstance::matching_defect) == m.defect, label(g));
    }
    s.tally("bivariate-n6", loc, "DERIVED", biv);
    s.tally("defect-n6", loc, "DERIVED", def);
    return s.take();
}

std::vector<VerdictReport> facts() {
    Suite s("facts");
    const std::string loc = "basic facts on Harary polynomials";
    Suite::Tally value_at_1, f1, f2, f3, f4, f5;
    for (const auto& p : builtin_properties()) {
        const bool k1_in = p.holds(named("K1"));
        for (const auto& g : corpus(6)) {
            if (g.order() == 0) continue;
            const std::string what = p.name() + " on " + label(g);
            const auto r = harary_polynomial(p, g);
            const bool member = p.holds(g);
            const auto n = static_cast<std::size_t>(g.order());
            value_at_1.record(at(r.poly, 1) == (member ? 1 : 0), what);
            f1.record(at(r.poly, 0) == 0, what);
            f2.record(r.coeffs.at(1) == (member ? 1 : 0), what);
            if (k1_in) f3.record(r.coeffs.at(n) == 1, what);
            const bool monic_n = r.poly.degree(Var::x) == n &&
                                 r.poly.coefficient(Exponents{static_cast<std::uint32_t>(n), 0, 0, 0}) == 1;
            f4.record(monic_n == k1_in, what);
            bool down = true;
            for (long k = 1; k < static_cast<long>(n); ++k) {
                if (at(r.poly, k) != 0) continue;
                for (long l = 1; l < k; ++l) down = down && at(r.poly, l) == 0;
            }
            f5.record(down, what);
        }
    }
    s.tally("value-at-1", loc, "PUBLISHED", value_at_1);
    s.tally("i-no-constant-term", loc, "PUBLISHED", f1);
    s.tally("ii-b1", loc, "PUBLISHED", f2);
    s.tally("iii-bn-K1-members", loc, "PUBLISHED", f3,
            "stated for every property; b_n = 1 needs K1 in P, so only those properties are checked");
    s.tally("iv-monic", loc, "PUBLISHED", f4);
    s.tally("v-zeros-propagate-down", loc, "PUBLISHED", f5);
    const auto du = harary_polynomial(properties::disjoint_union_of(named("K2"), "K2"), named("K2"));
    s.erratum("iii-bn-without-K1", loc, "b_2 = 1", "b_2 = 0", "b_2 = " + du.coeffs.at(2).get_str(),
              "fails for du:K2 on K2 because K1 is not a member");
    return s.take();
}

std::vector<VerdictReport> multiplicativity() {
    Suite s("multiplicativity");
    const std::string loc = "Harary polynomials are not multiplicative";
    const MultiGraph k1 = named("K1");
    const MultiGraph k1k1 = named("E2");
    for (const auto& p : {properties::connected(), properties::complete()}) {
        const Rational whole = at(harary(p, k1k1), 1);
        const Rational part = at(harary(p, k1), 1);
        s.exact(p.name() + "-K1uK1", loc, "0 vs 1", "PUBLISHED", str(whole) + " vs " + str(part * part));
    }
    // hereditary P with a disconnected minimal forbidden induced subgraph H = H1 u H2
    for (const auto& p : {properties::induced_free(named("K1+K2"), "K1+K2"), properties::complete()}) {
        const std::string id = "split-" + p.name();
        if (!verified_hereditary(p)) {
            s.exact(id, loc, "hereditary", "DERIVED", "not verified hereditary");
            continue;
        }
        std::optional<MultiGraph> h;
        for (const auto& f : minimal_forbidden(p, Containment::induced, 4)) {
            if (!f.is_connected()) {
                h = f;
                break;
            }
        }
        if (!h) {
            s.exact(id, loc, "disconnected minimal forbidden graph", "DERIVED", "none up to order 4");
            continue;
        }
        const auto comps = h->components();
        VertexMask rest = 0;
        for (std::size_t i = 1; i < comps.size(); ++i) rest |= comps[i];
        const MultiGraph h1 = h->induced(comps[0]);
        const MultiGraph h2 = h->induced(rest);
        const std::string parts = std::string(p.holds(h1) && p.holds(h2) ? "parts in P" : "a part outside P");
        const Rational whole = at(harary(p, *h), 1);
        const Rational prod = at(harary(p, h1), 1) * at(harary(p, h2), 1);
        s.exact(id, loc, "parts in P; 0 vs 1", "PUBLISHED", parts + "; " + str(whole) + " vs " + str(prod),
                "H = " + label(*h));
    }
    return s.take();
}

std::string thresholds(const ZeroPattern& z) {
    std::string out;
    for (int k = 1; k <= z.k_max; ++k) {
        const auto t = z.threshold[k - 1];
        out += (k > 1 ? ", " : "") + (t ? std::to_string(*t) : std::string("none"));
    }
    return out;
}

std::string thresholds_of(int k_max, const std::function<int(int)>& first_zero, int i_max) {
    std::string out;
    for (int k = 1; k <= k_max; ++k) {
        const int t = first_zero(k);
        out += (k > 1 ? ", " : "") + (t <= i_max ? std::to_string(t) : std::string("none"));
    }
    return out;
}

std::vector<VerdictReport> zero_patterns() {
    Suite s("zero-pattern");
    const std::string loc = "zero thresholds on cliques and matchings";
    constexpr int i_max = 8;
    constexpr int k_max = 3;

    const auto edgeless = zero_pattern(properties::edgeless(), ZeroFamily::complete, i_max, k_max);
    s.exact("edgeless-K", loc, thresholds_of(k_max, [](int k) { return k + 1; }, i_max), "TRIVIAL",
            thresholds(edgeless), "least i with a zero, k = 1..3; zero iff i > k");

    const auto k3 = zero_pattern(properties::induced_free(named("K3"), "K3"), ZeroFamily::complete, i_max, k_max);
    s.exact("forb-K3-K", loc, thresholds_of(k_max, [](int k) { return 2 * k + 1; }, i_max), "DERIVED",
            thresholds(k3), "zero iff i > 2k; parts of K_i are cliques of order at most 2");
    s.erratum("forb-K3-K-printed", loc, thresholds_of(k_max, [](int k) { return 3 * k + 1; }, i_max),
              thresholds_of(k_max, [](int k) { return 2 * k + 1; }, i_max), thresholds(k3),
              "printed threshold i > hk with h = 3; measured i > (h-1)k");

    for (const auto& p : {properties::connected(), properties::complete()}) {
        const auto z = zero_pattern(p, ZeroFamily::matching, i_max, k_max);
        s.exact(p.name() + "-M", loc, thresholds_of(k_max, [](int k) { return k + 1; }, i_max), "DERIVED",
                thresholds(z), "zero iff n > k; parts of M_n have order at most 2");
        bool implied = true;
        for (int k = 1; k <= k_max; ++k)
            for (int n = 2 * k + 1; n <= i_max; ++n) implied = implied && z.zero[n - 1][k - 1];
        s.exact(p.name() + "-M-printed", loc, "zero for n > 2k", "PUBLISHED",
                implied ? "zero for n > 2k" : "nonzero for some n > 2k",
                "the printed bound is weaker than the measured n > k and is implied by it");
    }
    for (const auto* z : {&edgeless, &k3}) {
        s.exact(z->property + "-monotone", loc, "thresholds nondecreasing, zeros upward closed", "PUBLISHED",
                std::string(z->monotone ? "thresholds nondecreasing" : "thresholds not monotone") + ", " +
                    (z->upward_closed ? "zeros upward closed" : "zeros not upward closed"));
    }
    return s.take();
}

std::vector<MultiGraph> family(Family f, int m) {
    std::vector<MultiGraph> out;
    for (int i = 1; i <= m; ++i) out.push_back(build_named({f, i, 0}));
    return out;
}

std::vector<VerdictReport> rank_growth() {
    Suite s("rank");
    const std::string loc = "connection matrix rank growth";
    const std::string note = "rank equals section size for all tested sizes; infinite rank is not claimed";
    for (int m = 1; m <= 6; ++m) {
        const auto sec = hankel_section(chromatic_dc, Combine::join, family(Family::complete, m));
        s.exact("chromatic-join-K-" + std::to_string(m), loc, std::to_string(m), "DERIVED",
                std::to_string(rank_exact(sec)), note);
    }
    for (const auto& p : {properties::connected(), properties::complete()}) {
        const GraphPolynomial f = [p](const MultiGraph& g) { return harary(p, g); };
        for (int m = 1; m <= 5; ++m) {
            const auto sec = hankel_section(f, Combine::disjoint_union, family(Family::matching, m));
            s.exact(p.name() + "-union-M-" + std::to_string(m), loc, std::to_string(m), "DERIVED",
                    std::to_string(rank_exact(sec)), note);
        }
    }
    return s.take();
}

std::vector<VerdictReport> chromatic_invariant_suite() {
    Suite s("chromatic-invariant");
    const std::string loc = "Tutte characterization of chromatic invariants";
    const auto params = symbolic_chrominv_params();
    for (const auto& g : corpus(4)) {
        if (!g.is_connected()) continue;
        const auto c = check_tutte_characterization(g, params);
        s.exact(std::to_string(g.order()) + "-" + label(g), loc, "identity holds", "PUBLISHED",
                c.holds ? "identity holds" : "lhs " + c.lhs.to_string() + " != rhs " + c.rhs.to_string());
    }
    return s.take();
}

using SuiteFn = std::vector<VerdictReport> (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"published-values", published_values},
        {"not-harary", not_harary},
        {"matching-erratum", matching_erratum},
        {"harary-chromatic", harary_chromatic},
        {"harary-direct", harary_direct},
        {"xi-oracle", xi_oracle},
        {"tutte-xi", tutte_xi},
        {"matching-xi", matching_xi},
        {"facts", facts},
        {"multiplicativity", multiplicativity},
        {"zero-pattern", zero_patterns},
        {"rank", rank_growth},
        {"chromatic-invariant", chromatic_invariant_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<VerdictReport> run_suite(std::string_view suite) {
    std::vector<VerdictReport> out;
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        std::vector<VerdictReport> part;
        try {
            part = fn();
        } catch (const std::exception& e) {
            part.push_back({name + "/error", name, "suite completes", "TRIVIAL", e.what(), false, "exception"});
        }
        out.insert(out.end(), part.begin(), part.end());
    }
    if (!found) throw std::invalid_argument("unknown suite: " + std::string(suite));
    std::stable_sort(out.begin(), out.end(),
                     [](const VerdictReport& a, const VerdictReport& b) { return a.check < b.check; });
    return out;
}

bool all_pass(const std::vector<VerdictReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerdictReport& r) { return r.pass; });
}

nlohmann::json to_json(const VerdictReport& r) {
    return {{"check", r.check},       {"location", r.location}, {"expected", r.expected},
            {"provenance", r.provenance}, {"computed", r.computed}, {"pass", r.pass},
            {"note", r.note}};
}

nlohmann::json reports_to_json(std::string_view suite, const std::vector<VerdictReport>& reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    return {{"suite", std::string(suite)}, {"pass", all_pass(reports)}, {"checks", checks}};
}

std::string reports_to_text(const std::vector<VerdictReport>& reports) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        os << (r.pass ? "PASS " : "FAIL ") << r.check << "  [" << r.provenance << "] " << r.location
           << "\n     expected: " << r.expected << "\n     computed: " << r.computed << "\n";
        if (!r.note.empty()) os << "     note: " << r.note << "\n";
    }
    os << passed << "/" << reports.size() << " checks passed\n";
    return os.str();
}

}  // namespace graphpoly
