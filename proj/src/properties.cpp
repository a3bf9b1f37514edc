#include "graphpoly/properties.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "graphpoly/limits.hpp"

namespace graphpoly {

GraphProperty::GraphProperty(std::string name, Predicate test, std::set<Closure> claims,
                             bool members_connected)
    : name_(std::move(name)),
      test_(std::move(test)),
      claims_(std::move(claims)),
      members_connected_(members_connected) {}

bool GraphProperty::holds(const MultiGraph& g) const {
    if (!g.is_simple()) throw std::invalid_argument("property " + name_ + ": simple graphs only");
    if (g.order() == 0) return false;
    return test_(g);
}

namespace properties {

namespace {

std::string label_or_graph6(const MultiGraph& h, std::string label) {
    return label.empty() ? write_graph6(h) : label;
}

void require_simple_nonempty(const MultiGraph& h, const char* what) {
    if (!h.is_simple() || h.order() == 0) {
        throw std::invalid_argument(std::string(what) + ": H must be a nonempty simple graph");
    }
}

}  // namespace

GraphProperty edgeless() {
    return GraphProperty(
        "edgeless", [](const MultiGraph& g) { return g.size() == 0; },
        {Closure::hereditary, Closure::monotone, Closure::additive, Closure::minor_closed});
}

GraphProperty complete() {
    return GraphProperty(
        "complete",
        [](const MultiGraph& g) {
            const auto n = static_cast<std::size_t>(g.order());
            return g.size() == n * (n - 1) / 2;
        },
        {Closure::hereditary}, true);
}

GraphProperty connected() {
    return GraphProperty(
        "connected", [](const MultiGraph& g) { return g.is_connected(); }, {},
        true);
}

GraphProperty max_component_order(int t) {
    if (t < 1) throw std::invalid_argument("mcc: t must be at least 1");
    return GraphProperty(
        "mcc:" + std::to_string(t),
        [t](const MultiGraph& g) {
            for (auto c : g.components()) {
                if (__builtin_popcountll(c) > t) return false;
            }
            return true;
        },
        {Closure::hereditary, Closure::monotone, Closure::additive, Closure::minor_closed});
}

GraphProperty induced_free(const MultiGraph& h, std::string label) {
    require_simple_nonempty(h, "induced-free");
    std::set<Closure> claims{Closure::hereditary};
    if (h.is_connected()) claims.insert(Closure::additive);
    return GraphProperty(
        "induced-free:" + label_or_graph6(h, std::move(label)),
        [h](const MultiGraph& g) { return !contains(g, h, Containment::induced); }, claims);
}

GraphProperty subgraph_free(const MultiGraph& h, std::string label) {
    require_simple_nonempty(h, "subgraph-free");
    std::set<Closure> claims{Closure::hereditary, Closure::monotone};
    if (h.is_connected()) claims.insert(Closure::additive);
    return GraphProperty(
        "subgraph-free:" + label_or_graph6(h, std::move(label)),
        [h](const MultiGraph& g) { return !contains(g, h, Containment::subgraph); }, claims);
}

GraphProperty disjoint_union_of(const MultiGraph& h, std::string label) {
    require_simple_nonempty(h, "du");
    if (!h.is_connected()) throw std::invalid_argument("du: H must be connected");
    const std::string form = canonical_form(h);
    const int t = h.order();
    return GraphProperty(
        "du:" + label_or_graph6(h, std::move(label)),
        [form, t](const MultiGraph& g) {
            for (auto c : g.components()) {
                if (__builtin_popcountll(c) != t) return false;
                if (canonical_form(g.induced(c)) != form) return false;
            }
            return true;
        },
        {Closure::additive});
}

}  // namespace properties

MultiGraph parse_graph_token(std::string_view token) {
    try {
        return build_named(parse_named(token));
    } catch (const ParseError&) {
        return parse_graph6(token);
    }
}

GraphProperty parse_property(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw ParseError("property '" + std::string(spec) + "' needs an argument");
    };
    auto no_arg = [&] {
        if (colon != std::string_view::npos) {
            throw ParseError("property '" + std::string(head) + "' takes no argument");
        }
    };
    try {
        if (head == "edgeless") return no_arg(), properties::edgeless();
        if (head == "complete") return no_arg(), properties::complete();
        if (head == "connected") return no_arg(), properties::connected();
        if (head == "mcc") {
            need_arg();
            int t = 0;
            try {
                std::size_t used = 0;
                t = std::stoi(std::string(arg), &used);
                if (used != arg.size()) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw ParseError("mcc: malformed order '" + std::string(arg) + "'");
            }
            return properties::max_component_order(t);
        }
        if (head == "induced-free") {
            need_arg();
            return properties::induced_free(parse_graph_token(arg), std::string(arg));
        }
        if (head == "subgraph-free") {
            need_arg();
            return properties::subgraph_free(parse_graph_token(arg), std::string(arg));
        }
        if (head == "du") {
            need_arg();
            return properties::disjoint_union_of(parse_graph_token(arg), std::string(arg));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown property '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------- classification

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

/// Single-step reductions of a simple graph for a closure notion. A closure
/// fails on the enumerated range iff some member has a one-step reduction
/// outside P, since any reduction chain passes through such a step.
template <typename Visit>
bool for_each_reduction(const MultiGraph& g, Closure c, Visit&& visit) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.order() == 1) break;  // nullgraph results are out of scope
        if (!visit("delete vertex " + std::to_string(v), delete_vertex(g, v))) return false;
    }
    if (c == Closure::hereditary) return true;
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (!visit("delete edge " + edge_text(g.edge(e)), delete_edge(g, e))) return false;
    }
    if (c == Closure::monotone) return true;
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (!visit("contract edge " + edge_text(g.edge(e)), contract_edge(g, e).simplified())) return false;
    }
    return true;
}

void require_classify_bound(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    require_within("classification order", n_max, 6);
}

}  // namespace

ClosureReport check_closure(const GraphProperty& p, Closure c, int n_max) {
    require_classify_bound(n_max);
    const auto corpus = enumerate_nonisomorphic(n_max);
    ClosureReport report;
    if (c == Closure::additive) {
        std::vector<const MultiGraph*> members;
        for (const auto& g : corpus) {
            if (g.order() > 0 && p.holds(g)) members.push_back(&g);
        }
        for (const auto* g : members) {
            for (const auto* h : members) {
                if (g->order() + h->order() > n_max) continue;
                MultiGraph u = combine(*g, *h, Combine::disjoint_union);
                if (!p.holds(u)) {
                    report.holds = false;
                    report.counterexample = Counterexample{*g, "disjoint union", *h, u};
                    return report;
                }
            }
        }
        return report;
    }
    for (const auto& g : corpus) {
        if (g.order() == 0 || !p.holds(g)) continue;
        for_each_reduction(g, c, [&](const std::string& op, const MultiGraph& r) {
            if (p.holds(r)) return true;
            report.holds = false;
            report.counterexample = Counterexample{g, op, std::nullopt, r};
            return false;
        });
        if (!report.holds) return report;
    }
    return report;
}

Classification classify(const GraphProperty& p, int n_max) {
    require_classify_bound(n_max);
    Classification out;
    out.n_max = n_max;
    out.hereditary = check_closure(p, Closure::hereditary, n_max);
    out.monotone = check_closure(p, Closure::monotone, n_max);
    out.additive = check_closure(p, Closure::additive, n_max);
    out.minor_closed = check_closure(p, Closure::minor_closed, n_max);
    return out;
}

bool verified_hereditary(const GraphProperty& p) {
    if (!p.claims(Closure::hereditary)) return false;
    static std::mutex mu;
    static std::map<std::string, bool> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(p.name()); it != cache.end()) return it->second;
    }
    const bool ok = check_closure(p, Closure::hereditary, 6).holds;
    std::lock_guard lock(mu);
    cache.try_emplace(p.name(), ok);
    return ok;
}

std::vector<MultiGraph> minimal_forbidden(const GraphProperty& p, Containment mode, int n_max) {
    require_classify_bound(n_max);
    std::vector<MultiGraph> bad;
    for (const auto& g : enumerate_nonisomorphic(n_max)) {
        if (g.order() > 0 && !p.holds(g)) bad.push_back(g);
    }
    std::vector<MultiGraph> out;
    for (std::size_t i = 0; i < bad.size(); ++i) {
        const MultiGraph& h = bad[i];
        std::vector<std::string> minors;
        if (mode == Containment::minor) minors = minor_forms(h);
        bool minimal = true;
        for (std::size_t j = 0; j < bad.size() && minimal; ++j) {
            const MultiGraph& smaller = bad[j];
            if (j == i || smaller.order() > h.order()) continue;
            if (smaller.order() == h.order() && smaller.size() >= h.size()) continue;
            if (mode == Containment::minor) {
                minimal = !std::binary_search(minors.begin(), minors.end(), canonical_form(smaller));
            } else {
                minimal = !contains(h, smaller, mode);
            }
        }
        if (minimal) out.push_back(h);
    }
    // enumeration order is already (order, size, canonical form)
    return out;
}

std::string to_string(Closure c) {
    switch (c) {
    case Closure::hereditary: return "hereditary";
    case Closure::monotone: return "monotone";
    case Closure::additive: return "additive";
    case Closure::minor_closed: return "minor_closed";
    }
    return "?";
}

std::string to_string(Containment c) {
    switch (c) {
    case Containment::subgraph: return "subgraph";
    case Containment::induced: return "induced";
    case Containment::minor: return "minor";
    }
    return "?";
}

}  // namespace graphpoly
