#include "graphpoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "graphpoly/limits.hpp"

namespace graphpoly {

namespace {

Edge normalized(int u, int v) { return u <= v ? Edge{u, v} : Edge{v, u}; }

/// Union-find over at most 64 vertices.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

/// Vertices of g outside `removed` keep their relative order.
std::vector<int> compacting_map(int n, VertexMask removed) {
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!((removed >> v) & 1U)) map[v] = next++;
    }
    return map;
}

}  // namespace

MultiGraph::MultiGraph(int n) : MultiGraph(n, {}) {}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
    }
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) + ") with n=" +
                                        std::to_string(n));
        }
        e = normalized(e.u, e.v);
    }
}

bool MultiGraph::is_simple() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].is_loop()) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
}

bool MultiGraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

int MultiGraph::multiplicity(int u, int v) const {
    Edge key = normalized(u, v);
    return static_cast<int>(std::count(edges_.begin(), edges_.end(), key));
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<VertexMask> MultiGraph::adjacency() const {
    std::vector<VertexMask> adj(n_, 0);
    for (const auto& e : edges_) {
        if (e.is_loop()) continue;
        adj[e.u] |= VertexMask{1} << e.v;
        adj[e.v] |= VertexMask{1} << e.u;
    }
    return adj;
}

VertexMask MultiGraph::all_vertices() const {
    return n_ >= 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

MultiGraph MultiGraph::induced(VertexMask mask) const {
    mask &= all_vertices();
    std::vector<int> map = compacting_map(n_, ~mask & all_vertices());
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        if (map[e.u] >= 0 && map[e.v] >= 0) kept.push_back({map[e.u], map[e.v]});
    }
    return MultiGraph(__builtin_popcountll(mask), std::move(kept));
}

MultiGraph MultiGraph::simplified() const {
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        if (!e.is_loop()) kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return MultiGraph(n_, std::move(kept));
}

MultiGraph MultiGraph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("relabeled: permutation size mismatch");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v]});
    return MultiGraph(n_, std::move(out));
}

MultiGraph MultiGraph::with_edge_order(std::span<const std::size_t> order) const {
    if (order.size() != edges_.size()) {
        throw std::invalid_argument("with_edge_order: order size mismatch");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto i : order) out.push_back(edges_.at(i));
    return MultiGraph(n_, std::move(out));
}

std::vector<VertexMask> MultiGraph::components() const {
    DisjointSets ds(n_);
    for (const auto& e : edges_) ds.unite(e.u, e.v);
    std::vector<VertexMask> by_root(n_, 0);
    for (int v = 0; v < n_; ++v) by_root[ds.find(v)] |= VertexMask{1} << v;
    std::vector<VertexMask> out;
    for (auto m : by_root) {
        if (m != 0) out.push_back(m);
    }
    // roots are the lowest vertex of each class, so out is already ordered
    return out;
}

int MultiGraph::component_count() const { return static_cast<int>(components().size()); }

bool MultiGraph::is_connected() const { return n_ > 0 && component_count() == 1; }

// ---------------------------------------------------------------- named families

MultiGraph build_named(const NamedFamily& f) {
    if (f.a < 0 || f.b < 0) throw std::invalid_argument("named family: negative parameter");
    std::vector<Edge> edges;
    switch (f.family) {
    case Family::complete:
        for (int v = 1; v < f.a; ++v)
            for (int u = 0; u < v; ++u) edges.push_back({u, v});
        return MultiGraph(f.a, edges);
    case Family::edgeless:
        return MultiGraph(f.a);
    case Family::path:
        for (int v = 1; v < f.a; ++v) edges.push_back({v - 1, v});
        return MultiGraph(f.a, edges);
    case Family::cycle:
        if (f.a > 0 && f.a < 3) throw std::invalid_argument("C_n needs n >= 3");
        for (int v = 1; v < f.a; ++v) edges.push_back({v - 1, v});
        if (f.a >= 3) edges.push_back({f.a - 1, 0});
        return MultiGraph(f.a, edges);
    case Family::complete_bipartite:
        for (int u = 0; u < f.a; ++u)
            for (int v = 0; v < f.b; ++v) edges.push_back({u, f.a + v});
        return MultiGraph(f.a + f.b, edges);
    case Family::matching:
        for (int i = 0; i < f.a; ++i) edges.push_back({2 * i, 2 * i + 1});
        return MultiGraph(2 * f.a, edges);
    case Family::k1_plus_k2:
        return MultiGraph(3, {{1, 2}});
    case Family::k1_join_k2_plus_k1:
        return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    }
    throw std::invalid_argument("named family: unknown tag");
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
        throw ParseError("malformed named graph: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

NamedFamily parse_named(std::string_view text) {
    if (text == "K1+K2" || text == "K1uK2") return {Family::k1_plus_k2, 0, 0};
    if (text == "K1j(K2+K1)" || text == "K1j(K2uK1)") return {Family::k1_join_k2_plus_k1, 0, 0};
    if (text.size() < 2) throw ParseError("malformed named graph: '" + std::string(text) + "'");
    std::string_view rest = text.substr(1);
    switch (text[0]) {
    case 'K': {
        auto comma = rest.find(',');
        if (comma != std::string_view::npos) {
            return {Family::complete_bipartite, parse_count(rest.substr(0, comma), text),
                    parse_count(rest.substr(comma + 1), text)};
        }
        return {Family::complete, parse_count(rest, text), 0};
    }
    case 'E': return {Family::edgeless, parse_count(rest, text), 0};
    case 'P': return {Family::path, parse_count(rest, text), 0};
    case 'C': {
        int n = parse_count(rest, text);
        if (n < 3) throw ParseError("C_n needs n >= 3: '" + std::string(text) + "'");
        return {Family::cycle, n, 0};
    }
    case 'M': return {Family::matching, parse_count(rest, text), 0};
    default: break;
    }
    throw ParseError("unknown named graph: '" + std::string(text) + "'");
}

std::string to_string(const NamedFamily& f) {
    switch (f.family) {
    case Family::complete: return "K" + std::to_string(f.a);
    case Family::edgeless: return "E" + std::to_string(f.a);
    case Family::path: return "P" + std::to_string(f.a);
    case Family::cycle: return "C" + std::to_string(f.a);
    case Family::complete_bipartite: return "K" + std::to_string(f.a) + "," + std::to_string(f.b);
    case Family::matching: return "M" + std::to_string(f.a);
    case Family::k1_plus_k2: return "K1+K2";
    case Family::k1_join_k2_plus_k1: return "K1j(K2+K1)";
    }
    return "?";
}

// ---------------------------------------------------------------- eliminations

MultiGraph delete_edge(const MultiGraph& g, std::size_t e) {
    if (e >= g.size()) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    std::vector<Edge> kept = g.edges();
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(e));
    return MultiGraph(g.order(), std::move(kept));
}

MultiGraph contract_edge(const MultiGraph& g, std::size_t e) {
    const Edge target = g.edges().at(e);
    if (target.is_loop()) return delete_edge(g, e);
    // v merges into u; vertices above v shift down
    const int u = target.u;
    const int v = target.v;
    auto relabel = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    std::vector<Edge> out;
    out.reserve(g.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == e) continue;
        const Edge& f = g.edge(i);
        out.push_back({relabel(f.u), relabel(f.v)});
    }
    return MultiGraph(g.order() - 1, std::move(out));
}

MultiGraph extract_edge(const MultiGraph& g, std::size_t e) {
    const Edge target = g.edges().at(e);
    VertexMask removed = (VertexMask{1} << target.u) | (VertexMask{1} << target.v);
    return g.induced(~removed & g.all_vertices());
}

MultiGraph delete_vertex(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    return g.induced(g.all_vertices() & ~(VertexMask{1} << v));
}

Eliminations edge_eliminations(const MultiGraph& g, std::size_t e) {
    if (e >= g.size()) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    return {delete_edge(g, e), contract_edge(g, e), extract_edge(g, e)};
}

MultiGraph combine(const MultiGraph& g, const MultiGraph& h, Combine op) {
    if (op == Combine::join && (!g.is_simple() || !h.is_simple())) {
        throw std::invalid_argument("join requires simple graphs");
    }
    const int shift = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
    if (op == Combine::join) {
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < h.order(); ++v) edges.push_back({u, shift + v});
    }
    return MultiGraph(g.order() + h.order(), std::move(edges));
}

// ---------------------------------------------------------------- components

VertexMask covered_vertices(const MultiGraph& g, EdgeSubset s) {
    VertexMask m = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (s.contains(i)) m |= (VertexMask{1} << g.edge(i).u) | (VertexMask{1} << g.edge(i).v);
    }
    return m;
}

int spanning_components(const MultiGraph& g, EdgeSubset s) {
    DisjointSets ds(g.order());
    int c = g.order();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (s.contains(i) && ds.unite(g.edge(i).u, g.edge(i).v)) --c;
    }
    return c;
}

ComponentCounts component_counts(const MultiGraph& g, EdgeSubset a, EdgeSubset b) {
    ComponentCounts out;
    const VertexMask va = covered_vertices(g, a);
    const VertexMask vb = covered_vertices(g, b);
    out.disjoint = (va & vb) == 0;
    out.c_union = spanning_components(g, a | b);
    // uncovered vertices are singleton components of (V(G), B)
    out.cov_b = spanning_components(g, b) - (g.order() - __builtin_popcountll(vb));
    return out;
}

}  // namespace graphpoly
