#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphpoly {

/// Undirected edge with u <= v; u == v is a loop.
struct Edge {
    int u = 0;
    int v = 0;
    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex set as a bitmask; vertex i is bit i.
using VertexMask = std::uint64_t;

/// Set of edge indices of a host graph (bit i <=> edge i).
class EdgeSubset {
public:
    constexpr EdgeSubset() = default;
    constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

    static EdgeSubset single(std::size_t e) { return EdgeSubset(std::uint64_t{1} << e); }
    static EdgeSubset all(std::size_t edge_count) {
        return EdgeSubset(edge_count >= 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << edge_count) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(std::size_t e) const { return (bits_ >> e) & 1U; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }

    friend EdgeSubset operator|(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.bits_ | b.bits_); }
    friend EdgeSubset operator&(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.bits_ & b.bits_); }
    friend bool operator==(EdgeSubset, EdgeSubset) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Vertices 0..n-1 and an ordered edge list; loops and parallel edges allowed.
/// Edges are addressed by index, but every polynomial computed from a graph is
/// independent of the edge order.
class MultiGraph {
public:
    static constexpr int kMaxOrder = 64;

    MultiGraph() = default;
    explicit MultiGraph(int n);
    /// Throws std::invalid_argument for an endpoint outside [0, n) or n > kMaxOrder.
    MultiGraph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    bool is_simple() const;
    bool has_loops() const;

    /// Number of edges joining u and v (loops at u when u == v).
    int multiplicity(int u, int v) const;
    int degree(int v) const;

    /// Neighbour masks of the underlying simple graph (loops ignored).
    std::vector<VertexMask> adjacency() const;
    VertexMask all_vertices() const;

    /// Subgraph induced on the mask, vertices renumbered in increasing order.
    MultiGraph induced(VertexMask mask) const;
    /// Loops dropped, parallel edges collapsed, edges sorted.
    MultiGraph simplified() const;
    /// Vertex v becomes perm[v]; edge order is kept.
    MultiGraph relabeled(std::span<const int> perm) const;
    /// Same edges, reordered: new edge i is old edge order[i].
    MultiGraph with_edge_order(std::span<const std::size_t> order) const;

    /// Vertex masks of the connected components, ordered by lowest vertex.
    std::vector<VertexMask> components() const;
    int component_count() const;
    /// One component; the nullgraph is not connected.
    bool is_connected() const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------- parsing

/// graph6 (optionally prefixed by ">>graph6<<") or edge-list text
/// ("n m" then m lines "u v", 0-indexed). Throws ParseError.
MultiGraph parse_graph(std::string_view text);
/// Accepts orders up to 62. Throws ParseError.
MultiGraph parse_graph6(std::string_view text);
MultiGraph parse_edge_list(std::string_view text);
/// Throws std::invalid_argument for non-simple graphs or order > 62.
std::string write_graph6(const MultiGraph& g);
std::string write_edge_list(const MultiGraph& g);

// ---------------------------------------------------------------- named families

enum class Family {
    complete,             // K_n
    edgeless,             // E_n
    path,                 // P_n, n vertices
    cycle,                // C_n, n >= 3
    complete_bipartite,   // K_{a,b}
    matching,             // M_n, n disjoint copies of K2
    k1_plus_k2,           // K1 disjoint-union K2
    k1_join_k2_plus_k1,   // K1 join (K2 disjoint-union K1)
};

struct NamedFamily {
    Family family = Family::complete;
    int a = 0;
    int b = 0;
};

/// Vertex numbering:
///   K_n, E_n: 0..n-1; P_n: path 0-1-...-(n-1); C_n: cycle 0-1-...-(n-1)-0;
///   K_{a,b}: parts {0..a-1} and {a..a+b-1}; M_n: edges (2i, 2i+1);
///   K1+K2: isolated 0, edge 1-2; K1 join (K2+K1): apex 0 joined to 1,2,3 with edge 1-2.
/// Throws std::invalid_argument on negative parameters or C_n with 0 < n < 3.
MultiGraph build_named(const NamedFamily& f);

/// "K4", "E3", "P3", "C4", "K2,3", "M3", "K1+K2", "K1j(K2+K1)". Throws ParseError.
NamedFamily parse_named(std::string_view text);
std::string to_string(const NamedFamily& f);

// ---------------------------------------------------------------- eliminations

MultiGraph delete_edge(const MultiGraph& g, std::size_t e);
/// Merges the endpoints; surviving parallel edges become loops. Contracting a
/// loop is the same as deleting it.
MultiGraph contract_edge(const MultiGraph& g, std::size_t e);
/// Removes both endpoints with every incident edge; for a loop, its single vertex.
MultiGraph extract_edge(const MultiGraph& g, std::size_t e);
MultiGraph delete_vertex(const MultiGraph& g, int v);

struct Eliminations {
    MultiGraph minus;
    MultiGraph contracted;
    MultiGraph extracted;
};

/// Throws std::out_of_range for an edge index past the end.
Eliminations edge_eliminations(const MultiGraph& g, std::size_t e);

enum class Combine { disjoint_union, join };

/// H's vertices are shifted by n(G); the join adds every cross edge and
/// requires simple operands (std::invalid_argument otherwise).
MultiGraph combine(const MultiGraph& g, const MultiGraph& h, Combine op);

// ---------------------------------------------------------------- components

struct ComponentCounts {
    bool disjoint = true;  // V(A) and V(B) share no vertex
    int c_union = 0;       // components of (V(G), A u B), isolated vertices included
    int cov_b = 0;         // components of (V(B), B)
    friend bool operator==(const ComponentCounts&, const ComponentCounts&) = default;
};

VertexMask covered_vertices(const MultiGraph& g, EdgeSubset s);
/// Components of (V(G), s).
int spanning_components(const MultiGraph& g, EdgeSubset s);
ComponentCounts component_counts(const MultiGraph& g, EdgeSubset a, EdgeSubset b);

// ---------------------------------------------------------------- isomorphism

/// Equal strings <=> isomorphic multigraphs. Minimum adjacency encoding over
/// the vertex orders compatible with a colour-refined cell ordering.
/// Throws BoundExceeded past limits().canonical_order.
std::string canonical_form(const MultiGraph& g);
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

enum class Containment { subgraph, induced, minor };

/// Whether simple H occurs in simple G in the given sense. Brute force;
/// throws BoundExceeded past limits().canonical_order.
bool contains(const MultiGraph& g, const MultiGraph& h, Containment mode);

/// Canonical forms of every minor of a simple graph (itself and the nullgraph included).
std::vector<std::string> minor_forms(const MultiGraph& g);

/// One simple graph per isomorphism class for each order 0..n_max (n_max <= 7),
/// sorted by (order, size, canonical form).
std::vector<MultiGraph> enumerate_nonisomorphic(int n_max);

}  // namespace graphpoly
