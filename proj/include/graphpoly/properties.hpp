#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

enum class Closure { hereditary, monotone, additive, minor_closed };

/// A decidable class of simple graphs. The nullgraph is never a member.
class GraphProperty {
public:
    using Predicate = std::function<bool(const MultiGraph&)>;

    GraphProperty(std::string name, Predicate test, std::set<Closure> claims = {},
                  bool members_connected = false);

    const std::string& name() const { return name_; }
    /// Throws std::invalid_argument for a non-simple graph.
    bool holds(const MultiGraph& g) const;
    /// Closure properties that follow from the definition (still re-checked
    /// before they are relied on).
    const std::set<Closure>& claims() const { return claims_; }
    bool claims(Closure c) const { return claims_.count(c) > 0; }
    /// Every member is connected, so no part of a P-partition spans two components.
    bool members_connected() const { return members_connected_; }

private:
    std::string name_;
    Predicate test_;
    std::set<Closure> claims_;
    bool members_connected_ = false;
};

namespace properties {

GraphProperty edgeless();
GraphProperty complete();
GraphProperty connected();
/// Components of order at most t (t >= 1).
GraphProperty max_component_order(int t);
GraphProperty induced_free(const MultiGraph& h, std::string label = {});
GraphProperty subgraph_free(const MultiGraph& h, std::string label = {});
/// Nonempty disjoint unions of copies of a connected H.
GraphProperty disjoint_union_of(const MultiGraph& h, std::string label = {});

}  // namespace properties

/// "edgeless", "complete", "connected", "mcc:<t>", "induced-free:<graph>",
/// "subgraph-free:<graph>", "du:<graph>" where <graph> is a family name
/// ("P3", "K1+K2", ...) or graph6. Throws ParseError.
GraphProperty parse_property(std::string_view spec);

/// Named family first, graph6 second.
MultiGraph parse_graph_token(std::string_view token);

struct Counterexample {
    MultiGraph member;              // graph in P
    std::string operation;          // e.g. "delete edge 0-1", "disjoint union"
    std::optional<MultiGraph> partner;  // second operand for unions
    MultiGraph result;              // graph outside P
};

struct ClosureReport {
    bool holds = true;  // no counterexample up to n_max
    std::optional<Counterexample> counterexample;
};

struct Classification {
    int n_max = 0;
    ClosureReport hereditary;
    ClosureReport monotone;
    ClosureReport additive;
    ClosureReport minor_closed;
};

/// Bounded evidence over all simple graphs of order 1..n_max (n_max <= 6).
/// Additivity pairs are limited to combined order n_max.
Classification classify(const GraphProperty& p, int n_max);
ClosureReport check_closure(const GraphProperty& p, Closure c, int n_max);

/// Heredity claimed by construction and unrefuted up to order 6. Cached per
/// property name; thread-safe.
bool verified_hereditary(const GraphProperty& p);

/// Non-members of order 1..n_max (n_max <= 6) all of whose proper nonempty
/// sub-objects (in the given sense) are members, sorted by (order, size).
std::vector<MultiGraph> minimal_forbidden(const GraphProperty& p, Containment mode, int n_max);

std::string to_string(Closure c);
std::string to_string(Containment c);

}  // namespace graphpoly
