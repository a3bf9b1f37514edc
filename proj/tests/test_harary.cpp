#include <doctest.h>

#include <random>

#include "graphpoly/classic.hpp"
#include "graphpoly/harary.hpp"
#include "graphpoly/limits.hpp"
#include "oracles.hpp"

using namespace graphpoly;
using oracle::named;
using oracle::poly_x;

namespace {

std::vector<GraphProperty> builtins() {
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

FallingCoeffs fc(std::initializer_list<long> v) {
    FallingCoeffs b;
    for (long x : v) b.values.emplace_back(x);
    return b;
}

/// Same predicate with no closure claims and no connectivity flag: forces the
/// unpruned, undecomposed enumeration.
GraphProperty stripped(const GraphProperty& p) {
    return GraphProperty(p.name() + "/plain", [p](const MultiGraph& g) { return p.holds(g); });
}

const MultiGraph k1k1 = combine(MultiGraph(1), MultiGraph(1), Combine::disjoint_union);

}  // namespace

TEST_CASE("partition_coefficients") {
    CHECK(partition_coefficients(properties::induced_free(named("P3")), named("P3")) == fc({0, 3, 1}));
    CHECK(partition_coefficients(properties::edgeless(), named("K3")) == fc({0, 0, 1}));
    CHECK(partition_coefficients(properties::connected(), k1k1) == fc({0, 1}));
    CHECK(partition_coefficients(properties::edgeless(), MultiGraph(0)).size() == 0);
    CHECK_THROWS_AS(partition_coefficients(properties::edgeless(), MultiGraph(13)), BoundExceeded);
    CHECK_THROWS_AS(partition_coefficients(properties::edgeless(), MultiGraph(2, {{0, 1}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("harary_polynomial") {
    const auto c4 = harary_polynomial(properties::edgeless(), named("C4"));
    CHECK(c4.poly == poly_x({0, -3, 6, -4, 1}));
    CHECK(c4.poly == chromatic_dc(named("C4")));
    CHECK(harary_polynomial(properties::connected(), k1k1).poly == poly_x({0, -1, 1}));
    CHECK(harary_polynomial(properties::complete(), named("K1")).poly == X());
    CHECK(harary_polynomial(properties::edgeless(), MultiGraph(0)).poly == MPoly(1L));
    const auto p3free = properties::induced_free(named("P3"));
    CHECK(harary_polynomial(p3free, named("P3")).poly == poly_x({0, -1, 0, 1}));
    CHECK(harary_polynomial(p3free, named("K1+K2")).poly == poly_x({0, 0, 0, 1}));
}

TEST_CASE("count_colorings_direct") {
    CHECK(count_colorings_direct(properties::edgeless(), named("K3"), 3) == 6);
    CHECK(count_colorings_direct(properties::induced_free(named("P3")), named("P3"), 2) == 6);
    for (const auto& p : builtins()) CHECK(count_colorings_direct(p, named("P3"), 0) == 0);
    CHECK(count_colorings_direct(properties::edgeless(), MultiGraph(0), 0) == 1);
    CHECK_THROWS_AS(count_colorings_direct(properties::edgeless(), named("E12"), 4), BoundExceeded);
}

TEST_CASE("p_chromatic_number") {
    CHECK(p_chromatic_number(properties::edgeless(), named("K3")) == 3);
    CHECK(p_chromatic_number(properties::connected(), named("M3")) == 3);
    CHECK(p_chromatic_number(properties::max_component_order(2), named("P3")) == 2);
    CHECK_FALSE(p_chromatic_number(properties::disjoint_union_of(named("K2")), named("K1")).has_value());
}

TEST_CASE("pruned and decomposed enumeration agree with the plain path") {
    for (const auto& g : enumerate_nonisomorphic(6)) {
        for (const auto& p : builtins()) {
            CHECK(partition_coefficients(p, g) == partition_coefficients(stripped(p), g));
        }
    }
    // decomposition lifts the order bound for connected-member properties
    const auto m8 = named("M8");
    const auto b = partition_coefficients(properties::connected(), m8);
    CHECK(b.at(8) == 1);
    CHECK(b.at(16) == 1);
    CHECK(b.at(12) == 70);  // choose which 4 of the 8 edges split
}

TEST_CASE("property: polynomial values equal direct colouring counts (n <= 6, k <= 3)") {
    for (const auto& g : enumerate_nonisomorphic(6)) {
        for (const auto& p : builtins()) {
            const MPoly chi = harary_polynomial(p, g).poly;
            for (int k = 0; k <= 3; ++k) {
                CHECK(chi.eval({{Var::x, Rational(k)}}) == Rational(count_colorings_direct(p, g, k)));
            }
        }
    }
}

TEST_CASE("property: value at 1, b_1, b_n and monicity") {
    for (const auto& g : enumerate_nonisomorphic(6)) {
        if (g.order() == 0) continue;
        const int n = g.order();
        for (const auto& p : builtins()) {
            const auto r = harary_polynomial(p, g);
            const Rational at1 = r.poly.eval({{Var::x, Rational(1)}});
            CHECK(at1 == (p.holds(g) ? 1 : 0));
            CHECK(r.coeffs.at(1) == (p.holds(g) ? 1 : 0));
            const bool k1_in = p.holds(named("K1"));
            CHECK((r.coeffs.at(n) == 1) == k1_in);
            const bool monic_n = r.poly.degree(Var::x) == static_cast<unsigned>(n) &&
                                 r.poly.coefficient({static_cast<std::uint32_t>(n), 0, 0, 0}) == 1;
            CHECK(monic_n == k1_in);
            for (int k = 1; k < n; ++k) {
                if (r.poly.eval({{Var::x, Rational(k)}}) != 0) continue;
                for (int l = 1; l < k; ++l) CHECK(r.poly.eval({{Var::x, Rational(l)}}) == 0);
            }
        }
    }
}

TEST_CASE("property: isomorphic inputs give identical polynomials") {
    std::mt19937 rng(23);
    for (const auto& g : enumerate_nonisomorphic(5)) {
        const auto h = oracle::random_relabel(g, rng);
        for (const auto& p : builtins()) CHECK(harary_polynomial(p, g).poly == harary_polynomial(p, h).poly);
    }
}
