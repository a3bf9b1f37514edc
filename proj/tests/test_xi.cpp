#include <doctest.h>

#include <random>

#include "graphpoly/classic.hpp"
#include "graphpoly/limits.hpp"
#include "graphpoly/xi.hpp"
#include "oracles.hpp"

using namespace graphpoly;
using oracle::named;
using oracle::poly_x;

namespace {

MPoly monomial_xy(const Integer& c, unsigned a, unsigned b) { return MPoly::monomial(c, Exponents{a, b, 0, 0}); }

/// One elimination step away from each small simple graph: multigraphs and loops.
std::vector<MultiGraph> descendants(int n_max) {
    std::vector<MultiGraph> out;
    for (const auto& g : enumerate_nonisomorphic(n_max)) {
        out.push_back(g);
        for (std::size_t e = 0; e < g.size(); ++e) {
            const auto el = edge_eliminations(g, e);
            out.push_back(el.contracted);
            out.push_back(el.extracted);
            for (std::size_t f = 0; f < el.contracted.size(); ++f) out.push_back(contract_edge(el.contracted, f));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("xi_statesum small cases") {
    CHECK(xi_statesum(MultiGraph(0)) == MPoly(1L));
    CHECK(xi_statesum(named("K1")) == X());
    CHECK(xi_statesum(named("K2")) == X() * X() + X() * Y() + Z());
    CHECK(xi_statesum(named("E2")) == X() * X());
    CHECK(xi_statesum(MultiGraph(1, {{0, 0}})) == X() + X() * Y() + Z());
    CHECK(xi_statesum(named("K2")).to_string() == "x^2 + x*y + z");
}

TEST_CASE("xi bounds") {
    CHECK_THROWS_AS(xi_statesum(named("K7")), BoundExceeded);  // 21 edges
    CHECK_THROWS_AS(xi_recursive(named("E11")), BoundExceeded);
}

TEST_CASE("property: recursion, state sum and definition agree") {
    for (const auto& g : descendants(4)) {
        const MPoly s = xi_statesum(g);
        CHECK(s == oracle::xi_by_definition(g));
        CHECK(xi_recursive(g) == s);
        CHECK(ee_recursive(g, xi_params()) == s);
    }
    for (const auto& g : enumerate_nonisomorphic(5)) {
        if (g.size() > 7) continue;  // the definition oracle is quadratic in 2^|E|
        CHECK(xi_recursive(g) == oracle::xi_by_definition(g));
    }
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_multigraph(rng, 5, 6);
        CHECK(xi_recursive(g) == oracle::xi_by_definition(g));
    }
}

TEST_CASE("property: xi is multiplicative and independent of edge order") {
    std::mt19937 rng(29);
    const auto corpus = enumerate_nonisomorphic(4);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& a = corpus[rng() % corpus.size()];
        const auto& b = corpus[rng() % corpus.size()];
        const auto u = combine(a, b, Combine::disjoint_union);
        CHECK(xi_statesum(u) == xi_statesum(a) * xi_statesum(b));
        CHECK(xi_recursive(oracle::random_relabel(u, rng)) == xi_statesum(u));
    }
}

TEST_CASE("substitution instances") {
    CHECK(substitute_instance(named("K2"), XiInstance::matching_bivariate) == X() * X() + Y());
    CHECK(substitute_instance(named("C4"), XiInstance::matching_defect) == poly_x({2, 0, -4, 0, 1}));
    CHECK(substitute_instance(named("K3"), XiInstance::tutte) == X() * X() + X() + Y());
    for (const auto& g : enumerate_nonisomorphic(5)) CHECK(substitute_instance(g, XiInstance::tutte) == tutte_statesum(g));
    for (const auto& g : enumerate_nonisomorphic(6)) {
        if (g.size() > 10) continue;
        const auto counts = oracle::matching_counts(g);
        MPoly biv;
        MPoly def;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const unsigned rest = static_cast<unsigned>(g.order() - 2 * i);
            biv += monomial_xy(counts[i], rest, static_cast<unsigned>(i));
            def += monomial_xy(i % 2 ? Integer(-counts[i]) : counts[i], rest, 0);
        }
        CHECK(substitute_instance(g, XiInstance::matching_bivariate) == biv);
        CHECK(substitute_instance(g, XiInstance::matching_defect) == def);
        CHECK(substitute_instance(g, XiInstance::matching_defect) == matching_polys(g).defect);
    }
}

TEST_CASE("chromatic invariant") {
    const auto p = symbolic_chrominv_params();
    CHECK(chromatic_invariant(named("K2"), p) == X());
    CHECK(chromatic_invariant(MultiGraph(1, {{0, 0}}), p) == Y());
    CHECK(chromatic_invariant(named("E3"), p) == MPoly(1L));
    // triangle: alpha f(P3) + beta f(K2 with a double edge)
    CHECK(chromatic_invariant(named("K3"), p) == Z() * X() * X() + W() * (Z() * X() + W() * Y()));
}

TEST_CASE("property: chromatic invariant matches the Tutte characterization") {
    const auto p = symbolic_chrominv_params();
    for (const auto& g : enumerate_nonisomorphic(4)) {
        const auto c = check_tutte_characterization(g, p);
        CHECK(c.holds);
        CHECK(c.lhs == c.rhs);
    }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_multigraph(rng, 4, 6);
        CHECK(check_tutte_characterization(g, p).holds);
    }
    // chromatic polynomial as a specialization: A = x-1, B = 0, alpha = 1, beta = -1, times x^k
    const ChromInvParams chi{X() - MPoly(1L), MPoly(0L), MPoly(1L), MPoly(-1L)};
    for (const auto& g : enumerate_nonisomorphic(5)) {
        CHECK(chromatic_invariant(g, chi) * X().pow(static_cast<unsigned>(g.component_count())) == chromatic_dc(g));
    }
}
