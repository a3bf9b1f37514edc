#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphpoly/classic.hpp"
#include "graphpoly/harary.hpp"
#include "graphpoly/hankel.hpp"
#include "graphpoly/limits.hpp"
#include "oracles.hpp"

using namespace graphpoly;
using oracle::named;

namespace {

std::vector<MultiGraph> family(Family f, int m) {
    std::vector<MultiGraph> out;
    for (int i = 1; i <= m; ++i) out.push_back(build_named({f, i, 0}));
    return out;
}

GraphPolynomial harary_of(const GraphProperty& p) {
    return [p](const MultiGraph& g) { return harary_polynomial(p, g).poly; };
}

/// rows x cols product of two random factors, so rank <= inner.
PolyMatrix random_matrix(std::mt19937& rng, int rows, int cols, int inner) {
    std::uniform_int_distribution<long> c(-2, 2);
    auto small = [&]() { return MPoly(c(rng)) + MPoly(c(rng)) * X() + MPoly(c(rng)) * Y(); };
    PolyMatrix a(rows, std::vector<MPoly>(inner)), b(inner, std::vector<MPoly>(cols));
    PolyMatrix m(rows, std::vector<MPoly>(cols));
    for (auto& r : a)
        for (auto& e : r) e = small();
    for (auto& r : b)
        for (auto& e : r) e = small();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int k = 0; k < inner; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

}  // namespace

TEST_CASE("hankel_section") {
    const auto s = hankel_section(chromatic_dc, Combine::join, family(Family::complete, 4));
    REQUIRE(s.entries.size() == 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(s.entries[i - 1][j - 1] == falling_factorial(static_cast<unsigned>(i + j)));
    CHECK(rank_exact(s) == 4);

    const auto one = hankel_section(chromatic_dc, Combine::disjoint_union, {named("K1")}, {named("K1")});
    CHECK(one.entries == PolyMatrix{{X() * X()}});

    const auto conv = harary_of(properties::connected());
    const auto ms = hankel_section(conv, Combine::disjoint_union, family(Family::matching, 4));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(ms.entries[i - 1][j - 1] == conv(named(("M" + std::to_string(i + j)).c_str())));

    const auto eval = evaluate_section(s, Rational(3));
    CHECK(eval[0][0] == 6);
    CHECK(eval[1][1] == 0);
    const auto j = section_to_json(one);
    CHECK(j["op"] == "union");
    CHECK(j["rows"][0] == "@");

    CHECK_THROWS_AS(hankel_section(harary_of(properties::edgeless()), Combine::join, {named("K7")}, {named("K7")}),
                    BoundExceeded);
}

TEST_CASE("rank_exact") {
    CHECK(rank_exact(PolyMatrix(3, std::vector<MPoly>(3))) == 0);
    CHECK(rank_exact(PolyMatrix{{X(), X()}, {X(), X()}}) == 1);
    CHECK(rank_exact(PolyMatrix{{X(), Y()}, {Y(), X()}}) == 2);
    CHECK(rank_exact(PolyMatrix{}) == 0);
    CHECK(rank_exact(PolyMatrix{{MPoly(0L), X()}, {MPoly(0L), MPoly(0L)}}) == 1);
}

TEST_CASE("property: rank agrees with evaluation and is invariant") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        const int inner = 1 + static_cast<int>(rng() % 5);
        PolyMatrix m = random_matrix(rng, rows, cols, inner);
        const int r = rank_exact(m);
        CHECK(r == oracle::rank_by_evaluation(m));

        PolyMatrix p = m;
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<int> perm(cols);
        for (int i = 0; i < cols; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& row : p) {
            std::vector<MPoly> nr;
            for (int c : perm) nr.push_back(row[c]);
            row = nr;
        }
        CHECK(rank_exact(p) == r);

        PolyMatrix scaled = m;
        for (auto& e : scaled[rng() % rows]) e *= X() * X() - Y() + MPoly(3L);
        CHECK(rank_exact(scaled) == r);
    }
}

TEST_CASE("property: rank growth on connection-matrix sections") {
    for (int m = 1; m <= 6; ++m)
        CHECK(rank_exact(hankel_section(chromatic_dc, Combine::join, family(Family::complete, m))) == m);
    for (const auto& p : {properties::connected(), properties::complete()})
        for (int m = 1; m <= 5; ++m)
            CHECK(rank_exact(hankel_section(harary_of(p), Combine::disjoint_union, family(Family::matching, m))) == m);
}

TEST_CASE("zero_pattern") {
    const auto edgeless = zero_pattern(properties::edgeless(), ZeroFamily::complete, 8, 3);
    const auto k3free = zero_pattern(properties::induced_free(named("K3"), "K3"), ZeroFamily::complete, 8, 3);
    const auto conn = zero_pattern(properties::connected(), ZeroFamily::matching, 8, 3);
    const auto comp = zero_pattern(properties::complete(), ZeroFamily::matching, 8, 3);
    for (int i = 1; i <= 8; ++i) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(edgeless.zero[i - 1][k - 1] == (i > k));
            CHECK(k3free.zero[i - 1][k - 1] == (i > 2 * k));
            CHECK(conn.zero[i - 1][k - 1] == (i > k));
            CHECK(comp.zero[i - 1][k - 1] == (i > k));
        }
    }
    for (const auto* z : {&edgeless, &k3free, &conn, &comp}) {
        CHECK(z->upward_closed);
        CHECK(z->monotone);
    }
    CHECK(edgeless.f(2) == 2);
    CHECK(k3free.f(3) == 6);
    CHECK_FALSE(k3free.f(3) == 9);  // the tempting hk bound does not hold for h = 3
}

TEST_CASE("property: zero thresholds are nondecreasing for every builtin") {
    for (const auto& p : {properties::edgeless(), properties::max_component_order(2),
                          properties::induced_free(named("P3"), "P3"), properties::subgraph_free(named("K3"), "K3")}) {
        const auto z = zero_pattern(p, ZeroFamily::complete, 7, 3);
        CHECK(z.monotone);
        CHECK(z.upward_closed);
    }
}
