#pragma once

// Independent reference computations used only by the tests. None of these
// share an algorithmic path with the library routine they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace oracle {

using namespace graphpoly;

inline std::vector<std::vector<int>> multiplicities(const MultiGraph& g) {
    std::vector<std::vector<int>> m(g.order(), std::vector<int>(g.order(), 0));
    for (const auto& e : g.edges()) {
        ++m[e.u][e.v];
        if (e.u != e.v) ++m[e.v][e.u];
    }
    return m;
}

/// Tries every vertex bijection.
inline bool brute_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const auto ma = multiplicities(a);
    const auto mb = multiplicities(b);
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool same = true;
        for (int i = 0; i < a.order() && same; ++i)
            for (int j = 0; j < a.order() && same; ++j) same = ma[i][j] == mb[p[i]][p[j]];
        if (same) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline MultiGraph random_relabel(const MultiGraph& g, std::mt19937& rng) {
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    MultiGraph r = g.relabeled(p);
    std::vector<std::size_t> order(r.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return r.with_edge_order(order);
}

/// Tutte polynomial by the classical bridge/loop/deletion-contraction rules.
inline MPoly tutte_dc(const MultiGraph& g) {
    if (g.size() == 0) return MPoly(1L);
    const MultiGraph minus = delete_edge(g, 0);
    if (g.edge(0).is_loop()) return Y() * tutte_dc(minus);
    if (minus.component_count() > g.component_count()) return X() * tutte_dc(minus);
    return tutte_dc(minus) + tutte_dc(contract_edge(g, 0));
}

/// xi straight from the definition, every ordered pair (A, B) of edge subsets.
inline MPoly xi_by_definition(const MultiGraph& g) {
    const std::uint64_t subsets = std::uint64_t{1} << g.size();
    MPoly out;
    for (std::uint64_t a = 0; a < subsets; ++a) {
        for (std::uint64_t b = 0; b < subsets; ++b) {
            const auto cc = component_counts(g, EdgeSubset(a), EdgeSubset(b));
            if (!cc.disjoint) continue;
            Exponents e{};
            e[0] = static_cast<std::uint32_t>(cc.c_union - cc.cov_b);
            e[1] = static_cast<std::uint32_t>(__builtin_popcountll(a) + __builtin_popcountll(b) - cc.cov_b);
            e[2] = static_cast<std::uint32_t>(cc.cov_b);
            out += MPoly::monomial(Integer(1), e);
        }
    }
    return out;
}

/// Matchings counted over all edge subsets.
inline std::vector<Integer> matching_counts(const MultiGraph& g) {
    std::vector<Integer> counts(g.order() / 2 + 1, Integer(0));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
        VertexMask used = 0;
        bool ok = true;
        for (std::size_t e = 0; e < g.size() && ok; ++e) {
            if (!((s >> e) & 1U)) continue;
            const Edge& ed = g.edge(e);
            const VertexMask ends = (VertexMask{1} << ed.u) | (VertexMask{1} << ed.v);
            ok = !ed.is_loop() && (used & ends) == 0;
            used |= ends;
        }
        if (ok) ++counts[__builtin_popcountll(s)];
    }
    return counts;
}

/// Rank of a rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<Rational>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Rank over Q(x): the maximum rank over several integer evaluation points
/// (a lower bound that is exact unless every point hits a common root).
inline int rank_by_evaluation(const std::vector<std::vector<MPoly>>& m) {
    int best = 0;
    for (long point : {2L, 3L, 5L, 7L, 11L, 13L, 101L, 1009L}) {
        std::vector<std::vector<Rational>> v;
        for (const auto& row : m) {
            auto& r = v.emplace_back();
            for (const auto& p : row) r.push_back(p.eval({{Var::x, Rational(point)}, {Var::y, Rational(point + 1)}}));
        }
        best = std::max(best, rational_rank(v));
    }
    return best;
}

/// det(kI - M) by rational elimination.
inline Rational char_poly_at(const std::vector<std::vector<long>>& m, long k) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational((i == j ? k : 0) - m[i][j]);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

/// Sum of b_i k!/(k-i)!.
inline Integer falling_sum(const FallingCoeffs& b, long k) {
    Integer total = 0;
    for (std::size_t i = 1; i <= b.size(); ++i) {
        Integer ff = 1;
        for (std::size_t j = 0; j < i; ++j) ff *= (k - static_cast<long>(j));
        total += b.at(i) * ff;
    }
    return total;
}

/// Random multigraph, loops and parallel edges allowed.
inline MultiGraph random_multigraph(std::mt19937& rng, int max_order, int max_edges) {
    const int n = std::uniform_int_distribution<int>(1, max_order)(rng);
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<Edge> es;
    for (int i = std::uniform_int_distribution<int>(0, max_edges)(rng); i > 0; --i) es.push_back({vert(rng), vert(rng)});
    return MultiGraph(n, es);
}

inline MultiGraph named(const char* text) { return build_named(parse_named(text)); }

inline MPoly poly_x(std::initializer_list<long> ascending) {
    MPoly p;
    std::uint32_t i = 0;
    for (long c : ascending) {
        Exponents e{};
        e[0] = i++;
        p += MPoly::monomial(Integer(c), e);
    }
    return p;
}

}  // namespace oracle
