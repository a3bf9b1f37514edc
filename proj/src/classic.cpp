#include "graphpoly/classic.hpp"

#include <map>
#include <stdexcept>

#include "graphpoly/limits.hpp"

namespace graphpoly {

// ---------------------------------------------------------------- chromatic

namespace {

class ChromaticDC {
public:
    MPoly operator()(const MultiGraph& g) {
        if (g.has_loops()) return MPoly();
        MultiGraph s = g.simplified();
        if (s.size() == 0) return X().pow(static_cast<unsigned>(s.order()));
        const std::size_t n = static_cast<std::size_t>(s.order());
        if (s.size() == n * (n - 1) / 2) return falling_factorial(static_cast<unsigned>(n));
        std::string key = s.order() <= limits().canonical_order ? canonical_form(s)
                                                                : write_edge_list(s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        MPoly r = (*this)(delete_edge(s, 0)) - (*this)(contract_edge(s, 0));
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    std::map<std::string, MPoly> memo_;
};

}  // namespace

MPoly chromatic_dc(const MultiGraph& g) {
    require_within("chromatic order", g.order(), limits().chromatic_order);
    return ChromaticDC{}(g);
}

// ---------------------------------------------------------------- Tutte

MPoly tutte_statesum(const MultiGraph& g) {
    const int m = static_cast<int>(g.size());
    require_within("Tutte state sum edges", m, limits().tutte_edges);
    const int n = g.order();
    const int c_all = spanning_components(g, EdgeSubset::all(g.size()));
    // counts[i][j] = subsets with c(A)-c(E) = i and nullity j
    std::map<std::pair<int, int>, Integer> counts;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        EdgeSubset a(bits);
        const int c = spanning_components(g, a);
        ++counts[{c - c_all, a.size() + c - n}];
    }
    const MPoly xm1 = X() - MPoly(1L);
    const MPoly ym1 = Y() - MPoly(1L);
    MPoly t;
    for (const auto& [ij, cnt] : counts) {
        t += MPoly(cnt) * xm1.pow(static_cast<unsigned>(ij.first)) * ym1.pow(static_cast<unsigned>(ij.second));
    }
    return t;
}

// ---------------------------------------------------------------- matchings

namespace {

void count_matchings(const MultiGraph& g, std::size_t from, VertexMask used, int size,
                     std::vector<Integer>& counts) {
    ++counts[size];
    for (std::size_t e = from; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        const VertexMask ends = (VertexMask{1} << ed.u) | (VertexMask{1} << ed.v);
        if (ed.is_loop() || (used & ends) != 0) continue;
        count_matchings(g, e + 1, used | ends, size + 1, counts);
    }
}

}  // namespace

MatchingPolys matching_polys(const MultiGraph& g) {
    require_within("matching enumeration edges", static_cast<long long>(g.size()), limits().tutte_edges);
    MatchingPolys out;
    std::vector<Integer> counts(g.order() / 2 + 1, Integer(0));
    count_matchings(g, 0, 0, 0, counts);
    out.counts = counts;
    const int n = g.order();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        Exponents e{};
        e[0] = static_cast<std::uint32_t>(i);
        out.generating += MPoly::monomial(counts[i], e);
        e[0] = static_cast<std::uint32_t>(n - 2 * static_cast<int>(i));
        out.defect += MPoly::monomial(i % 2 == 0 ? counts[i] : Integer(-counts[i]), e);
    }
    return out;
}

// ---------------------------------------------------------------- subset generating functions

namespace subset_predicates {

SubsetPredicate independent() {
    return {"independent", [](const MultiGraph& g, VertexMask a) {
                for (const auto& e : g.edges()) {
                    if (((a >> e.u) & 1U) && ((a >> e.v) & 1U)) return false;
                }
                return true;
            }};
}

SubsetPredicate dominating() {
    return {"dominating", [](const MultiGraph& g, VertexMask a) {
                const auto adj = g.adjacency();
                VertexMask covered = a;
                for (int v = 0; v < g.order(); ++v) {
                    if ((a >> v) & 1U) covered |= adj[v];
                }
                return covered == g.all_vertices();
            }};
}

}  // namespace subset_predicates

MPoly subset_generating_poly(const SubsetPredicate& phi, const MultiGraph& g) {
    require_within("subset generating function order", g.order(), limits().subset_order);
    std::vector<Integer> by_size(g.order() + 1, Integer(0));
    for (VertexMask a = 0; a <= g.all_vertices(); ++a) {
        if (phi.test(g, a)) ++by_size[__builtin_popcountll(a)];
        if (a == g.all_vertices()) break;
    }
    MPoly out;
    for (std::size_t i = 0; i < by_size.size(); ++i) {
        Exponents e{};
        e[0] = static_cast<std::uint32_t>(i);
        out += MPoly::monomial(by_size[i], e);
    }
    return out;
}

// ---------------------------------------------------------------- characteristic polynomials

std::vector<Integer> berkowitz_char_poly(const std::vector<std::vector<Integer>>& m) {
    const int n = static_cast<int>(m.size());
    // p holds det(xI - trailing block) with descending coefficients
    std::vector<Integer> p{Integer(1)};
    for (int s = n - 1; s >= 0; --s) {
        const int size = n - s;
        // Toeplitz column: 1, -a, -R C, -R M1 C, ...
        std::vector<Integer> t(size + 1);
        t[0] = 1;
        t[1] = -m[s][s];
        std::vector<Integer> w(size - 1);
        for (int i = 0; i < size - 1; ++i) w[i] = m[s + 1 + i][s];
        for (int k = 2; k <= size; ++k) {
            Integer dot = 0;
            for (int i = 0; i < size - 1; ++i) dot += m[s][s + 1 + i] * w[i];
            t[k] = -dot;
            std::vector<Integer> next(size - 1, Integer(0));
            for (int i = 0; i < size - 1; ++i) {
                for (int j = 0; j < size - 1; ++j) next[i] += m[s + 1 + i][s + 1 + j] * w[j];
            }
            w = std::move(next);
        }
        std::vector<Integer> q(size + 1, Integer(0));
        for (int i = 0; i <= size; ++i) {
            for (int j = 0; j < size && j <= i; ++j) q[i] += t[i - j] * p[j];
        }
        p = std::move(q);
    }
    // ascending order for callers
    return {p.rbegin(), p.rend()};
}

MPoly spectrum_char_poly(const MultiGraph& g, SpectralMatrix which) {
    if (!g.is_simple()) throw std::invalid_argument("characteristic polynomials take simple graphs");
    require_within("characteristic polynomial order", g.order(), limits().spectrum_order);
    const int n = g.order();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
    for (const auto& e : g.edges()) {
        const int sign = which == SpectralMatrix::adjacency ? 1 : -1;
        m[e.u][e.v] = sign;
        m[e.v][e.u] = sign;
    }
    if (which == SpectralMatrix::laplacian) {
        for (int v = 0; v < n; ++v) m[v][v] = g.degree(v);
    }
    const auto c = berkowitz_char_poly(m);
    MPoly out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Exponents e{};
        e[0] = static_cast<std::uint32_t>(i);
        out += MPoly::monomial(c[i], e);
    }
    return out;
}

// ---------------------------------------------------------------- not-Harary witness

NotHararyVerdict not_harary_witness(const MPoly& f_of_g) {
    NotHararyVerdict v;
    v.value_at_1 = f_of_g.eval({{Var::x, Rational(1)}});
    v.is_obstruction = v.value_at_1 != 0 && v.value_at_1 != 1;
    return v;
}

NotHararyVerdict not_harary_witness(const std::function<MPoly(const MultiGraph&)>& f,
                                    const MultiGraph& g) {
    return not_harary_witness(f(g));
}

}  // namespace graphpoly
