#include "graphpoly/xi.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "graphpoly/classic.hpp"
#include "graphpoly/limits.hpp"

namespace graphpoly {

EEParams xi_params() { return {Y(), Z(), X()}; }

MPoly xi_statesum(const MultiGraph& g) {
    const int m = static_cast<int>(g.size());
    require_within("xi state sum edges", m, limits().xi_edges);
    const int n = g.order();
    const std::uint64_t subsets = std::uint64_t{1} << m;

    // per-subset spanning components and covered vertices
    std::vector<int> comps(subsets);
    std::vector<VertexMask> cover(subsets);
    for (std::uint64_t s = 0; s < subsets; ++s) {
        comps[s] = spanning_components(g, EdgeSubset(s));
        cover[s] = covered_vertices(g, EdgeSubset(s));
    }
    std::vector<VertexMask> ends(m);
    for (int e = 0; e < m; ++e) ends[e] = (VertexMask{1} << g.edge(e).u) | (VertexMask{1} << g.edge(e).v);

    std::map<std::array<int, 3>, std::uint64_t> counts;
    for (std::uint64_t b = 0; b < subsets; ++b) {
        const int size_b = __builtin_popcountll(b);
        const int cov_b = comps[b] - (n - __builtin_popcountll(cover[b]));
        std::uint64_t allowed = 0;
        for (int e = 0; e < m; ++e) {
            if ((ends[e] & cover[b]) == 0) allowed |= std::uint64_t{1} << e;
        }
        // submasks of `allowed`, including the empty set
        for (std::uint64_t a = allowed;; a = (a - 1) & allowed) {
            // A and B touch disjoint vertex sets, so their ranks add
            const int c_union = comps[a] + comps[b] - n;
            ++counts[{c_union - cov_b, __builtin_popcountll(a) + size_b - cov_b, cov_b}];
            if (a == 0) break;
        }
    }
    MPoly out;
    for (const auto& [e, c] : counts) {
        Exponents ex{};
        for (int v = 0; v < 3; ++v) ex[v] = static_cast<std::uint32_t>(e[v]);
        Integer coeff;
        mpz_import(coeff.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &c);
        out += MPoly::monomial(coeff, ex);
    }
    return out;
}

namespace {

class EERecursion {
public:
    explicit EERecursion(const EEParams& p) : p_(p) {}

    MPoly operator()(const MultiGraph& g) {
        if (g.order() == 0) return MPoly(1L);
        const auto comps = g.components();
        if (comps.size() > 1) {
            MPoly prod(1L);
            for (auto c : comps) prod *= (*this)(g.induced(c));
            return prod;
        }
        if (g.size() == 0) return p_.gamma;
        std::string key = canonical_form(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        MPoly r = (*this)(delete_edge(g, 0)) + p_.alpha * (*this)(contract_edge(g, 0)) +
                  p_.beta * (*this)(extract_edge(g, 0));
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    const EEParams& p_;
    std::map<std::string, MPoly> memo_;
};

}  // namespace

MPoly ee_recursive(const MultiGraph& g, const EEParams& params) {
    require_within("edge-elimination recursion order", g.order(), limits().xi_order);
    return EERecursion(params)(g);
}

MPoly xi_recursive(const MultiGraph& g) { return ee_recursive(g, xi_params()); }

MPoly substitute_instance(const MultiGraph& g, XiInstance which) {
    const MPoly xi = xi_statesum(g);
    switch (which) {
    case XiInstance::tutte: {
        const MPoly xm1 = X() - MPoly(1L);
        const MPoly ym1 = Y() - MPoly(1L);
        const MPoly shifted = xi.substitute({{Var::x, xm1 * ym1}, {Var::y, ym1}, {Var::z, MPoly()}});
        const MPoly divisor = xm1.pow(static_cast<unsigned>(g.component_count())) *
                              ym1.pow(static_cast<unsigned>(g.order()));
        return exact_div(shifted, divisor);
    }
    case XiInstance::matching_bivariate:
        return xi.substitute({{Var::x, X()}, {Var::y, MPoly()}, {Var::z, Y()}});
    case XiInstance::matching_defect:
        return xi.substitute({{Var::x, X()}, {Var::y, MPoly()}, {Var::z, MPoly(-1L)}});
    }
    throw std::invalid_argument("unknown xi instance");
}

ChromInvParams symbolic_chrominv_params() { return {X(), Y(), Z(), W()}; }

namespace {

bool is_bridge(const MultiGraph& g, std::size_t e) {
    if (g.edge(e).is_loop()) return false;
    return delete_edge(g, e).component_count() > g.component_count();
}

MPoly chromatic_invariant_rec(const MultiGraph& g, const ChromInvParams& p) {
    if (g.size() == 0) return MPoly(1L);
    const MultiGraph minus = delete_edge(g, 0);
    if (g.edge(0).is_loop()) return p.loop * chromatic_invariant_rec(minus, p);
    if (is_bridge(g, 0)) return p.bridge * chromatic_invariant_rec(minus, p);
    return p.alpha * chromatic_invariant_rec(minus, p) +
           p.beta * chromatic_invariant_rec(contract_edge(g, 0), p);
}

}  // namespace

MPoly chromatic_invariant(const MultiGraph& g, const ChromInvParams& p) {
    require_within("chromatic invariant edges", static_cast<long long>(g.size()), limits().tutte_edges);
    return chromatic_invariant_rec(g, p);
}

CharacterizationCheck check_tutte_characterization(const MultiGraph& g, const ChromInvParams& p) {
    if (p.alpha.is_zero() || p.beta.is_zero()) {
        throw std::invalid_argument("characterization needs nonzero alpha and beta");
    }
    const MPoly t = tutte_statesum(g);
    const unsigned dx = t.degree(Var::x);
    const unsigned dy = t.degree(Var::y);
    const int rank = g.order() - g.component_count();
    const int nullity = static_cast<int>(g.size()) - rank;

    CharacterizationCheck out;
    out.lhs = chromatic_invariant(g, p) * p.beta.pow(dx) * p.alpha.pow(dy);
    MPoly cleared;
    for (const auto& [e, c] : t.terms()) {
        cleared += MPoly(c) * p.bridge.pow(e[0]) * p.beta.pow(dx - e[0]) * p.loop.pow(e[1]) *
                   p.alpha.pow(dy - e[1]);
    }
    out.rhs = p.alpha.pow(static_cast<unsigned>(nullity)) * p.beta.pow(static_cast<unsigned>(rank)) * cleared;
    out.holds = out.lhs == out.rhs;
    return out;
}

}  // namespace graphpoly
