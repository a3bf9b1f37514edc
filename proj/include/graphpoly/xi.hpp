#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

/// Weights of an edge-elimination recursion
///   F(G) = F(G - e) + alpha F(G / e) + beta F(G † e),
/// with F(nullgraph) = 1, F(K1) = gamma and F multiplicative over components.
struct EEParams {
    MPoly alpha;
    MPoly beta;
    MPoly gamma;
};

/// (alpha, beta, gamma) = (y, z, x): the weights under which the recursion
/// reproduces xi.
EEParams xi_params();

/// xi(G; x, y, z) as the sum over pairs (A, B) of edge sets with disjoint
/// covered vertex sets of x^(c(A u B) - cov(B)) y^(|A| + |B| - cov(B)) z^cov(B).
/// Throws BoundExceeded past limits().xi_edges.
MPoly xi_statesum(const MultiGraph& g);

/// Evaluates an EE recursion, always eliminating the lowest-index edge.
/// Memoized per call on canonical multigraph forms.
/// Throws BoundExceeded past limits().xi_order.
MPoly ee_recursive(const MultiGraph& g, const EEParams& params);
MPoly xi_recursive(const MultiGraph& g);

enum class XiInstance {
    tutte,               // T(G; x, y)
    matching_bivariate,  // M(G; w1, w2) with w1 -> x, w2 -> y
    matching_defect,     // mu(G; x)
};

/// Substitution instances of xi. The Tutte case substitutes
/// ((x-1)(y-1), y-1, 0) and divides exactly by (x-1)^c(G) (y-1)^|V|;
/// a remainder raises IdentityViolation.
MPoly substitute_instance(const MultiGraph& g, XiInstance which);

/// Bridge factor, loop factor and the two deletion/contraction weights of a
/// Tutte-Grothendieck invariant.
struct ChromInvParams {
    MPoly bridge;
    MPoly loop;
    MPoly alpha;
    MPoly beta;
};

/// bridge = x, loop = y, alpha = z, beta = w.
ChromInvParams symbolic_chrominv_params();

/// f(edgeless) = 1; bridge: A f(G-e); loop: B f(G-e);
/// otherwise alpha f(G-e) + beta f(G/e).
MPoly chromatic_invariant(const MultiGraph& g, const ChromInvParams& p);

struct CharacterizationCheck {
    MPoly lhs;  // f(G) * beta^dx * alpha^dy
    MPoly rhs;  // alpha^(|E|-r) beta^r * sum t_ij A^i beta^(dx-i) B^j alpha^(dy-j)
    bool holds = false;
};

/// Compares f(G) with alpha^(|E|-|V|+k) beta^(|V|-k) T(G; A/beta, B/alpha)
/// after multiplying both sides by beta^dx alpha^dy, where dx, dy are the
/// degrees of T in x and y.
CharacterizationCheck check_tutte_characterization(const MultiGraph& g, const ChromInvParams& p);

}  // namespace graphpoly
