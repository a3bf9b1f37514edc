#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

/// chi(G; x) by deletion-contraction: loops give 0, parallel edges collapse,
/// E_n gives x^n. Memoized per call on canonical forms.
MPoly chromatic_dc(const MultiGraph& g);

/// Corank-nullity state sum
///   T(G; x, y) = sum over A of (x-1)^(c(A)-c(E)) (y-1)^(|A|+c(A)-|V|).
MPoly tutte_statesum(const MultiGraph& g);

struct MatchingPolys {
    std::vector<Integer> counts;  // counts[i] = matchings with i edges; counts[0] = 1
    MPoly generating;             // sum m_i x^i
    MPoly defect;                 // sum (-1)^i m_i x^(n-2i)
};

MatchingPolys matching_polys(const MultiGraph& g);

/// Decidable test on (G, vertex subset); must be isomorphism invariant.
struct SubsetPredicate {
    std::string name;
    std::function<bool(const MultiGraph&, VertexMask)> test;
};

namespace subset_predicates {
SubsetPredicate independent();
SubsetPredicate dominating();
}  // namespace subset_predicates

/// sum over vertex subsets A with phi(A) of x^|A|.
MPoly subset_generating_poly(const SubsetPredicate& phi, const MultiGraph& g);

enum class SpectralMatrix { adjacency, laplacian };

/// det(xI - M) for a simple graph, computed division-free (Berkowitz).
MPoly spectrum_char_poly(const MultiGraph& g, SpectralMatrix which);

/// Characteristic polynomial of an integer matrix, division-free.
/// Returns coefficients c[0..n] of det(xI - M) = sum c[i] x^i.
std::vector<Integer> berkowitz_char_poly(const std::vector<std::vector<Integer>>& m);

struct NotHararyVerdict {
    Rational value_at_1;
    bool is_obstruction = false;  // value at 1 outside {0, 1}
};

/// A value outside {0, 1} at x = 1 rules out every Harary polynomial.
NotHararyVerdict not_harary_witness(const MPoly& f_of_g);
NotHararyVerdict not_harary_witness(const std::function<MPoly(const MultiGraph&)>& f,
                                    const MultiGraph& g);

}  // namespace graphpoly
