#pragma once

#include <optional>
#include <string>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"
#include "graphpoly/properties.hpp"

namespace graphpoly {

struct HararyResult {
    std::string property;
    MultiGraph graph;
    FallingCoeffs coeffs;
    MPoly poly;                              // sum of b_i x_(i); 1 for the nullgraph
    std::optional<int> chromatic_number;     // least i with b_i > 0
};

/// b_i = number of partitions of V(G) into i blocks, each inducing a member of P.
///
/// Blocks are grown vertex by vertex (restricted growth strings). A block that
/// already induces a non-member is abandoned only when P is verified
/// hereditary; otherwise every partition is completed and checked.
///
/// When every member of P is connected, no block can span two components and
/// the coefficients of G are the convolution of those of its components; the
/// order bound then applies per component. Throws BoundExceeded past
/// limits().harary_order and std::invalid_argument for non-simple input.
FallingCoeffs partition_coefficients(const GraphProperty& p, const MultiGraph& g);

HararyResult harary_polynomial(const GraphProperty& p, const MultiGraph& g);

/// Number of maps V(G) -> {1..k} whose nonempty colour classes all induce
/// members of P, by direct enumeration. Shares no code with the partition
/// counter. Throws BoundExceeded when k^n exceeds limits().direct_colorings.
Integer count_colorings_direct(const GraphProperty& p, const MultiGraph& g, int k);

std::optional<int> p_chromatic_number(const GraphProperty& p, const MultiGraph& g);

}  // namespace graphpoly
