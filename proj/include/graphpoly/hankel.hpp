#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"
#include "graphpoly/properties.hpp"

namespace graphpoly {

using GraphPolynomial = std::function<MPoly(const MultiGraph&)>;
using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Finite section of a connection matrix: entry (i, j) = F(row_i op col_j).
struct HankelSection {
    Combine op = Combine::disjoint_union;
    std::vector<MultiGraph> rows;
    std::vector<MultiGraph> cols;
    PolyMatrix entries;
};

/// Materializes every entry. A BoundExceeded from F is rethrown naming the entry.
HankelSection hankel_section(const GraphPolynomial& f, Combine op, const std::vector<MultiGraph>& rows,
                             const std::vector<MultiGraph>& cols);
HankelSection hankel_section(const GraphPolynomial& f, Combine op, const std::vector<MultiGraph>& graphs);

/// Rank over the field of rational functions, by fraction-free (Bareiss)
/// elimination with exact polynomial division.
int rank_exact(PolyMatrix m);
int rank_exact(const HankelSection& s);

/// Entries evaluated at x = value (other variables must not occur).
std::vector<std::vector<Rational>> evaluate_section(const HankelSection& s, const Rational& value);

/// {"op", "rows": [graph6...], "cols": [...], "entries": [[poly-json...]...]}
nlohmann::json section_to_json(const HankelSection& s);

enum class ZeroFamily { complete, matching };  // K_i or M_i

/// Zero/nonzero table of chi_P(family_i; k) for i = 1..i_max, k = 1..k_max.
struct ZeroPattern {
    ZeroFamily family = ZeroFamily::complete;
    std::string property;
    int i_max = 0;
    int k_max = 0;
    std::vector<std::vector<bool>> zero;       // zero[i-1][k-1]
    std::vector<std::optional<int>> threshold; // threshold[k-1] = least i with a zero value
    bool upward_closed = true;  // for each k: zero exactly when i >= threshold(k)
    bool monotone = true;       // threshold nondecreasing in k (no zero counts as +infinity)

    /// Largest i with a nonzero value, i.e. threshold - 1; nullopt when no zero
    /// appears in the window.
    std::optional<int> f(int k) const {
        auto t = threshold.at(k - 1);
        return t ? std::optional<int>(*t - 1) : std::nullopt;
    }
};

ZeroPattern zero_pattern(const GraphProperty& p, ZeroFamily family, int i_max, int k_max);

std::string to_string(Combine op);
std::string to_string(ZeroFamily f);

}  // namespace graphpoly
