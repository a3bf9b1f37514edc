#include "graphpoly/hankel.hpp"

#include <stdexcept>

#include "graphpoly/harary.hpp"
#include "graphpoly/limits.hpp"

namespace graphpoly {

HankelSection hankel_section(const GraphPolynomial& f, Combine op, const std::vector<MultiGraph>& rows,
                             const std::vector<MultiGraph>& cols) {
    HankelSection s;
    s.op = op;
    s.rows = rows;
    s.cols = cols;
    s.entries.assign(rows.size(), std::vector<MPoly>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            try {
                s.entries[i][j] = f(combine(rows[i], cols[j], op));
            } catch (const BoundExceeded& e) {
                throw BoundExceeded("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
            }
        }
    }
    return s;
}

HankelSection hankel_section(const GraphPolynomial& f, Combine op, const std::vector<MultiGraph>& graphs) {
    return hankel_section(f, op, graphs, graphs);
}

int rank_exact(PolyMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    MPoly previous(1L);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                // every entry stays a minor of the input, so the division is exact
                a[i][j] = exact_div(a[rank][col] * a[i][j] - a[i][col] * a[rank][j], previous);
            }
            a[i][col] = MPoly();
        }
        previous = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_exact(const HankelSection& s) { return rank_exact(s.entries); }

std::vector<std::vector<Rational>> evaluate_section(const HankelSection& s, const Rational& value) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : s.entries) {
        auto& r = out.emplace_back();
        for (const auto& p : row) r.push_back(p.eval({{Var::x, value}}));
    }
    return out;
}

std::string to_string(Combine op) { return op == Combine::join ? "join" : "union"; }
std::string to_string(ZeroFamily f) { return f == ZeroFamily::complete ? "K" : "M"; }

nlohmann::json section_to_json(const HankelSection& s) {
    nlohmann::json j;
    j["op"] = to_string(s.op);
    j["rows"] = nlohmann::json::array();
    j["cols"] = nlohmann::json::array();
    for (const auto& g : s.rows) j["rows"].push_back(write_graph6(g));
    for (const auto& g : s.cols) j["cols"].push_back(write_graph6(g));
    j["entries"] = nlohmann::json::array();
    for (const auto& row : s.entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& p : row) r.push_back(p.to_json());
        j["entries"].push_back(r);
    }
    return j;
}

ZeroPattern zero_pattern(const GraphProperty& p, ZeroFamily family, int i_max, int k_max) {
    if (i_max < 1 || k_max < 1) throw std::invalid_argument("zero_pattern: i_max and k_max must be positive");
    ZeroPattern z;
    z.family = family;
    z.property = p.name();
    z.i_max = i_max;
    z.k_max = k_max;
    z.zero.assign(i_max, std::vector<bool>(k_max, false));
    for (int i = 1; i <= i_max; ++i) {
        const Family tag = family == ZeroFamily::complete ? Family::complete : Family::matching;
        const MPoly chi = harary_polynomial(p, build_named({tag, i, 0})).poly;
        for (int k = 1; k <= k_max; ++k) z.zero[i - 1][k - 1] = chi.eval({{Var::x, Rational(k)}}) == 0;
    }
    z.threshold.assign(k_max, std::nullopt);
    for (int k = 1; k <= k_max; ++k) {
        for (int i = 1; i <= i_max; ++i) {
            if (z.zero[i - 1][k - 1]) {
                z.threshold[k - 1] = i;
                break;
            }
        }
        if (auto t = z.threshold[k - 1]) {
            for (int i = 1; i <= i_max; ++i) {
                if (z.zero[i - 1][k - 1] != (i >= *t)) z.upward_closed = false;
            }
        }
    }
    for (int k = 2; k <= k_max; ++k) {
        auto prev = z.threshold[k - 2];
        auto cur = z.threshold[k - 1];
        if (!prev) {
            if (cur) z.monotone = false;
        } else if (cur && *cur < *prev) {
            z.monotone = false;
        }
    }
    return z;
}

}  // namespace graphpoly
