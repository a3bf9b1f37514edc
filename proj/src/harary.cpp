#include "graphpoly/harary.hpp"

#include <stdexcept>

#include "graphpoly/limits.hpp"

namespace graphpoly {

namespace {

class PartitionCounter {
public:
    PartitionCounter(const GraphProperty& p, const MultiGraph& g, bool prune)
        : p_(p), g_(g), prune_(prune), good_(std::size_t{1} << g.order(), -1),
          blocks_(g.order(), 0), counts_(g.order() + 1, 0) {}

    std::vector<std::uint64_t> run() {
        assign(0);
        return counts_;
    }

private:
    bool good(VertexMask block) {
        auto& slot = good_[block];
        if (slot < 0) slot = p_.holds(g_.induced(block)) ? 1 : 0;
        return slot == 1;
    }

    void assign(int v) {
        if (v == g_.order()) {
            if (!prune_) {
                for (int j = 0; j < used_; ++j) {
                    if (!good(blocks_[j])) return;
                }
            }
            ++counts_[used_];
            return;
        }
        const VertexMask bit = VertexMask{1} << v;
        for (int j = 0; j < used_; ++j) {
            blocks_[j] |= bit;
            if (!prune_ || good(blocks_[j])) assign(v + 1);
            blocks_[j] &= ~bit;
        }
        blocks_[used_++] = bit;
        if (!prune_ || good(bit)) assign(v + 1);
        blocks_[--used_] = 0;
    }

    const GraphProperty& p_;
    const MultiGraph& g_;
    bool prune_;
    std::vector<signed char> good_;
    std::vector<VertexMask> blocks_;
    int used_ = 0;
    std::vector<std::uint64_t> counts_;  // counts_[i] = partitions into i good blocks
};

FallingCoeffs enumerate_coefficients(const GraphProperty& p, const MultiGraph& g) {
    require_within("harary order", g.order(), limits().harary_order);
    const bool prune = verified_hereditary(p);
    auto counts = PartitionCounter(p, g, prune).run();
    FallingCoeffs b;
    for (int i = 1; i <= g.order(); ++i) {
        Integer c;
        mpz_import(c.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &counts[i]);
        b.values.push_back(c);
    }
    return b;
}

/// Coefficients of a union whose blocks never cross components.
FallingCoeffs convolve(const FallingCoeffs& a, const FallingCoeffs& b) {
    FallingCoeffs out;
    out.values.assign(a.size() + b.size(), Integer(0));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) out.values[i + j - 1] += a.at(i) * b.at(j);
    }
    return out;
}

void require_simple(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("Harary polynomials take simple graphs");
}

}  // namespace

FallingCoeffs partition_coefficients(const GraphProperty& p, const MultiGraph& g) {
    require_simple(g);
    if (g.order() == 0) return {};
    const auto comps = g.components();
    if (!p.members_connected() || comps.size() == 1) return enumerate_coefficients(p, g);
    FallingCoeffs acc;
    bool first = true;
    for (auto c : comps) {
        FallingCoeffs part = enumerate_coefficients(p, g.induced(c));
        acc = first ? part : convolve(acc, part);
        first = false;
    }
    return acc;
}

std::optional<int> p_chromatic_number(const GraphProperty& p, const MultiGraph& g) {
    const FallingCoeffs b = partition_coefficients(p, g);
    for (std::size_t i = 1; i <= b.size(); ++i) {
        if (b.at(i) > 0) return static_cast<int>(i);
    }
    return std::nullopt;
}

HararyResult harary_polynomial(const GraphProperty& p, const MultiGraph& g) {
    HararyResult r;
    r.property = p.name();
    r.graph = g;
    r.coeffs = partition_coefficients(p, g);
    r.poly = g.order() == 0 ? MPoly(1L) : assemble_from_falling(r.coeffs);
    for (std::size_t i = 1; i <= r.coeffs.size(); ++i) {
        if (r.coeffs.at(i) > 0) {
            r.chromatic_number = static_cast<int>(i);
            break;
        }
    }
    return r;
}

Integer count_colorings_direct(const GraphProperty& p, const MultiGraph& g, int k) {
    require_simple(g);
    if (k < 0) throw std::invalid_argument("colour count must be nonnegative");
    const int n = g.order();
    if (n == 0) return 1;
    if (k == 0) return 0;
    Integer total_maps;
    mpz_ui_pow_ui(total_maps.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    if (total_maps > Integer(std::to_string(limits().direct_colorings))) {
        throw BoundExceeded("direct colouring count: " + std::to_string(k) + "^" +
                            std::to_string(n) + " maps exceeds bound " +
                            std::to_string(limits().direct_colorings));
    }
    std::vector<signed char> member(std::size_t{1} << n, -1);
    std::vector<int> colour(n, 0);
    std::vector<VertexMask> classes(k);
    Integer count = 0;
    while (true) {
        std::fill(classes.begin(), classes.end(), 0);
        for (int v = 0; v < n; ++v) classes[colour[v]] |= VertexMask{1} << v;
        bool ok = true;
        for (auto cls : classes) {
            if (cls == 0) continue;
            auto& m = member[cls];
            if (m < 0) m = p.holds(g.induced(cls)) ? 1 : 0;
            if (m == 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int v = 0;
        while (v < n && ++colour[v] == k) colour[v++] = 0;
        if (v == n) break;
    }
    return count;
}

}  // namespace graphpoly
