#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "graphpoly/graph.hpp"
#include "graphpoly/limits.hpp"

namespace graphpoly {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const MultiGraph& g) {
    Matrix m(g.order(), std::vector<int>(g.order(), 0));
    for (const auto& e : g.edges()) {
        ++m[e.u][e.v];
        if (!e.is_loop()) ++m[e.v][e.u];
    }
    return m;
}

/// Colour refinement started from (loops, degree). Colours are ranks of sorted
/// signatures, so isomorphic graphs get corresponding colourings.
std::vector<int> refined_colours(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<int> colour(n);
    {
        std::vector<std::pair<int, int>> initial(n);
        for (int v = 0; v < n; ++v) {
            int deg = 0;
            for (int u = 0; u < n; ++u) {
                if (u != v) deg += m[v][u];
            }
            initial[v] = {m[v][v], deg};
        }
        std::vector<std::pair<int, int>> keys = initial;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), initial[v]) - keys.begin());
        }
    }
    std::size_t classes = 0;
    while (true) {
        std::vector<Signature> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (int u = 0; u < n; ++u) {
                if (u != v && m[v][u] > 0) sig[v].second.push_back({colour[u], m[v][u]});
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<Signature> keys = sig;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
        }
        if (keys.size() == classes) break;
        classes = keys.size();
    }
    return colour;
}

}  // namespace

std::string canonical_form(const MultiGraph& g) {
    const int n = g.order();
    require_within("canonical_form order", n, limits().canonical_order);
    const Matrix m = multiplicity_matrix(g);
    const std::vector<int> colour = refined_colours(m);

    // Twins (equal rows off the pair, equal loops) can be swapped by an
    // automorphism, so only arrangements of twin classes need to be tried.
    std::vector<int> twin(n, -1);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        if (twin[v] >= 0) continue;
        twin[v] = classes;
        for (int u = v + 1; u < n; ++u) {
            if (twin[u] >= 0 || colour[u] != colour[v] || m[u][u] != m[v][v]) continue;
            bool same = true;
            for (int w = 0; w < n && same; ++w) same = w == u || w == v || m[u][w] == m[v][w];
            if (same) twin[u] = classes;
        }
        ++classes;
    }
    std::vector<std::vector<int>> members(classes);
    for (int v = 0; v < n; ++v) members[twin[v]].push_back(v);

    // labels[p] is the twin class placed at position p, cell by cell in colour order
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    std::sort(labels.begin(), labels.end(),
              [&](int a, int b) { return std::tie(colour[a], twin[a], a) < std::tie(colour[b], twin[b], b); });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[labels[j]] == colour[labels[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }
    for (int& l : labels) l = twin[l];

    const std::size_t len = 1 + static_cast<std::size_t>(n) * (n + 1) / 2;
    std::string best;
    std::string current(len, '\0');
    current[0] = static_cast<char>(n);
    std::vector<int> order(n);
    std::vector<std::size_t> used(classes);
    while (true) {
        std::fill(used.begin(), used.end(), 0);
        for (int i = 0; i < n; ++i) order[i] = members[labels[i]][used[labels[i]]++];
        std::size_t k = 1;
        bool worse = false;
        bool better = best.empty();
        for (int i = 0; i < n && !worse; ++i) {
            for (int j = i; j < n; ++j, ++k) {
                current[k] = static_cast<char>(m[order[i]][order[j]]);
                if (!better) {
                    if (current[k] > best[k]) {
                        worse = true;
                        break;
                    }
                    if (current[k] < best[k]) better = true;
                }
            }
        }
        if (better) best = current;
        int c = static_cast<int>(cells.size()) - 1;
        for (; c >= 0; --c) {
            auto [lo, hi] = cells[c];
            if (std::next_permutation(labels.begin() + lo, labels.begin() + hi)) break;
        }
        if (c < 0) break;
    }
    if (best.empty()) best = current;
    return best;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

bool extend_injection(const std::vector<VertexMask>& gadj, const std::vector<VertexMask>& hadj,
                      bool induced, std::vector<int>& image, VertexMask used, int next) {
    const int nh = static_cast<int>(hadj.size());
    if (next == nh) return true;
    const int ng = static_cast<int>(gadj.size());
    for (int cand = 0; cand < ng; ++cand) {
        if ((used >> cand) & 1U) continue;
        bool ok = true;
        for (int w = 0; w < next && ok; ++w) {
            const bool h_edge = (hadj[next] >> w) & 1U;
            const bool g_edge = (gadj[cand] >> image[w]) & 1U;
            ok = induced ? (h_edge == g_edge) : (!h_edge || g_edge);
        }
        if (!ok) continue;
        image[next] = cand;
        if (extend_injection(gadj, hadj, induced, image, used | (VertexMask{1} << cand), next + 1)) {
            return true;
        }
    }
    return false;
}

MultiGraph contract_simple(const MultiGraph& g, std::size_t e) {
    return contract_edge(g, e).simplified();
}

}  // namespace

std::vector<std::string> minor_forms(const MultiGraph& g) {
    require_within("minor search order", g.order(), limits().canonical_order);
    std::set<std::string> seen;
    std::vector<MultiGraph> stack{g.simplified()};
    seen.insert(canonical_form(stack.back()));
    auto visit = [&](MultiGraph h) {
        if (seen.insert(canonical_form(h)).second) stack.push_back(std::move(h));
    };
    while (!stack.empty()) {
        MultiGraph cur = std::move(stack.back());
        stack.pop_back();
        for (int v = 0; v < cur.order(); ++v) visit(delete_vertex(cur, v));
        for (std::size_t e = 0; e < cur.size(); ++e) {
            visit(delete_edge(cur, e));
            visit(contract_simple(cur, e));
        }
    }
    return {seen.begin(), seen.end()};
}

bool contains(const MultiGraph& g, const MultiGraph& h, Containment mode) {
    require_within("contains order", g.order(), limits().canonical_order);
    if (!g.is_simple() || !h.is_simple()) throw std::invalid_argument("contains: simple graphs only");
    if (h.order() > g.order() || h.size() > g.size()) return false;
    if (mode == Containment::minor) {
        const auto forms = minor_forms(g);
        return std::binary_search(forms.begin(), forms.end(), canonical_form(h));
    }
    std::vector<int> image(h.order(), -1);
    return extend_injection(g.adjacency(), h.adjacency(), mode == Containment::induced, image, 0, 0);
}

}  // namespace graphpoly
