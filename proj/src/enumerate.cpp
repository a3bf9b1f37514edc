#include <algorithm>
#include <map>
#include <stdexcept>

#include "graphpoly/graph.hpp"
#include "graphpoly/limits.hpp"

namespace graphpoly {

std::vector<MultiGraph> enumerate_nonisomorphic(int n_max) {
    if (n_max < 0) throw std::invalid_argument("enumerate_nonisomorphic: negative order");
    require_within("enumerate_nonisomorphic order", n_max, 7);

    std::vector<MultiGraph> out{MultiGraph(0)};
    std::vector<MultiGraph> previous{MultiGraph(0)};
    for (int n = 1; n <= n_max; ++n) {
        // every graph of order n is some order-(n-1) class plus a new vertex
        std::map<std::string, MultiGraph> level;
        for (const auto& base : previous) {
            const VertexMask limit = VertexMask{1} << (n - 1);
            for (VertexMask nbrs = 0; nbrs < limit; ++nbrs) {
                std::vector<Edge> edges = base.edges();
                for (int u = 0; u < n - 1; ++u) {
                    if ((nbrs >> u) & 1U) edges.push_back({u, n - 1});
                }
                MultiGraph g(n, std::move(edges));
                level.try_emplace(canonical_form(g), std::move(g));
            }
        }
        std::vector<std::pair<std::string, MultiGraph>> sorted(level.begin(), level.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
        previous.clear();
        for (auto& [form, g] : sorted) {
            previous.push_back(g);
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace graphpoly
