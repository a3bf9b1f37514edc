#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "graphpoly/graph.hpp"
#include "graphpoly/limits.hpp"

namespace graphpoly {

namespace {

constexpr int kGraph6MaxOrder = 62;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool looks_like_edge_list(std::string_view s) {
    // edge lists are digits and whitespace only; graph6 never starts with a digit
    // followed by whitespace
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c));
    });
}

}  // namespace

MultiGraph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
    }
    if (text[0] == 126) throw ParseError("graph6: orders above 62 are not accepted");
    const int n = text[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes) {
        throw ParseError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size()));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
        }
    }
    for (; k < bytes * 6; ++k) {
        int byte = text[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return MultiGraph(n, std::move(edges));
}

std::string write_graph6(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("graph6 encodes simple graphs only");
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6: order above 62");
    const auto adj = g.adjacency();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | static_cast<int>((adj[u] >> v) & 1U);
            if (++filled == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
    return out;
}

MultiGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            if (!trim(out).empty()) return true;
        }
        return false;
    };
    auto read_pair = [](const std::string& l, long& a, long& b, const char* what) {
        std::istringstream ls(l);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw ParseError(std::string("edge list: malformed ") + what + " line '" + l + "'");
        }
    };
    if (!next_line(line)) throw ParseError("edge list: missing header");
    long n = 0;
    long m = 0;
    read_pair(line, n, m, "header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
    if (n > MultiGraph::kMaxOrder) throw ParseError("edge list: order above 64");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        if (!next_line(line)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        long u = 0;
        long v = 0;
        read_pair(line, u, v, "edge");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge list: endpoint out of range in '" + line + "'");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (next_line(line)) throw ParseError("edge list: trailing content '" + line + "'");
    return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const MultiGraph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

MultiGraph parse_graph(std::string_view text) {
    std::string_view t = trim(text);
    if (t.empty()) throw ParseError("empty graph text");
    if (looks_like_edge_list(t)) return parse_edge_list(t);
    return parse_graph6(t);
}

}  // namespace graphpoly
