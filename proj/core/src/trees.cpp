#include "dmagic/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dmagic {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

std::string encode_rooted(const Adjacency& adj, Vertex root, Vertex parent)
{
    std::vector<std::string> children;
    for (Vertex c : adj[root])
        if (c != parent) children.push_back(encode_rooted(adj, c, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (auto& c : children) out += c;
    out += ')';
    return out;
}

// Peel leaves layer by layer; the last one or two survivors are the centers.
std::vector<Vertex> centers(const Adjacency& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> degree(n);
    std::vector<Vertex> layer;
    for (Vertex x = 0; x < n; ++x) {
        degree[x] = adj[x].size();
        if (degree[x] <= 1) layer.push_back(x);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex y : adj[leaf])
                if (--degree[y] == 1) next.push_back(y);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string canonical_string(const Adjacency& adj)
{
    std::string best;
    for (Vertex c : centers(adj)) {
        auto s = encode_rooted(adj, c, adj.size());
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::vector<Edge> pruefer_edges(std::span<const Vertex> sequence)
{
    const std::size_t n = sequence.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : sequence) {
        if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
        ++degree[v];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v : sequence) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.push_back({leaf, v});
        --degree[leaf];
        --degree[v];
    }
    Vertex a = n, b = n;
    for (Vertex x = 0; x < n; ++x) {
        if (degree[x] == 1) {
            if (a == n) a = x;
            else b = x;
        }
    }
    edges.push_back({a, b});
    return edges;
}

}  // namespace

Graph tree_from_pruefer(std::span<const Vertex> sequence)
{
    auto edges = pruefer_edges(sequence);
    return Graph(sequence.size() + 2, edges);
}

std::string tree_canonical_string(const Graph& g)
{
    if (!g.connected() || g.edge_count() + 1 != g.order())
        throw std::invalid_argument("tree_canonical_string needs a tree");
    Adjacency adj(g.order());
    for (Vertex x = 0; x < g.order(); ++x) adj[x] = g.neighbors(x);
    return canonical_string(adj);
}

std::vector<Graph> enumerate_trees(std::size_t n)
{
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 10");
    if (n == 1) return {Graph(1, std::span<const Edge>{})};
    if (n == 2) return {Graph(2, {Edge{0, 1}})};

    std::map<std::string, Graph> reps;
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
        auto edges = pruefer_edges(seq);
        Adjacency adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        auto key = canonical_string(adj);
        if (!reps.contains(key)) reps.emplace(std::move(key), Graph(n, edges));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    std::vector<Graph> out;
    for (auto& [key, t] : reps) out.push_back(std::move(t));
    return out;
}

}  // namespace dmagic
