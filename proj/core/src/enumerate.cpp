#include "dmagic/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dmagic {

namespace {

// Depth-first construction of the relabeling position by position. Placing
// position j fixes the j bits of column j, so a prefix that already exceeds
// the best code's prefix can be abandoned.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2), at_(n_), used_(n_, false)
    {
    }

    CanonicalForm run()
    {
        best_ = ~std::uint64_t{0};
        found_ = false;
        descend(0, 0);
        CanonicalForm out;
        out.code = found_ ? best_ : 0;
        out.perm.assign(n_, 0);
        for (Vertex pos = 0; pos < n_; ++pos) out.perm[best_at_[pos]] = pos;
        return out;
    }

private:
    void descend(std::size_t pos, std::uint64_t prefix)
    {
        if (pos == n_) {
            if (!found_ || prefix < best_) {
                best_ = prefix;
                best_at_ = at_;
                found_ = true;
            }
            return;
        }
        const std::size_t prefix_bits = pos * (pos + 1) / 2;
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::uint64_t code = prefix;
            for (std::size_t i = 0; i < pos; ++i) code = (code << 1) | (g_.adjacent(at_[i], v) ? 1 : 0);
            if (found_ && total_bits_ > 0) {
                std::uint64_t best_prefix = best_ >> (total_bits_ - prefix_bits);
                if (code > best_prefix) continue;
            }
            used_[v] = true;
            at_[pos] = v;
            descend(pos + 1, code);
            used_[v] = false;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t total_bits_;
    std::vector<Vertex> at_;
    std::vector<bool> used_;
    std::vector<Vertex> best_at_;
    std::uint64_t best_ = 0;
    bool found_ = false;
};

std::vector<Graph> compute_level(std::size_t n, const std::vector<Graph>& previous)
{
    std::map<std::uint64_t, Graph> reps;
    for (const auto& base : previous) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> edges = base.edges();
            for (Vertex v = 0; v + 1 < n; ++v)
                if (mask & (std::uint64_t{1} << v)) edges.push_back({v, n - 1});
            Graph g(n, edges);
            auto form = canonical_form(g);
            if (!reps.contains(form.code)) reps.emplace(form.code, permute(g, form.perm));
        }
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

const std::vector<Graph>& level(std::size_t n)
{
    static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> cache;
    static std::array<std::once_flag, kMaxEnumerationOrder + 1> flags;
    std::call_once(flags[n], [n] {
        if (n == 1)
            cache[1].push_back(Graph(1, std::span<const Edge>{}));
        else
            cache[n] = compute_level(n, level(n - 1));
    });
    return cache[n];
}

}  // namespace

CanonicalForm canonical_form(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical_form supports order <= 11");
    return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g)
{
    return permute(g, canonical_form(g).perm);
}

std::vector<Graph> enumerate_graphs(std::size_t n, const GraphPredicate& keep)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 7, got " + std::to_string(n));
    const auto& all = level(n);
    if (!keep) return all;
    std::vector<Graph> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), keep);
    return out;
}

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& graphs)
{
    std::vector<Graph> out;
    for (const auto& base : graphs) {
        const std::size_t n = base.order() + 1;
        if (n > 20) throw std::invalid_argument("extend_by_vertex limited to order 20");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> edges = base.edges();
            for (Vertex v = 0; v + 1 < n; ++v)
                if (mask & (std::uint64_t{1} << v)) edges.push_back({v, n - 1});
            out.emplace_back(n, edges);
        }
    }
    return out;
}

}  // namespace dmagic
