#include "dmagic/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "dmagic/fracdom.hpp"

namespace dmagic {

std::string to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::ExhaustedNone: return "EXHAUSTED_NONE";
    case SearchStatus::Aborted: return "ABORTED";
    }
    return "?";
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g, const DistanceSet& set)
{
    // x ~ y when N_D(x) and N_D(y) agree outside {x, y}: swapping their
    // labels is then an automorphism of the D-distance relation. The
    // relation is transitive (classes are all-related or all-unrelated), so
    // comparing against each class's first member suffices.
    const std::size_t n = g.order();
    std::vector<std::vector<bool>> in(n, std::vector<bool>(n, false));
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y : d_neighborhood(g, x, set)) in[x][y] = true;
    auto interchangeable = [&](Vertex x, Vertex y) {
        for (Vertex z = 0; z < n; ++z)
            if (z != x && z != y && in[x][z] != in[y][z]) return false;
        return true;
    };
    std::vector<std::vector<Vertex>> classes;
    for (Vertex x = 0; x < n; ++x) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return interchangeable(c.front(), x); });
        if (it == classes.end()) classes.push_back({x});
        else it->push_back(x);
    }
    return classes;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Aborted {};

class Search {
public:
    Search(const Graph& g, const DistanceSet& set, const SearchOptions& options, SearchOutcome& out)
        : options_(options), out_(out), n_(g.order()), start_(Clock::now())
    {
        nbhd_.resize(n_);
        for (Vertex x = 0; x < n_; ++x) nbhd_[x] = d_neighborhood_mask(g, x, set);
        eqs_of_.resize(n_);
        for (Vertex x = 0; x < n_; ++x)
            for (Vertex y = 0; y < n_; ++y)
                if (nbhd_[x] >> y & 1) eqs_of_[y].push_back(x);

        twin_of_.assign(n_, 0);
        auto classes = twin_classes(g, set);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (Vertex x : classes[c]) twin_of_[x] = c;
        classes_ = std::move(classes);

        label_.assign(n_, 0);
        sum_.assign(n_, 0);
        left_.resize(n_);
        for (Vertex x = 0; x < n_; ++x) left_[x] = std::popcount(nbhd_[x]);
        order_ = assignment_order();
    }

    void run(std::optional<Weight> target)
    {
        target_ = target;
        try {
            descend(0);
        } catch (const Aborted&) {
            aborted_ = true;
        }
    }

    bool aborted() const noexcept { return aborted_; }
    const std::vector<std::vector<Label>>& solutions() const noexcept { return solutions_; }
    const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }

private:
    // Most-constrained first: prefer the vertex that completes the most
    // weight equations, then the one touching the most partially ordered
    // equations, then the smallest index.
    std::vector<Vertex> assignment_order() const
    {
        std::vector<Vertex> order;
        Mask placed = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            Vertex best = n_;
            std::pair<int, int> best_score{-1, -1};
            for (Vertex v = 0; v < n_; ++v) {
                if (placed >> v & 1) continue;
                int completes = 0;
                int touched = 0;
                for (Vertex x : eqs_of_[v]) {
                    Mask open = nbhd_[x] & ~placed;
                    if (std::popcount(open) == 1) ++completes;
                    if (nbhd_[x] & placed) ++touched;
                }
                std::pair<int, int> score{completes, touched};
                if (score > best_score) {
                    best_score = score;
                    best = v;
                }
            }
            order.push_back(best);
            placed |= Mask{1} << best;
        }
        return order;
    }

    void tick()
    {
        ++out_.stats.nodes;
        if (options_.node_limit && out_.stats.nodes > *options_.node_limit) {
            out_.abort_reason = "node limit";
            throw Aborted{};
        }
        if (options_.time_limit && (out_.stats.nodes & 0xfff) == 0 &&
            Clock::now() - start_ > *options_.time_limit) {
            out_.abort_reason = "time limit";
            throw Aborted{};
        }
    }

    bool feasible(Vertex v, std::size_t depth)
    {
        for (Vertex x : eqs_of_[v]) {
            if (left_[x] != 0) continue;
            if (!target_) {
                target_ = sum_[x];
                target_depth_ = depth;
            } else if (sum_[x] != *target_) {
                ++out_.stats.prunes.equation;
                return false;
            }
        }
        if (!target_) return true;

        // prefix sums of the smallest / largest unused labels
        small_.assign(1, 0);
        large_.assign(1, 0);
        for (Label l = 1; l <= static_cast<Label>(n_); ++l)
            if (!(used_ >> l & 1)) small_.push_back(small_.back() + l);
        for (Label l = static_cast<Label>(n_); l >= 1; --l)
            if (!(used_ >> l & 1)) large_.push_back(large_.back() + l);
        for (Vertex x = 0; x < n_; ++x) {
            if (left_[x] == 0) continue;
            if (sum_[x] + small_[left_[x]] > *target_ || sum_[x] + large_[left_[x]] < *target_) {
                ++out_.stats.prunes.bound;
                return false;
            }
        }
        return true;
    }

    void descend(std::size_t depth)
    {
        if (depth == n_) {
            solutions_.push_back(label_);
            stop_ = !options_.enumerate_all;
            return;
        }
        const Vertex v = order_[depth];
        Label lo = 1;
        Label hi = static_cast<Label>(n_);
        if (options_.use_twin_pruning) {
            for (Vertex u : classes_[twin_of_[v]]) {
                if (label_[u] == 0) continue;
                if (u < v) lo = std::max(lo, label_[u] + 1);
                else hi = std::min(hi, label_[u] - 1);
            }
            out_.stats.prunes.twin += static_cast<std::uint64_t>((lo - 1) + (static_cast<Label>(n_) - hi));
        }
        for (Label l = lo; l <= hi && !stop_; ++l) {
            if (used_ >> l & 1) continue;
            tick();
            label_[v] = l;
            used_ |= Mask{1} << l;
            for (Vertex x : eqs_of_[v]) {
                sum_[x] += l;
                --left_[x];
            }
            const bool had_target = target_.has_value();
            if (feasible(v, depth)) descend(depth + 1);
            if (!had_target && target_ && target_depth_ == depth) target_.reset();
            for (Vertex x : eqs_of_[v]) {
                sum_[x] -= l;
                ++left_[x];
            }
            used_ &= ~(Mask{1} << l);
            label_[v] = 0;
        }
    }

    const SearchOptions& options_;
    SearchOutcome& out_;
    std::size_t n_;
    Clock::time_point start_;

    std::vector<Mask> nbhd_;
    std::vector<std::vector<Vertex>> eqs_of_;
    std::vector<std::size_t> twin_of_;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<Vertex> order_;

    std::vector<Label> label_;
    Mask used_ = 0;  // bit l set when label l is taken
    std::vector<Weight> sum_;
    std::vector<int> left_;
    std::optional<Weight> target_;
    std::size_t target_depth_ = 0;
    std::vector<Weight> small_;
    std::vector<Weight> large_;

    std::vector<std::vector<Label>> solutions_;
    bool stop_ = false;
    bool aborted_ = false;
};

std::uint64_t factorial(std::size_t k)
{
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

// All labelings obtained by permuting labels inside each twin class.
void expand_twins(const std::vector<Label>& base, const std::vector<std::vector<Vertex>>& classes,
                  std::size_t c, std::vector<Label>& current, std::vector<std::vector<Label>>& out)
{
    if (c == classes.size()) {
        out.push_back(current);
        return;
    }
    const auto& members = classes[c];
    std::vector<Label> values;
    for (Vertex x : members) values.push_back(base[x]);
    std::sort(values.begin(), values.end());
    do {
        for (std::size_t i = 0; i < members.size(); ++i) current[members[i]] = values[i];
        expand_twins(base, classes, c + 1, current, out);
    } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace

SearchOutcome solve(const Graph& g, const DistanceSet& set, const SearchOptions& options)
{
    if (g.order() > 63) throw std::invalid_argument("solver supports order <= 63");
    if (options.node_limit && *options.node_limit == 0)
        throw std::invalid_argument("node limit must be positive");
    if (options.time_limit && options.time_limit->count() <= 0)
        throw std::invalid_argument("time limit must be positive");

    const auto start = Clock::now();
    SearchOutcome out;
    auto finish = [&](SearchOutcome& o) -> SearchOutcome {
        o.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return std::move(o);
    };

    for (Vertex x = 0; x < g.order(); ++x) {
        if (d_neighborhood(g, x, set).empty()) {
            ++out.stats.prunes.empty_equation;
            out.status = SearchStatus::ExhaustedNone;
            return finish(out);
        }
    }

    if (options.use_screeners) {
        out.refutations = screen_all(g, set);
        if (!out.refutations.empty()) {
            ++out.stats.prunes.screen;
            out.status = SearchStatus::ExhaustedNone;
            return finish(out);
        }
    }

    std::optional<Weight> target;
    if (options.use_constant_target) {
        auto prediction = predicted_constant(g, set);
        if (!prediction.integral()) {
            ++out.stats.prunes.constant_target;
            out.status = SearchStatus::ExhaustedNone;
            return finish(out);
        }
        target = prediction.constant;
        out.target_constant = target;
    }

    Search search(g, set, options, out);
    search.run(target);
    if (options.use_twin_pruning)
        for (const auto& c : search.classes()) out.twin_multiplicity *= factorial(c.size());

    out.canonical_solutions = search.solutions().size();
    out.total_solutions = out.canonical_solutions * out.twin_multiplicity;

    std::vector<std::vector<Label>> labelings;
    if (options.enumerate_all && options.use_twin_pruning) {
        for (const auto& base : search.solutions()) {
            auto current = base;
            expand_twins(base, search.classes(), 0, current, labelings);
        }
        std::sort(labelings.begin(), labelings.end());
    } else {
        labelings = search.solutions();
    }
    for (auto& labels : labelings) {
        try {
            out.certificates.push_back(MagicCertificate::issue(g, Labeling(std::move(labels)), set));
        } catch (const MagicCertificate::Rejected&) {
            throw std::logic_error("solver produced a labeling that fails verification");
        }
    }

    if (search.aborted()) out.status = SearchStatus::Aborted;
    else out.status = out.certificates.empty() ? SearchStatus::ExhaustedNone : SearchStatus::Found;
    out.counted = options.enumerate_all && !search.aborted();
    return finish(out);
}

SearchOutcome count_all(const Graph& g, const DistanceSet& set, SearchOptions options)
{
    options.enumerate_all = true;
    return solve(g, set, options);
}

}  // namespace dmagic
