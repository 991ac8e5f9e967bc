#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmagic/distance_set.hpp"
#include "dmagic/graph.hpp"

namespace dmagic {

using Label = int;
using Weight = std::int64_t;

/// Bijection from vertices {0..v-1} onto labels {1..v}.
class Labeling {
public:
    /// labels[x] is f(x). Throws std::invalid_argument unless the values are
    /// a permutation of 1..labels.size().
    explicit Labeling(std::vector<Label> labels);

    static Labeling identity(std::size_t order);

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](Vertex x) const { return labels_[x]; }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

class LabelingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// w(x): sum of f over N_D(x). Throws LabelingMismatch if sizes differ.
Weight vertex_weight(const Graph& g, const Labeling& f, Vertex x, const DistanceSet& set);

/// All vertex weights in vertex order.
std::vector<Weight> vertex_weights(const Graph& g, const Labeling& f, const DistanceSet& set);

struct Verdict {
    enum class Kind { Magic, NotMagic, Degenerate };

    Kind kind = Kind::NotMagic;
    Weight constant = 0;                  // Magic only
    std::pair<Vertex, Vertex> witness{};  // NotMagic only: w(first) != w(second)
    Weight first_weight = 0;
    Weight second_weight = 0;

    bool magic() const noexcept { return kind == Kind::Magic; }
};

std::string to_string(Verdict::Kind kind);

/// MAGIC when all weights agree and some N_D(x) is non-empty; DEGENERATE
/// when every N_D(x) is empty; otherwise NOT_MAGIC with the
/// lexicographically first unequal pair.
Verdict verify_magic(const Graph& g, const Labeling& f, const DistanceSet& set);

/// A labeling proven D-distance magic on a graph.
///
/// The only way to obtain one is issue(), which runs verify_magic, so every
/// instance in the program has passed verification.
class MagicCertificate {
public:
    class Rejected : public std::invalid_argument {
    public:
        Rejected(const std::string& what, Verdict verdict)
            : std::invalid_argument(what), verdict_(verdict) {}
        const Verdict& verdict() const noexcept { return verdict_; }

    private:
        Verdict verdict_;
    };

    /// Throws Rejected unless verify_magic(g, f, D) is MAGIC.
    static MagicCertificate issue(Graph g, Labeling f, DistanceSet set);

    const Graph& graph() const noexcept { return graph_; }
    const Labeling& labeling() const noexcept { return labeling_; }
    const DistanceSet& distance_set() const noexcept { return set_; }
    Weight constant() const noexcept { return constant_; }

private:
    MagicCertificate(Graph g, Labeling f, DistanceSet set, Weight constant)
        : graph_(std::move(g)), labeling_(std::move(f)), set_(std::move(set)), constant_(constant) {}

    Graph graph_;
    Labeling labeling_;
    DistanceSet set_;
    Weight constant_;
};

/// Sum of labels inside each component, aligned with g.components().
std::vector<Weight> component_label_sums(const Graph& g, const Labeling& f);

class DualityRefused : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Moves a certificate for D to one for D* = {0..d} \ D on the same labeling,
/// with constant (component label sum) - k. For disconnected graphs every
/// component must carry the same label sum, otherwise DualityRefused is
/// thrown. Returns nullopt when D* is empty; throws MagicCertificate::Rejected
/// if D* leaves every neighborhood empty.
std::optional<MagicCertificate> duality_transfer(const MagicCertificate& cert);

}  // namespace dmagic
