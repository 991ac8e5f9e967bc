#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dmagic {

/// A finite, non-empty set of nonnegative distances.
///
/// Values beyond a graph's diameter are legal; they simply never match.
/// `effective(d)` gives the truncated set D ∩ {0..d} used by rules that
/// care about the diameter.
class DistanceSet {
public:
    /// Throws std::invalid_argument on an empty list or a negative value.
    explicit DistanceSet(std::vector<int> values);
    DistanceSet(std::initializer_list<int> values);

    /// Accepts comma lists with ranges, e.g. "0,2" or "1-3" or "0,2-4".
    static DistanceSet parse(std::string_view text);

    /// {0, 1, ..., d}
    static DistanceSet upto(int d);
    /// {first, ..., last}; requires first <= last.
    static DistanceSet range(int first, int last);

    /// Every non-empty subset of {0..d}, in increasing bitmask order.
    static std::vector<DistanceSet> all_subsets(int d);

    bool contains(int distance) const noexcept;
    const std::vector<int>& values() const noexcept { return values_; }
    int max() const noexcept { return values_.back(); }
    int min() const noexcept { return values_.front(); }
    std::size_t size() const noexcept { return values_.size(); }

    /// D ∩ {0..d}; nullopt when nothing survives.
    std::optional<DistanceSet> effective(int d) const;

    /// "0,2" style rendering, round-trips through parse().
    std::string to_string() const;

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

private:
    std::vector<int> values_;
};

/// {0..d} \ D. Returns nullopt when the complement is empty.
std::optional<DistanceSet> complement_distance_set(const DistanceSet& set, int diameter);

}  // namespace dmagic
