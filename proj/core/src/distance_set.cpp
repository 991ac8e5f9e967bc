#include "dmagic/distance_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dmagic {

namespace {

int parse_int(std::string_view text, std::string_view whole)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed distance set '" + std::string(whole) + "'");
    return value;
}

}  // namespace

DistanceSet::DistanceSet(std::vector<int> values) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("distance set must be non-empty");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.front() < 0)
        throw std::invalid_argument("distances must be nonnegative");
}

DistanceSet::DistanceSet(std::initializer_list<int> values)
    : DistanceSet(std::vector<int>(values))
{
}

DistanceSet DistanceSet::parse(std::string_view text)
{
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(start, comma - start);
        auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            values.push_back(parse_int(item, text));
        } else {
            int lo = parse_int(item.substr(0, dash), text);
            int hi = parse_int(item.substr(dash + 1), text);
            if (lo > hi)
                throw std::invalid_argument("empty range in distance set '" + std::string(text) + "'");
            for (int v = lo; v <= hi; ++v) values.push_back(v);
        }
        start = comma + 1;
    }
    return DistanceSet(std::move(values));
}

DistanceSet DistanceSet::upto(int d)
{
    return range(0, d);
}

DistanceSet DistanceSet::range(int first, int last)
{
    if (first > last)
        throw std::invalid_argument("empty distance range");
    std::vector<int> values;
    for (int v = first; v <= last; ++v) values.push_back(v);
    return DistanceSet(std::move(values));
}

std::vector<DistanceSet> DistanceSet::all_subsets(int d)
{
    if (d < 0 || d > 20)
        throw std::invalid_argument("all_subsets supports 0 <= d <= 20");
    std::vector<DistanceSet> out;
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
        std::vector<int> values;
        for (int v = 0; v <= d; ++v)
            if (mask & (1u << v)) values.push_back(v);
        out.emplace_back(std::move(values));
    }
    return out;
}

bool DistanceSet::contains(int distance) const noexcept
{
    return std::binary_search(values_.begin(), values_.end(), distance);
}

std::optional<DistanceSet> DistanceSet::effective(int d) const
{
    std::vector<int> kept;
    for (int v : values_)
        if (v <= d) kept.push_back(v);
    if (kept.empty()) return std::nullopt;
    return DistanceSet(std::move(kept));
}

std::string DistanceSet::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::optional<DistanceSet> complement_distance_set(const DistanceSet& set, int diameter)
{
    std::vector<int> rest;
    for (int v = 0; v <= diameter; ++v)
        if (!set.contains(v)) rest.push_back(v);
    if (rest.empty()) return std::nullopt;
    return DistanceSet(std::move(rest));
}

}  // namespace dmagic
