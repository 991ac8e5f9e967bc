#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmagic/graph.hpp"

namespace dmagic {

inline constexpr std::size_t kGraph6MaxOrder = 62;

class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated. Throws Graph6Error with the offending offset.
Graph parse_graph6(std::string_view text);

/// Encodes g (order <= 62). Bits follow the upper triangle column by column.
std::string emit_graph6(const Graph& g);

/// Result of reading a newline-separated corpus.
struct Graph6Corpus {
    std::vector<Graph> graphs;
    std::vector<std::size_t> line_numbers;  // 1-based, aligned with graphs
    std::size_t skipped = 0;
};

/// Blank lines are ignored; malformed lines are counted in `skipped`.
Graph6Corpus read_graph6_corpus(std::istream& in);

}  // namespace dmagic
