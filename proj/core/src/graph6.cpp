#include "dmagic/graph6.hpp"

namespace dmagic {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 record", base);

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("illegal character", base + i);
    }
    if (text[0] == 126) throw Graph6Error("orders above 62 are not supported", base);

    const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 0) throw Graph6Error("graph order must be positive", base);
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw Graph6Error("expected " + std::to_string(1 + bytes) + " bytes, got " +
                              std::to_string(text.size()),
                          base + std::min(text.size(), 1 + bytes));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if (group & (1 << (5 - k % 6))) edges.push_back({i, j});
        }
    }
    if (bytes > 0) {
        int last = static_cast<unsigned char>(text[bytes]) - 63;
        std::size_t used = bits - 6 * (bytes - 1);
        int pad_mask = (1 << (6 - used)) - 1;
        if (last & pad_mask) throw Graph6Error("nonzero padding bits", base + bytes);
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("graph6 output supports order <= 62, got " + std::to_string(n));
    std::string out(1, static_cast<char>(63 + n));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph6Corpus read_graph6_corpus(std::istream& in)
{
    Graph6Corpus corpus;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        try {
            corpus.graphs.push_back(parse_graph6(std::string_view(line).substr(first)));
            corpus.line_numbers.push_back(number);
        } catch (const std::invalid_argument&) {
            ++corpus.skipped;
        }
    }
    return corpus;
}

}  // namespace dmagic
