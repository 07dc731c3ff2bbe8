#include "homx/graph6.hpp"

#include "homx/error.hpp"

namespace homx {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

SimpleGraph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.starts_with(kHeader)) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty())
        throw FormatError("empty graph6 line", base);
    for (std::size_t i = 0; i < line.size(); ++i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw FormatError("byte out of graph6 range", base + i);
    }

    std::size_t n = 0;
    std::size_t pos = 0;
    if (line[0] != '~') {
        n = static_cast<std::size_t>(line[0] - 63);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw FormatError("graphs with more than 258047 vertices are not supported", base + 1);
        if (line.size() < 4)
            throw FormatError("truncated vertex count", base + line.size());
        n = (static_cast<std::size_t>(line[1] - 63) << 12) | (static_cast<std::size_t>(line[2] - 63) << 6) |
            static_cast<std::size_t>(line[3] - 63);
        pos = 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (line.size() != expected)
        throw FormatError("graph6 length " + std::to_string(line.size()) + " does not match n = " +
                              std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                          base + std::min(line.size(), expected));
    if (n > kMaxVertices)
        throw ParameterError("graph6 input has " + std::to_string(n) + " vertices; limit is " +
                             std::to_string(kMaxVertices));

    std::vector<Mask> rows(n, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            auto byte = static_cast<unsigned>(line[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1U) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    for (; k % 6 != 0; ++k) {
        auto byte = static_cast<unsigned>(line[pos + k / 6] - 63);
        if ((byte >> (5 - k % 6)) & 1U)
            throw FormatError("nonzero padding bits", base + pos + k / 6);
    }
    return SimpleGraph::from_rows(std::move(rows));
}

std::string write_graph6(const SimpleGraph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63U)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63U)));
        out.push_back(static_cast<char>(63 + (n & 63U)));
    }
    unsigned acc = 0;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1U) | (g.adjacent(i, j) ? 1U : 0U);
            if (++k % 6 == 0) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
            }
        }
    }
    if (k % 6 != 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - k % 6))));
    return out;
}

std::vector<SimpleGraph> read_graph6_stream(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const FormatError& e) {
            throw FormatError(std::string("line ") + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return out;
}

}  // namespace homx
