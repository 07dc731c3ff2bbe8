#include "cli_io.hpp"

#include "homx/error.hpp"
#include "homx/families.hpp"
#include "homx/graph6.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace homx::cli {

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ParameterError("expected a nonnegative integer for " + std::string(what) + ", got '" + std::string(text) + "'");
    return value;
}

std::vector<Mask> parse_rows(std::string_view text, std::size_t base_offset) {
    std::vector<Mask> rows;
    std::size_t width = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t slash = std::min(text.find('/', start), text.size());
        const auto row = text.substr(start, slash - start);
        if (row.empty())
            throw FormatError("empty adjacency row", base_offset + start);
        if (rows.empty())
            width = row.size();
        else if (row.size() != width)
            throw FormatError("adjacency rows differ in length", base_offset + start);
        if (width > kMaxVertices)
            throw ParameterError("targets are limited to " + std::to_string(kMaxVertices) + " vertices");
        Mask mask = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == '1')
                mask |= Mask{1} << i;
            else if (row[i] != '0')
                throw FormatError("adjacency entries must be 0 or 1", base_offset + start + i);
        }
        rows.push_back(mask);
        start = slash + 1;
    }
    if (rows.size() != width)
        throw FormatError("adjacency matrix is not square", base_offset);
    return rows;
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw ParameterError("cannot open " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

Rational parse_weight(const nlohmann::json& w) {
    try {
        if (w.is_number_integer())
            return Rational(w.get<long long>());
        if (w.is_string())
            return Rational(w.get<std::string>());
    } catch (const std::exception&) {
    }
    throw ParameterError("weights must be integers or rational strings such as \"3/2\"");
}

TargetGraph target_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("adj") || !doc["adj"].is_array())
        throw ParameterError("target file needs an \"adj\" array");
    std::string joined;
    for (const auto& row : doc["adj"]) {
        if (!joined.empty())
            joined += '/';
        if (row.is_string()) {
            joined += row.get<std::string>();
        } else if (row.is_array()) {
            for (const auto& x : row) {
                if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
                    throw ParameterError("adjacency entries must be 0 or 1");
                joined += x.get<int>() ? '1' : '0';
            }
        } else {
            throw ParameterError("adjacency rows must be strings or arrays");
        }
    }
    auto rows = parse_rows(joined, 0);
    if (doc.contains("q") && doc["q"].get<std::size_t>() != rows.size())
        throw ParameterError("\"q\" does not match the adjacency matrix");
    std::vector<Rational> weights;
    if (doc.contains("weights")) {
        for (const auto& w : doc["weights"])
            weights.push_back(parse_weight(w));
        if (weights.size() != rows.size())
            throw ParameterError("need one weight per target vertex");
    }
    return TargetGraph(std::move(rows), std::move(weights));
}

}  // namespace

TargetGraph parse_target(std::string_view text) {
    text = trim(text);
    if (text == "ind")
        return h_ind();
    if (text == "wr")
        return h_wr();
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const auto name = text.substr(0, colon);
        const std::size_t k = parse_size(text.substr(colon + 1), name);
        if (name == "hc")
            return hard_core(k);
        if (name == "kq")
            return complete_target(k);
        if (name == "kqloop")
            return looped_complete(k);
        throw ParameterError("unknown target alias '" + std::string(name) + "'");
    }
    return TargetGraph(parse_rows(text, 0));
}

TargetGraph load_target(const std::filesystem::path& file) {
    const std::string text = read_file(file);
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        try {
            return target_from_json(doc);
        } catch (const nlohmann::json::exception& e) {
            throw ParameterError(std::string("invalid target file: ") + e.what());
        }
    }
    return parse_target(body);
}

SimpleGraph parse_graph(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("graph must look like kind:params, e.g. cycle:4");
    const auto kind = text.substr(0, colon);
    const auto args = text.substr(colon + 1);
    if (kind == "g6")
        return parse_graph6(args);
    if (kind == "cbip") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw ParameterError("cbip needs two sizes, e.g. cbip:2,3");
        return complete_bipartite(parse_size(args.substr(0, comma), "cbip"), parse_size(args.substr(comma + 1), "cbip"));
    }
    const std::size_t n = parse_size(args, kind);
    if (kind == "cycle")
        return cycle(n);
    if (kind == "path")
        return path(n);
    if (kind == "star")
        return star(n);
    if (kind == "complete")
        return complete(n);
    throw ParameterError("unknown graph kind '" + std::string(kind) + "'");
}

std::vector<SimpleGraph> load_graphs(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ParameterError("cannot open " + file.string());
    return read_graph6_stream(in);
}

}  // namespace homx::cli
