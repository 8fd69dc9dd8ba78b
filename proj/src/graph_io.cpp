#include "gmatch/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

namespace gmatch {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t to_count(std::string_view tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

WeightedGraph parse_graph(std::string_view text) {
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        last_line = line_no;
        if (!header) {
            if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n m'");
            header.emplace(to_count(tokens[0], line_no), to_count(tokens[1], line_no));
            edges.reserve(header->second);
            continue;
        }
        if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'u v w'");
        if (edges.size() == header->second) {
            throw ParseError(line_no, "more edge lines than the " + std::to_string(header->second) + " declared");
        }
        std::size_t u = to_count(tokens[0], line_no);
        std::size_t v = to_count(tokens[1], line_no);
        if (u > std::numeric_limits<NodeId>::max() || v > std::numeric_limits<NodeId>::max()) {
            throw ParseError(line_no, "node id too large");
        }
        Weight w;
        try {
            w = Weight::parse(tokens[2]);
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }

    if (!header) throw ParseError(line_no, "missing 'n m' header");
    if (edges.size() != header->second) {
        throw ParseError(last_line, "declared " + std::to_string(header->second) + " edges, found " +
                                        std::to_string(edges.size()));
    }
    return WeightedGraph(header->first, std::move(edges));
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_graph(g);
}

} // namespace gmatch
