// edgelist.hpp — plain-text edge-list format.
//
//   # optional comment lines
//   <vertex_count> <edge_count>
//   <u> <v>         (one line per edge, 0-based ids, single space)
//
// Emission is canonical: edges sorted with u < v, every line newline-terminated.
// Parsing tolerates a missing trailing newline, comment lines anywhere, and
// extra whitespace between fields.
#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

namespace detail {

inline bool parse_int_fields(std::string_view line, std::vector<long long>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

} // namespace detail

inline Graph parse_edge_list(std::string_view text) {
    std::vector<long long> fields;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!detail::parse_int_fields(line, fields))
            throw error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected integer fields");
        if (fields.empty()) continue;
        if (n < 0) {
            if (fields.size() != 2 || fields[0] < 0 || fields[1] < 0)
                throw error(errc::parse_error, "line " + std::to_string(line_no) +
                                                   ": header must be '<vertex_count> <edge_count>'");
            n = fields[0];
            m = fields[1];
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw error(errc::parse_error, "line " + std::to_string(line_no) +
                                               ": more edge lines than the declared " +
                                               std::to_string(m));
        if (fields.size() != 2)
            throw error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected '<u> <v>'");
        if (fields[0] < 0 || fields[0] >= n || fields[1] < 0 || fields[1] >= n)
            throw error(errc::out_of_range, "line " + std::to_string(line_no) + ": endpoint outside [0," +
                                                std::to_string(n) + ")");
        if (fields[0] == fields[1])
            throw error(errc::self_loop,
                        "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(fields[0]));
        edges.emplace_back(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
    }
    if (n < 0)
        throw error(errc::parse_error, "missing '<vertex_count> <edge_count>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw error(errc::parse_error, "declared " + std::to_string(m) + " edges but found " +
                                           std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
    return out.str();
}

} // namespace hz
