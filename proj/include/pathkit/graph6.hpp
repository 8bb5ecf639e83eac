#pragma once

// graph6 serialization. The documented interchange format is the one-byte
// header variant (n <= 62): header byte n+63, then ceil(C(n,2)/6) payload
// bytes covering the upper triangle column by column, 6 bits per byte, MSB
// first, each byte offset by 63. Padding bits must be zero.
//
// write_graph6_any additionally emits the standard '~'-prefixed three-byte
// header for n > 62; it exists for canonical class keys of derived graphs
// (path graphs routinely exceed 62 vertices) and is never used for file I/O.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathkit/graph.hpp"

namespace pathkit {

struct g6_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw g6_parse_error("graph6: empty token");
    auto bad_byte = [&](size_t off) {
        throw g6_parse_error("graph6: byte " + std::to_string(off) + " out of range 63..126");
    };
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h < 63 || h > 126) bad_byte(0);
    if (h == 126)
        throw g6_parse_error("graph6: byte 0 starts an extended header (n > 62 unsupported)");
    int n = h - 63;
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    size_t expect = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != expect)
        throw g6_parse_error("graph6: malformed length at byte " + std::to_string(text.size()) +
                             " (expected " + std::to_string(expect) + " bytes for n=" +
                             std::to_string(n) + ", got " + std::to_string(text.size()) + ")");
    Graph g(n);
    long long bit = 0;
    for (size_t p = 1; p < text.size(); ++p) {
        unsigned char c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126) bad_byte(p);
        int payload = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int value = (payload >> b) & 1;
            if (bit >= nbits) {
                if (value)
                    throw g6_parse_error("graph6: nonzero padding bit in byte " + std::to_string(p));
                continue;
            }
            if (value) {
                // bit index -> column j, row i (i < j), columns in order
                long long t = bit;
                int j = 1;
                while (t >= j) t -= j, ++j;
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

namespace detail {

inline std::string pack_g6_payload(const Graph& g) {
    const int n = g.num_vertices();
    std::string out;
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 62)
        throw std::invalid_argument("graph6: unsupported size n=" + std::to_string(n) +
                                    " (single-byte header limit is 62)");
    std::string out(1, static_cast<char>(n + 63));
    out += detail::pack_g6_payload(g);
    return out;
}

// Standard extended form for n > 62 (three 6-bit header bytes after '~').
inline std::string write_graph6_any(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 62) return write_graph6(g);
    if (n > 258047) throw std::invalid_argument("graph6: n too large even for extended header");
    std::string out;
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
    out += detail::pack_g6_payload(g);
    return out;
}

// One token per '\n'-separated line, no comments. Blank lines are rejected;
// a trailing newline at end of input is fine.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (in.peek() == EOF) break;
            throw g6_parse_error("graph6: blank line " + std::to_string(lineno));
        }
        try {
            out.push_back(parse_graph6(line));
        } catch (const g6_parse_error& e) {
            throw g6_parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph6_lines(in);
}

}  // namespace pathkit
