#include "certidom/graph6.hpp"

#include <cstdint>
#include <vector>

namespace certidom {

namespace {

constexpr int kBias = 63;    // printable offset: byte = value + 63
constexpr int kHiMark = 126; // '~', introduces the three-byte order form

int decode_byte(char c, std::size_t pos) {
    const int raw = static_cast<unsigned char>(c);
    if (raw < kBias || raw > kHiMark)
        throw ParseError("graph6: byte " + std::to_string(pos) + " (0x" +
                         std::to_string(raw) + ") outside the printable range");
    return raw - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    int first = decode_byte(line[pos], pos);
    ++pos;
    if (first == kHiMark - kBias) {
        // 126-prefixed: three 6-bit groups (a second 126 would start the
        // 8-byte form for n > 258047, which is far beyond our 64 cap).
        if (line.size() < 4) throw ParseError("graph6: truncated order field");
        if (static_cast<unsigned char>(line[1]) == kHiMark)
            throw ParseError("graph6: order exceeds the supported maximum of 64");
        for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | decode_byte(line[pos], pos);
    } else {
        n = first;
    }
    if (n < 1)
        throw ParseError("graph6: order " + std::to_string(n) + " not supported (need >= 1)");
    if (n > Graph::kMaxOrder)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds the supported maximum of 64");

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() - pos < byte_count)
        throw ParseError("graph6: truncated adjacency bits (need " + std::to_string(byte_count) +
                         " bytes, got " + std::to_string(line.size() - pos) + ")");
    if (line.size() - pos > byte_count)
        throw ParseError("graph6: trailing bytes after adjacency bits");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    long long bit_index = 0;
    int current = 0;
    int bits_left = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            if (bits_left == 0) {
                current = decode_byte(line[pos], pos);
                ++pos;
                bits_left = 6;
            }
            --bits_left;
            if ((current >> bits_left) & 1) {
                rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
        }
    }
    if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits");
    return Graph::from_adjacency_rows(rows);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += static_cast<char>(kHiMark);
        out += static_cast<char>(((n >> 12) & 0x3f) + kBias);
        out += static_cast<char>(((n >> 6) & 0x3f) + kBias);
        out += static_cast<char>((n & 0x3f) + kBias);
    }
    int current = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            current = (current << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(current + kBias);
                current = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((current << (6 - filled)) + kBias);
    return out;
}

}  // namespace certidom
