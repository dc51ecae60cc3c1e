#include "satlab/graph6.hpp"

#include <istream>
#include <ostream>

namespace satlab {

namespace {
    constexpr std::string_view kHeader = ">>graph6<<";

    int data_byte(std::string_view s, std::size_t pos)
    {
        if (pos >= s.size())
            throw Graph6ParseError("graph6 input truncated", s.size());
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("invalid graph6 byte 0x" + std::to_string(c), pos);
        return c - 63;
    }

    long long pair_count(long long n) { return n * (n - 1) / 2; }
}

Graph from_graph6(std::string_view text)
{
    if (text.size() >= kHeader.size() && text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6ParseError("empty graph6 input", 0);
    if (text[0] == ':' || text[0] == ';')
        throw Graph6ParseError("sparse6 input is not supported, only standard graph6", 0);
    if (text[0] == '&')
        throw Graph6ParseError("digraph6 input is not supported, only standard graph6", 0);

    std::size_t pos = 0;
    long long n = data_byte(text, pos);
    ++pos;
    if (n == 63) { // '~': extended size
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            n = 0;
            for (int k = 0; k < 6; ++k, ++pos)
                n = (n << 6) | data_byte(text, pos);
        } else {
            n = 0;
            for (int k = 0; k < 3; ++k, ++pos)
                n = (n << 6) | data_byte(text, pos);
        }
    }
    if (n > Graph::max_vertices())
        throw std::invalid_argument(
            "graph6 vertex count " + std::to_string(n) + " exceeds max " + std::to_string(Graph::max_vertices()));

    const long long bits = pair_count(n);
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) < bytes)
        throw Graph6ParseError("graph6 input truncated: need " + std::to_string(bytes) + " data bytes", text.size());
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) > bytes)
        throw Graph6ParseError("trailing garbage after graph6 data", pos + bytes);

    GraphBuilder b(static_cast<int>(n));
    long long k = 0;
    int cur = 0;
    int cur_bits = 0;
    std::size_t cur_pos = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (cur_bits == 0) {
                cur_pos = pos + k / 6;
                cur = data_byte(text, cur_pos);
                cur_bits = 6;
            }
            if (cur & (1 << (cur_bits - 1)))
                b.add_edge(i, j);
            --cur_bits;
        }
    }
    if (bits % 6 != 0 && bytes > 0) {
        int last = data_byte(text, pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw Graph6ParseError("nonzero padding bits", pos + bytes - 1);
    }
    return b.build();
}

std::string to_graph6(const Graph& g)
{
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }

    int cur = 0;
    int cur_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, static_cast<int>(j)) ? 1 : 0);
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                cur_bits = 0;
            }
        }
    }
    if (cur_bits > 0)
        out.push_back(static_cast<char>(63 + (cur << (6 - cur_bits))));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs)
{
    for (const auto& g : graphs)
        out << to_graph6(g) << '\n';
}

} // namespace satlab
