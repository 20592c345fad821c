#include "t1p/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace t1p {

Graph read_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (!(ls >> a)) {
            ls.clear();
            std::string rest;
            if (ls >> rest) throw ParseError("expected \"u v\", got \"" + line + "\"", lineno);
            continue;
        }
        if (!(ls >> b)) throw ParseError("missing second endpoint", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token \"" + extra + "\"", lineno);
        if (a < 0 || b < 0 || a > 100000000 || b > 100000000)
            throw ParseError("vertex id out of range", lineno);
        if (a == b) throw ParseError("loop edge " + std::to_string(a), lineno);
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph6(const std::string& raw) {
    std::string text = raw;
    const std::string header = ">>graph6<<";
    if (text.rfind(header, 0) == 0) text.erase(0, header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw ParseError("graph6: truncated", 1);
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: bad character", 1);
        return c - 63;
    };
    long n = next();
    if (n == 63) {
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
        if (n >= 258048) throw ParseError("graph6: graph too large", 1);
    }
    Graph g;
    for (Vertex v = 0; v < n; ++v) g.add_vertex(v);
    int bits = 0, word = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (bits == 0) {
                word = next();
                bits = 6;
            }
            --bits;
            if ((word >> bits) & 1) g.add_edge(i, j);
        }
    if (pos != text.size()) throw ParseError("graph6: trailing data", 1);
    return g;
}

std::string write_graph6(const Graph& g) {
    const long n = g.id_bound();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int bits = 0, word = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(word + 63));
                bits = word = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((word << (6 - bits)) + 63));
    return out;
}

Graph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string tok = line.substr(first);
        bool g6 = tok.rfind(">>graph6<<", 0) == 0;
        if (!g6) {
            g6 = tok.find(' ') == std::string::npos && tok.find('\t') == std::string::npos;
            for (char c : tok)
                if (c < 63 || c > 126) g6 = false;
        }
        if (g6) return read_graph6(tok);
        break;
    }
    std::istringstream again(text);
    return read_edge_list(again);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_graph_text(buf.str());
}

}  // namespace t1p
