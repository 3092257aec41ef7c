#include "ecoc/instance_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace ecoc {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("trailing characters in ") + what + " '" + tok + "'");
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0, l = 0, k = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto toks = tokens_of(raw);
        if (toks.empty())
            continue;
        if (toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate problem header");
            if (toks.size() != 6 || toks[1] != "ecoc")
                throw ParseError(line_no, "malformed header, expected 'p ecoc <n> <m> <l> <k>'");
            n = parse_int(toks[2], line_no, "n");
            m = parse_int(toks[3], line_no, "m");
            l = parse_int(toks[4], line_no, "l");
            k = parse_int(toks[5], line_no, "k");
            if (n < 0)
                throw ParseError(line_no, "n must be non-negative");
            if (m < 0)
                throw ParseError(line_no, "m must be non-negative");
            if (l < 1)
                throw ParseError(line_no, "l must be at least 1");
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge line before problem header");
            if (toks.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            long long u = parse_int(toks[1], line_no, "u");
            long long v = parse_int(toks[2], line_no, "v");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range 1..n");
            if (u == v)
                throw ParseError(line_no, "self-loop rejected");
            auto key = std::minmax(static_cast<int>(u), static_cast<int>(v));
            if (!seen.insert(key).second)
                throw ParseError(line_no, "duplicate edge");
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
            continue;
        }
        throw ParseError(line_no, "unrecognized line '" + raw + "'");
    }
    if (!have_header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing problem header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "header announces m=" + std::to_string(m) + " edges but " +
                                      std::to_string(edges.size()) + " were given");
    return Instance{Graph::from_edges(static_cast<int>(n), edges), k, static_cast<int>(l)};
}

std::string emit_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    const VertexSet& verts = g.vertices();
    std::vector<int> rank(g.capacity(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        rank[verts[i]] = static_cast<int>(i) + 1;

    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (u > v)
                edges.emplace_back(rank[v], rank[u]);
    std::sort(edges.begin(), edges.end());

    std::ostringstream out;
    out << "p ecoc " << verts.size() << " " << edges.size() << " " << inst.l << " "
        << inst.k << "\n";
    for (auto [u, v] : edges)
        out << "e " << u << " " << v << "\n";
    return out.str();
}

}  // namespace ecoc
