#include "twomain/graph_io.hpp"

#include "twomain/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace twomain {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

bool parse_int(const std::string& s, int& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && first != last;
}

bool blank_or_comment(const std::string& line) {
    auto it = std::find_if(line.begin(), line.end(), [](unsigned char c) { return !std::isspace(c); });
    return it == line.end() || *it == '#';
}

}  // namespace

Multigraph GraphFile::multigraph() const {
    if (kind != GraphKind::multigraph) throw PreconditionError("graph file holds a signed graph");
    return Multigraph(order, edges);
}

SignedGraph GraphFile::signed_graph() const {
    if (kind != GraphKind::signed_graph) throw PreconditionError("graph file holds a multigraph");
    return SignedGraph(order, edges);
}

GraphFile parse_graph_file(std::istream& in) {
    GraphFile f;
    bool have_header = false;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const auto tok = tokens(line);
        if (!have_header) {
            if (tok.size() != 2 || (tok[0] != "multigraph" && tok[0] != "signed"))
                throw ParseError(lineno, "expected header 'multigraph <n>' or 'signed <n>'");
            int n = 0;
            if (!parse_int(tok[1], n) || n < 1) throw ParseError(lineno, "order must be a positive integer");
            if (n > kMaxOrder) throw ParseError(lineno, "order exceeds " + std::to_string(kMaxOrder));
            f.kind = tok[0] == "signed" ? GraphKind::signed_graph : GraphKind::multigraph;
            f.order = n;
            have_header = true;
            continue;
        }
        if (tok.empty() || tok[0] != "e") throw ParseError(lineno, "expected edge line 'e <u> <v> <x>'");
        if (tok.size() != 4) throw ParseError(lineno, "edge line needs exactly three fields after 'e'");
        int u = 0, v = 0;
        if (!parse_int(tok[1], u) || !parse_int(tok[2], v)) throw ParseError(lineno, "vertex is not an integer");
        if (u < 0 || v < 0 || u >= f.order || v >= f.order)
            throw ParseError(lineno, "vertex out of range 0.." + std::to_string(f.order - 1));
        if (u == v) throw ParseError(lineno, "self-loop forbidden");
        if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
        int x = 0;
        if (f.kind == GraphKind::multigraph) {
            if (tok[3] != "1" && tok[3] != "2") throw ParseError(lineno, "multigraph weight must be 1 or 2");
            x = tok[3] == "1" ? 1 : 2;
        } else {
            if (tok[3] != "+1" && tok[3] != "-1") throw ParseError(lineno, "sign must be +1 or -1");
            x = tok[3] == "+1" ? 1 : -1;
        }
        if (!seen.insert({u, v}).second) throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        f.edges.push_back({u, v, x});
    }
    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    std::sort(f.edges.begin(), f.edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    return f;
}

GraphFile parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

GraphFile to_graph_file(const Multigraph& m) { return {GraphKind::multigraph, m.order(), m.edges()}; }
GraphFile to_graph_file(const SignedGraph& s) { return {GraphKind::signed_graph, s.order(), s.edges()}; }

std::string serialize(const GraphFile& f) {
    std::string out = (f.kind == GraphKind::multigraph ? "multigraph " : "signed ") + std::to_string(f.order) + "\n";
    for (const Edge& e : f.edges) {
        std::string x = f.kind == GraphKind::multigraph ? std::to_string(e.value) : (e.value > 0 ? "+1" : "-1");
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + x + "\n";
    }
    return out;
}

GraphFile convert(const GraphFile& f) {
    if (f.kind == GraphKind::signed_graph) return to_graph_file(associated_multigraph(f.signed_graph()));
    return to_graph_file(signed_from_multigraph(f.multigraph()));
}

}  // namespace twomain
