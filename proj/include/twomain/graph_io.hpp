#pragma once

#include "twomain/graph.hpp"

#include <istream>
#include <string>
#include <vector>

namespace twomain {

enum class GraphKind { multigraph, signed_graph };

/// Parsed text graph file:
///
///   multigraph <n>        or   signed <n>
///   e <u> <v> <x>              one line per edge, 0 ≤ u < v < n,
///                              x ∈ {1,2} (multigraph) or {+1,-1} (signed)
///
/// Lines starting with '#' and blank lines are ignored.
struct GraphFile {
    GraphKind kind = GraphKind::multigraph;
    int order = 0;
    std::vector<Edge> edges;  // sorted by (u, v)

    Multigraph multigraph() const;  // requires kind == multigraph
    SignedGraph signed_graph() const;  // requires kind == signed_graph
};

/// Throws ParseError carrying the 1-based line number and the reason.
GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_text(const std::string& text);

GraphFile to_graph_file(const Multigraph& m);
GraphFile to_graph_file(const SignedGraph& s);

/// Normalized text: header, then edges sorted by (u, v); signs written +1/-1.
std::string serialize(const GraphFile& f);

/// The other side of the signed ↔ multigraph bijection.
GraphFile convert(const GraphFile& f);

}  // namespace twomain
