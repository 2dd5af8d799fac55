#include "twomain/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace twomain {

namespace {

void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxOrder) +
                                    "], got " + std::to_string(order));
    }
}

// Shared validation for edge-list constructors. `allowed` decides which entry
// values are legal; zero entries are treated as "no edge" and skipped.
template <typename Allowed>
SymmetricTable build_table(int order, std::span<const Edge> edges, Allowed allowed, const char* what) {
    check_order(order);
    SymmetricTable table(order);
    std::vector<bool> seen(static_cast<std::size_t>(order) * order, false);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
            throw std::invalid_argument("vertex out of range in edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        if (e.u == e.v) throw std::invalid_argument("self-loop forbidden at vertex " + std::to_string(e.u));
        auto key = static_cast<std::size_t>(std::min(e.u, e.v)) * order + std::max(e.u, e.v);
        if (seen[key])
            throw std::invalid_argument("duplicate pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        seen[key] = true;
        if (e.value == 0) continue;
        if (!allowed(e.value))
            throw std::invalid_argument(std::string("invalid ") + what + " " + std::to_string(e.value));
        table.set(e.u, e.v, e.value);
    }
    return table;
}

std::vector<Edge> table_edges(const SymmetricTable& t) {
    std::vector<Edge> out;
    for (int u = 0; u < t.order(); ++u)
        for (int v = u + 1; v < t.order(); ++v)
            if (int x = t.at(u, v); x != 0) out.push_back({u, v, x});
    return out;
}

IntSymMatrix table_matrix(const SymmetricTable& t) {
    IntSymMatrix a(t.order());
    for (int u = 0; u < t.order(); ++u)
        for (int v = u + 1; v < t.order(); ++v) a.set(u, v, t.at(u, v));
    return a;
}

}  // namespace

SymmetricTable::SymmetricTable(int order)
    : order_(order), cells_(static_cast<std::size_t>(order) * (order - 1) / 2, 0) {}

void SymmetricTable::set(int u, int v, int value) {
    if (u == v) throw std::invalid_argument("diagonal entries are fixed at zero");
    cells_[index(u, v)] = static_cast<std::int8_t>(value);
}

int IntSymMatrix::max_abs_entry() const noexcept {
    int m = 0;
    for (int x : data_) m = std::max(m, std::abs(x));
    return m;
}

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges)
    : table_(build_table(order, edges, [](int x) { return x == 1; }, "simple-graph entry")) {}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < order(); ++u)
        if (adjacent(u, v)) out.push_back(u);
    return out;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < order(); ++u) d += adjacent(u, v) ? 1 : 0;
    return d;
}

int SimpleGraph::edge_count() const {
    int m = 0;
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v) m += adjacent(u, v) ? 1 : 0;
    return m;
}

std::vector<Edge> SimpleGraph::edges() const { return table_edges(table_); }

bool SimpleGraph::connected() const {
    const int n = order();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y) {
            if (!seen[y] && adjacent(x, y)) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

SimpleGraph SimpleGraph::induced(std::span<const int> keep) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) es.push_back({static_cast<int>(i), static_cast<int>(j), 1});
    return SimpleGraph(static_cast<int>(keep.size()), es);
}

// ----------------------------------------------------------------- Multigraph

Multigraph::Multigraph(int order, std::span<const Edge> edges)
    : table_(build_table(order, edges, [](int x) { return x == 1 || x == 2; }, "multiplicity")) {}

std::vector<Edge> Multigraph::edges() const { return table_edges(table_); }

std::vector<int> Multigraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < order(); ++u)
        if (weight(u, v) != 0) out.push_back(u);
    return out;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < order(); ++u) d += weight(u, v);
    return d;
}

IntSymMatrix Multigraph::adjacency() const { return table_matrix(table_); }

// ---------------------------------------------------------------- SignedGraph

SignedGraph::SignedGraph(int order, std::span<const Edge> edges)
    : table_(build_table(order, edges, [](int x) { return x == 1 || x == -1; }, "sign")) {}

std::vector<Edge> SignedGraph::edges() const { return table_edges(table_); }

IntSymMatrix SignedGraph::adjacency() const { return table_matrix(table_); }

// ---------------------------------------------------------------- conversions

Multigraph associated_multigraph(const SignedGraph& s) {
    std::vector<Edge> es;
    for (int u = 0; u < s.order(); ++u)
        for (int v = u + 1; v < s.order(); ++v)
            if (int w = 1 - s.sign(u, v); w != 0) es.push_back({u, v, w});
    return Multigraph(s.order(), es);
}

SignedGraph signed_from_multigraph(const Multigraph& m) {
    std::vector<Edge> es;
    for (int u = 0; u < m.order(); ++u)
        for (int v = u + 1; v < m.order(); ++v)
            if (int x = 1 - m.weight(u, v); x != 0) es.push_back({u, v, x});
    return SignedGraph(m.order(), es);
}

DegreeProfile degree_profile(const Multigraph& m) {
    const int n = m.order();
    DegreeProfile p;
    p.degrees.assign(n, 0);
    p.s_values.assign(n, 0);
    for (int v = 0; v < n; ++v) p.degrees[v] = m.degree(v);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) p.s_values[v] += static_cast<long long>(m.weight(u, v)) * p.degrees[u];
    return p;
}

SimpleGraph b_graph(const Multigraph& m) {
    auto es = m.edges();
    for (auto& e : es) e.value = 1;
    return SimpleGraph(m.order(), es);
}

NetDegreeProfile net_degree_profile(const SignedGraph& s) {
    NetDegreeProfile p;
    p.net_degrees.assign(s.order(), 0);
    for (const Edge& e : s.edges()) {
        p.net_degrees[e.u] += e.value;
        p.net_degrees[e.v] += e.value;
    }
    return p;
}

bool is_net_regular(const SignedGraph& s) {
    auto p = net_degree_profile(s);
    return std::adjacent_find(p.net_degrees.begin(), p.net_degrees.end(), std::not_equal_to<>()) ==
           p.net_degrees.end();
}

}  // namespace twomain
