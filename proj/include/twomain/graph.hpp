#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace twomain {

/// Largest order any graph value may have.
inline constexpr int kMaxOrder = 64;

/// One unordered vertex pair with its entry (weight, sign or 1 for simple edges).
struct Edge {
    int u = 0;
    int v = 0;
    int value = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dense symmetric table over vertex pairs of an order-n graph, stored as the
/// strict upper triangle. The diagonal is implicitly zero.
class SymmetricTable {
public:
    SymmetricTable() = default;
    explicit SymmetricTable(int order);

    int order() const noexcept { return order_; }
    int at(int u, int v) const noexcept {
        if (u == v) return 0;
        return cells_[index(u, v)];
    }
    void set(int u, int v, int value);

    friend bool operator==(const SymmetricTable&, const SymmetricTable&) = default;

private:
    std::size_t index(int u, int v) const noexcept {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * order_ - u - 1) / 2 + (v - u - 1);
    }

    int order_ = 0;
    std::vector<std::int8_t> cells_;
};

/// Full n×n integer symmetric matrix; the common input of the walk-matrix machinery.
class IntSymMatrix {
public:
    IntSymMatrix() = default;
    explicit IntSymMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order, 0) {}

    int order() const noexcept { return order_; }
    int at(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    void set(int i, int j, int x) {
        data_[static_cast<std::size_t>(i) * order_ + j] = x;
        data_[static_cast<std::size_t>(j) * order_ + i] = x;
    }
    int max_abs_entry() const noexcept;

private:
    int order_ = 0;
    std::vector<int> data_;
};

/// Simple undirected graph (0/1 adjacency, no loops).
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int order, std::span<const Edge> edges);

    int order() const noexcept { return table_.order(); }
    bool adjacent(int u, int v) const noexcept { return table_.at(u, v) != 0; }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int edge_count() const;
    std::vector<Edge> edges() const;
    bool connected() const;

    /// Subgraph induced on `keep`; vertex i of the result is keep[i].
    SimpleGraph induced(std::span<const int> keep) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    SymmetricTable table_;
};

/// (0,1,2)-multigraph: every vertex pair carries 0, 1 or 2 parallel edges.
class Multigraph {
public:
    Multigraph() = default;
    /// Throws std::invalid_argument on loops, out-of-range vertices, duplicate
    /// pairs or weights outside {1,2} (zero-weight entries are skipped).
    Multigraph(int order, std::span<const Edge> edges);

    int order() const noexcept { return table_.order(); }
    int weight(int u, int v) const noexcept { return table_.at(u, v); }
    /// Nonzero pairs sorted by (u, v) with u < v.
    std::vector<Edge> edges() const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    IntSymMatrix adjacency() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    SymmetricTable table_;
};

/// Signed simple graph: each pair is absent (0) or carries a sign ±1.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int order, std::span<const Edge> edges);

    int order() const noexcept { return table_.order(); }
    int sign(int u, int v) const noexcept { return table_.at(u, v); }
    std::vector<Edge> edges() const;
    IntSymMatrix adjacency() const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    SymmetricTable table_;
};

struct DegreeProfile {
    std::vector<long long> degrees;   // d(v)
    std::vector<long long> s_values;  // s(v) = Σ w(u,v)·d(u)
};

struct NetDegreeProfile {
    std::vector<int> net_degrees;
};

/// Adjacency J − I − A(S): positive ↦ 0, absent ↦ 1, negative ↦ 2.
Multigraph associated_multigraph(const SignedGraph& s);
/// Inverse of associated_multigraph.
SignedGraph signed_from_multigraph(const Multigraph& m);

DegreeProfile degree_profile(const Multigraph& m);
SimpleGraph b_graph(const Multigraph& m);

NetDegreeProfile net_degree_profile(const SignedGraph& s);
bool is_net_regular(const SignedGraph& s);

}  // namespace twomain
