#pragma once

#include "twomain/graph.hpp"

#include <map>
#include <span>
#include <vector>

namespace twomain {

/// Split of a connected unicyclic graph into its unique cycle and the pendant forest.
struct UnicyclicDecomposition {
    /// Cycle in traversal order: starts at its smallest vertex and steps first
    /// to the smaller of that vertex's two cycle neighbours.
    std::vector<int> cycle;
    /// Forest vertices, ascending.
    std::vector<int> forest;
    /// Cycle vertex -> roots of the pendant trees hanging from it (ascending).
    std::map<int, std::vector<int>> attachment;
    /// For every vertex, its neighbour one step closer to the cycle (-1 on the cycle).
    std::vector<int> parent;
    /// Distance to the cycle (0 on the cycle).
    std::vector<int> depth;

    bool on_cycle(int v) const { return depth[v] == 0; }
};

/// Throws NotUnicyclic when `g` is disconnected or |E| != |V|.
UnicyclicDecomposition unicyclic_decompose(const SimpleGraph& g);

/// True iff `g` is connected and has exactly one cycle.
bool is_unicyclic(const SimpleGraph& g);
/// True iff `g` is connected, 2-regular (a single cycle through every vertex).
bool is_cycle_graph(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);

/// Longest path starting at `v` within v's component of `tree`, avoiding
/// `forbidden` (pass -1 for none). Ties go to the lexicographically smallest
/// vertex sequence. A lone vertex yields the one-vertex path.
std::vector<int> longest_v_path(const SimpleGraph& tree, int v, int forbidden = -1);

/// `v` is a (anchor, depth)-vertex: depth counts the vertices of the longest
/// v-path in tree − anchor, so a leaf hanging from `anchor` has depth 1.
struct VertexRole {
    int anchor = 0;
    int depth = 1;
};

/// Throws NotAdjacent if v is not a neighbour of anchor.
VertexRole vertex_role(const SimpleGraph& tree, int v, int anchor);

/// Branch-depth test for a path v0…vl (l ≥ 2) of a tree: every side neighbour
/// of an interior v_k must have depth ≤ k on the first half and ≤ l−k on the
/// second half. Equivalent to `path` being a longest path of the tree.
bool is_longest_path_by_branch_depths(const SimpleGraph& tree, std::span<const int> path);

/// Unique path between two vertices of a tree (inclusive), or empty if none.
std::vector<int> tree_path(const SimpleGraph& tree, int from, int to);

}  // namespace twomain
