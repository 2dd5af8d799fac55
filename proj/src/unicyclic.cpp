#include "twomain/unicyclic.hpp"

#include "twomain/errors.hpp"

#include <algorithm>
#include <deque>

namespace twomain {

namespace {

void extend_longest(const SimpleGraph& g, int forbidden, std::vector<int>& cur, std::vector<bool>& used,
                    std::vector<int>& best) {
    if (cur.size() > best.size()) best = cur;
    int x = cur.back();
    for (int y = 0; y < g.order(); ++y) {
        if (y == forbidden || used[y] || !g.adjacent(x, y)) continue;
        used[y] = true;
        cur.push_back(y);
        extend_longest(g, forbidden, cur, used, best);
        cur.pop_back();
        used[y] = false;
    }
}

}  // namespace

bool is_unicyclic(const SimpleGraph& g) { return g.connected() && g.edge_count() == g.order(); }

bool is_cycle_graph(const SimpleGraph& g) {
    if (g.order() < 3 || !g.connected()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_tree(const SimpleGraph& g) { return g.connected() && g.edge_count() == g.order() - 1; }

UnicyclicDecomposition unicyclic_decompose(const SimpleGraph& g) {
    if (!g.connected()) throw NotUnicyclic("graph is disconnected");
    if (g.edge_count() != g.order())
        throw NotUnicyclic("edge count " + std::to_string(g.edge_count()) + " differs from order " +
                           std::to_string(g.order()));
    const int n = g.order();

    // Peel leaves; what survives is the cycle.
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        removed[v] = true;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && g.adjacent(u, v) && --deg[u] == 1) leaves.push_back(u);
    }

    UnicyclicDecomposition d;
    d.parent.assign(n, -1);
    d.depth.assign(n, -1);
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            d.depth[v] = 0;
            if (start < 0) start = v;
        } else {
            d.forest.push_back(v);
        }
    }

    // Walk the cycle: from the smallest vertex towards its smaller cycle neighbour.
    d.cycle.push_back(start);
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int u = 0; u < n; ++u) {
            if (u != prev && d.depth[u] == 0 && g.adjacent(cur, u)) {
                next = u;
                break;
            }
        }
        if (next == start || next < 0) break;
        d.cycle.push_back(next);
        prev = cur;
        cur = next;
        if (d.cycle.size() > static_cast<std::size_t>(n)) break;
    }

    // BFS outwards from the cycle for parents and depths.
    std::deque<int> queue(d.cycle.begin(), d.cycle.end());
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y = 0; y < n; ++y) {
            if (d.depth[y] < 0 && g.adjacent(x, y)) {
                d.depth[y] = d.depth[x] + 1;
                d.parent[y] = x;
                if (d.depth[x] == 0) d.attachment[x].push_back(y);
                queue.push_back(y);
            }
        }
    }
    for (auto& [hub, roots] : d.attachment) std::sort(roots.begin(), roots.end());
    return d;
}

std::vector<int> longest_v_path(const SimpleGraph& tree, int v, int forbidden) {
    std::vector<int> cur{v}, best;
    std::vector<bool> used(tree.order(), false);
    used[v] = true;
    extend_longest(tree, forbidden, cur, used, best);
    return best;
}

VertexRole vertex_role(const SimpleGraph& tree, int v, int anchor) {
    if (!tree.adjacent(v, anchor))
        throw NotAdjacent("vertex " + std::to_string(v) + " is not adjacent to " + std::to_string(anchor));
    return {anchor, static_cast<int>(longest_v_path(tree, v, anchor).size())};
}

bool is_longest_path_by_branch_depths(const SimpleGraph& tree, std::span<const int> path) {
    const int l = static_cast<int>(path.size()) - 1;
    if (l < 2) return false;
    const int half = l / 2;
    auto sides_within = [&](int k, int excluded, int bound) {
        for (int v : tree.neighbors(path[k])) {
            if (v == excluded) continue;
            if (vertex_role(tree, v, path[k]).depth > bound) return false;
        }
        return true;
    };
    for (int k = 1; k <= l - 1; ++k) {
        // The middle vertex of an even path is bounded from both ends.
        if (k <= half && !sides_within(k, path[k + 1], k)) return false;
        if (k >= l - half && !sides_within(k, path[k - 1], l - k)) return false;
    }
    return true;
}

std::vector<int> tree_path(const SimpleGraph& tree, int from, int to) {
    std::vector<int> parent(tree.order(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (int y : tree.neighbors(x)) {
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace twomain
