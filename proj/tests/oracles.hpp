#pragma once

// Independent reference implementations used only by the tests. Each is the
// slow, obvious algorithm; none shares code with the library paths it checks.

#include "twomain/graph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using twomain::Edge;
using twomain::IntSymMatrix;
using twomain::Multigraph;

/// Rank of the Krylov matrix [j, Aj, …] by plain rational Gaussian elimination.
inline int krylov_rank(const IntSymMatrix& a) {
    const int n = a.order();
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
    std::vector<mpz_class> x(n, 1);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) rows[i][k] = x[i];
        std::vector<mpz_class> y(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y[i] += a.at(i, j) * x[j];
        x = std::move(y);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const mpq_class f = rows[r][col] / rows[rank][col];
            for (int c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline int krylov_rank(const Multigraph& m) { return krylov_rank(m.adjacency()); }

inline bool same_under(const Multigraph& a, const Multigraph& b, const std::vector<int>& p) {
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.weight(i, j) != b.weight(p[i], p[j])) return false;
    return true;
}

/// Weight-preserving isomorphism by trying every permutation.
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (same_under(a, b, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Number of automorphism orbits by trying every permutation.
inline int orbit_count(const Multigraph& m) {
    const int n = m.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!same_under(m, m, p)) continue;
        for (int i = 0; i < n; ++i) parent[find(i)] = find(p[i]);
    } while (std::next_permutation(p.begin(), p.end()));
    int count = 0;
    for (int i = 0; i < n; ++i) count += find(i) == i;
    return count;
}

/// Integer (a, b) with a·d(v) + b = s(v) at every vertex, searched in a box.
inline std::optional<std::pair<long long, long long>> search_ab(const Multigraph& m, long long box = 60) {
    const int n = m.order();
    std::vector<long long> d(n), s(n, 0);
    for (int v = 0; v < n; ++v) d[v] = m.degree(v);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) s[v] += static_cast<long long>(m.weight(u, v)) * d[u];
    for (long long a = -box; a <= box; ++a)
        for (long long b = -4 * box; b <= 4 * box; ++b) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) ok = a * d[v] + b == s[v];
            if (ok) return std::make_pair(a, b);
        }
    return std::nullopt;
}

/// Binary bracelets of length n (necklaces up to rotation and reflection), by Burnside.
inline long long bracelets(int n) {
    auto pow2 = [](int e) { return 1LL << e; };
    long long rot = 0;
    for (int k = 0; k < n; ++k) rot += pow2(std::gcd(k, n));
    const long long refl = n % 2 ? n * pow2((n + 1) / 2) : (n / 2) * (pow2(n / 2) + pow2(n / 2 + 1));
    return (rot + refl) / (2 * n);
}

inline bool connected(int n, const std::vector<Edge>& edges) {
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Edge& e : edges) {
            const int w = e.u == v ? e.v : e.v == v ? e.u : -1;
            if (w >= 0 && !seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int x) { return x; });
}

/// Random connected (0,1,2)-multigraph: a random spanning tree plus random extra pairs.
inline Multigraph random_connected(std::mt19937_64& rng, int n) {
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    std::uniform_int_distribution<int> wt(1, 2), coin(0, 2);
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        w[u][v] = wt(rng);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!w[u][v] && coin(rng) == 0) w[u][v] = wt(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (w[u][v]) edges.push_back({u, v, w[u][v]});
    return Multigraph(n, edges);
}

/// Cycle 0-1-…-(n−1)-0 with edge i carrying weights[i].
inline Multigraph cycle(const std::vector<int>& weights) {
    const int n = static_cast<int>(weights.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        const int u = i, v = (i + 1) % n;
        edges.push_back({std::min(u, v), std::max(u, v), weights[i]});
    }
    return Multigraph(n, edges);
}

}  // namespace oracle
