#include "twomain/enumerate.hpp"

#include "twomain/errors.hpp"
#include "twomain/unicyclic.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace twomain {

std::string to_string(BGraphKind k) {
    switch (k) {
        case BGraphKind::cycle: return "cycle";
        case BGraphKind::unicyclic: return "unicyclic";
        case BGraphKind::tree: return "tree";
        case BGraphKind::any_connected: return "any-connected";
    }
    return "?";
}

std::optional<BGraphKind> parse_bgraph_kind(std::string_view text) {
    for (BGraphKind k : {BGraphKind::cycle, BGraphKind::unicyclic, BGraphKind::tree, BGraphKind::any_connected})
        if (to_string(k) == text) return k;
    return std::nullopt;
}

int EnumerationLimits::for_kind(BGraphKind k) const {
    switch (k) {
        case BGraphKind::cycle: return cycle;
        case BGraphKind::unicyclic: return unicyclic;
        case BGraphKind::tree: return tree;
        case BGraphKind::any_connected: return any_connected;
    }
    return 0;
}

namespace {

Multigraph unit_weights(const SimpleGraph& g) {
    auto es = g.edges();
    return Multigraph(g.order(), es);
}

SimpleGraph as_simple(const Multigraph& m) { return b_graph(m); }

// Canonical dedup of simple graphs; the map keeps shapes in key order.
using ShapeMap = std::map<CanonicalKey, SimpleGraph>;

void insert_shape(ShapeMap& out, const SimpleGraph& g) {
    CanonicalForm cf = canonical_form(unit_weights(g), g.order());
    out.try_emplace(cf.key, as_simple(cf.graph));
}

SimpleGraph cycle_shape(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n), 1});
    return SimpleGraph(n, es);
}

// Every way of hanging one new leaf on a shape.
std::vector<SimpleGraph> leaf_extensions(const SimpleGraph& g) {
    std::vector<SimpleGraph> out;
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        auto es = g.edges();
        es.push_back({v, n, 1});
        out.emplace_back(n + 1, es);
    }
    return out;
}

std::vector<SimpleGraph> values(const ShapeMap& m) {
    std::vector<SimpleGraph> out;
    for (const auto& [k, g] : m) out.push_back(g);
    return out;
}

std::vector<SimpleGraph> tree_shapes(int n) {
    if (n == 1) return {SimpleGraph(1, std::vector<Edge>{})};
    ShapeMap out;
    for (const auto& t : tree_shapes(n - 1))
        for (const auto& g : leaf_extensions(t)) insert_shape(out, g);
    return values(out);
}

// Every non-cycle unicyclic graph has a leaf whose removal leaves a smaller
// unicyclic graph, so growth from C_3 by leaves reaches them all.
std::vector<SimpleGraph> unicyclic_shapes(int n) {
    ShapeMap out;
    insert_shape(out, cycle_shape(n));
    if (n > 3)
        for (const auto& u : unicyclic_shapes(n - 1))
            for (const auto& g : leaf_extensions(u)) insert_shape(out, g);
    return values(out);
}

std::vector<SimpleGraph> connected_shapes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    ShapeMap out;
    const unsigned long long total = 1ULL << pairs.size();
    for (unsigned long long mask = 0; mask < total; ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1ULL) es.push_back({pairs[i].first, pairs[i].second, 1});
        SimpleGraph g(n, es);
        if (g.connected()) insert_shape(out, g);
    }
    return values(out);
}

// For the cycle shape 0-1-…-(n−1)-0 with edge i = {i, i+1}: keep only the
// lexicographically smallest word among its rotations and reflections, so
// each dihedral class is canonicalized once.
bool is_dihedral_minimum(unsigned long long mask, int n) {
    auto bit = [&](int i) { return static_cast<int>(mask >> i & 1ULL); };
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < n; ++r) {
            if (dir == 0 && r == 0) continue;
            for (int i = 0; i < n; ++i) {
                int j = dir == 0 ? (i + r) % n : ((r - i) % n + n) % n;
                int a = bit(i), b = bit(j);
                if (b < a) return false;
                if (b > a) break;
            }
        }
    }
    return true;
}

struct Unit {
    int shape = 0;
    unsigned long long first = 0;
    unsigned long long last = 0;  // exclusive
};

}  // namespace

std::vector<SimpleGraph> bgraph_shapes(int order, BGraphKind kind) {
    switch (kind) {
        case BGraphKind::cycle:
            if (order < 3) throw OrderTooSmall("cycle B-graphs need order >= 3");
            return {cycle_shape(order)};
        case BGraphKind::unicyclic:
            if (order < 3) throw OrderTooSmall("unicyclic B-graphs need order >= 3");
            return unicyclic_shapes(order);
        case BGraphKind::tree:
            if (order < 2) throw OrderTooSmall("tree enumeration needs order >= 2");
            return tree_shapes(order);
        case BGraphKind::any_connected:
            if (order < 2) throw OrderTooSmall("connected enumeration needs order >= 2");
            return connected_shapes(order);
    }
    return {};
}

EnumerationResult enumerate(const EnumerationTask& task) {
    const int n = task.order;
    const int limit = task.limits.for_kind(task.kind);
    if (n > limit) throw OrderTooLarge(n, limit);
    const std::vector<SimpleGraph> shapes = bgraph_shapes(n, task.kind);
    const int canon_cap = std::max(n, task.canonical_cap);

    std::vector<std::vector<Edge>> shape_edges;
    std::vector<Unit> units;
    EnumerationResult result;
    result.shapes = static_cast<int>(shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        shape_edges.push_back(shapes[s].edges());
        const int e = static_cast<int>(shape_edges.back().size());
        const unsigned long long total = 1ULL << e;
        result.raw_weightings += static_cast<long long>(total);
        const unsigned long long chunk = std::max<unsigned long long>(1, total >> 6);
        for (unsigned long long f = 0; f < total; f += chunk)
            units.push_back({static_cast<int>(s), f, std::min(total, f + chunk)});
    }
    // The cycle shape built by bgraph_shapes has edges sorted by (u, v):
    // {0,1},{0,n−1},{1,2},…; map them back to cycle order for the dihedral filter.
    std::vector<int> cycle_slot;
    if (task.kind == BGraphKind::cycle) {
        for (const Edge& e : shape_edges[0]) cycle_slot.push_back(e.u == 0 && e.v == n - 1 ? n - 1 : e.u);
    }

    const int jobs = std::max(1, task.jobs);
    std::vector<std::map<CanonicalKey, Multigraph>> found(jobs);
    auto work = [&](int w) {
        auto& local = found[w];
        for (std::size_t u = static_cast<std::size_t>(w); u < units.size(); u += static_cast<std::size_t>(jobs)) {
            const Unit& unit = units[u];
            const auto& base = shape_edges[unit.shape];
            for (unsigned long long mask = unit.first; mask < unit.last; ++mask) {
                std::vector<Edge> es = base;
                unsigned long long word = 0;
                for (std::size_t i = 0; i < es.size(); ++i) {
                    const bool two = mask >> i & 1ULL;
                    es[i].value = two ? 2 : 1;
                    if (two && !cycle_slot.empty()) word |= 1ULL << cycle_slot[i];
                }
                if (!cycle_slot.empty() && !is_dihedral_minimum(word, n)) continue;
                CanonicalForm cf = canonical_form(Multigraph(n, es), canon_cap);
                local.try_emplace(std::move(cf.key), std::move(cf.graph));
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::map<CanonicalKey, Multigraph> merged;
    for (auto& local : found) merged.merge(local);

    std::vector<EnumerationRecord> candidates;
    candidates.reserve(merged.size());
    for (auto& [key, g] : merged) {
        EnumerationRecord r;
        r.key = key;
        r.graph = g;
        candidates.push_back(std::move(r));
    }
    std::vector<char> keep(candidates.size(), 0);
    auto analyze = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < candidates.size(); i += static_cast<std::size_t>(jobs)) {
            EnumerationRecord& r = candidates[i];
            r.walk_rank = walk_rank(r.graph);
            r.ab = solve_ab(r.graph);
            if (task.filter == EnumFilter::two_main_only && r.walk_rank != 2) continue;
            keep[i] = 1;
            if (task.classify && r.walk_rank == 2 && r.ab.valid() && is_unicyclic(b_graph(r.graph)))
                r.classification = classify_two_main(r.graph, canon_cap);
        }
    };
    if (jobs == 1) {
        analyze(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(analyze, w);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) result.records.push_back(std::move(candidates[i]));
    return result;
}

}  // namespace twomain
