#include "twomain/families.hpp"

#include "twomain/errors.hpp"
#include "twomain/unicyclic.hpp"

#include <array>
#include <algorithm>

namespace twomain {

namespace {

constexpr std::array<std::string_view, 10> kTagNames = {"U1", "U2", "U3", "U4", "U5", "U6", "U7", "H1", "H2", "H3"};

// Incremental edge-list builder for the generators.
struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    int add_vertex() { return n++; }
    void link(int u, int v, int w) { edges.push_back({u, v, w}); }
    int add_leaf(int parent, int w) {
        int x = add_vertex();
        link(parent, x, w);
        return x;
    }
    Multigraph build() const { return Multigraph(n, edges); }
};

}  // namespace

std::string to_string(FamilyTag tag) { return std::string(kTagNames[static_cast<int>(tag)]); }

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i)
        if (kTagNames[i] == text) return static_cast<FamilyTag>(i);
    return std::nullopt;
}

bool is_cyclic_family(FamilyTag tag) { return static_cast<int>(tag) <= static_cast<int>(FamilyTag::U7); }

CyclicPattern cyclic_pattern(FamilyTag tag, int t) {
    switch (tag) {
        case FamilyTag::U1: return {1, 3, t};
        case FamilyTag::U2: return {1, 2, t};
        case FamilyTag::U3: return {2, 1, t};
        case FamilyTag::U4: return {3, 2, t};
        case FamilyTag::U5: return {3, 1, t};
        case FamilyTag::U6: return {1, 1, t};
        case FamilyTag::U7: return {1, 0, t};
        default: throw UnknownTag(to_string(tag) + " is not a cyclic-pattern family");
    }
}

Multigraph generate_cyclic(const CyclicPattern& p) {
    if (p.n1 < 1) throw BadParameters("n1 must be >= 1");
    if (p.n2 < 0) throw BadParameters("n2 must be >= 0");
    if (p.t < 1) throw BadParameters("t must be >= 1");
    const int n = p.order();
    if (n < 3) throw OrderTooSmall("cyclic pattern has order " + std::to_string(n) + " < 3");
    const int period = p.n1 + p.n2;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        int w = (i % period) < p.n1 ? 2 : 1;
        int u = i, v = (i + 1) % n;
        es.push_back({std::min(u, v), std::max(u, v), w});
    }
    return Multigraph(n, es);
}

void validate(const FamilySpec& f) {
    switch (f.tag) {
        case FamilyTag::H1:
            if (f.b < 6 || f.b % 4 != 2) throw BadParameters("b must be ≡ 2 mod 4 and ≥ 6");
            if (f.t < 4 || f.t % 2 != 0) throw BadParameters("t must be even and ≥ 4");
            return;
        case FamilyTag::H2:
            if (f.b < 4 || f.b % 4 != 0) throw BadParameters("b must be ≡ 0 mod 4 and ≥ 4");
            if (f.t < 3) throw BadParameters("t must be ≥ 3");
            return;
        case FamilyTag::H3:
            if (f.b < 6 || f.b % 4 != 2) throw BadParameters("b must be ≡ 2 mod 4 and ≥ 6");
            if (f.t < 3) throw BadParameters("t must be ≥ 3");
            return;
        default: {
            if (f.t < 1) throw BadParameters("t must be ≥ 1");
            auto p = cyclic_pattern(f.tag, f.t);
            if (p.order() < 3)
                throw BadParameters("t must give order ≥ 3 (" + to_string(f.tag) + " has order " +
                                    std::to_string(p.order()) + ")");
            return;
        }
    }
}

BlockD make_block(BlockKind kind, int b) {
    BlockD d;
    d.kind = kind;
    d.b = b;
    Builder g;
    int v1 = g.add_vertex(), v2 = g.add_vertex(), v3 = g.add_vertex(), v4 = g.add_vertex();
    d.named = {v1, v2, v3, v4};
    if (kind == BlockKind::D1) {
        if (b < 4 || b % 4 != 0) throw BadParameters("D1 needs b ≡ 0 mod 4 and ≥ 4");
        const int k = b / 4;
        g.link(v1, v2, 1);
        g.link(v2, v3, 1);
        g.link(v2, v4, 1);
        for (int i = 0; i < k - 1; ++i) g.add_leaf(v2, 2);
        for (int i = 0; i < k; ++i) g.add_leaf(v4, 2);
        d.left = v1;
        d.right = v3;
    } else {
        if (b < 6 || b % 4 != 2) throw BadParameters("D2 needs b ≡ 2 mod 4 and ≥ 6");
        const int k = (b - 2) / 4;
        g.link(v1, v2, 1);
        g.link(v2, v3, 1);
        g.link(v3, v4, 1);
        for (int i = 0; i < k; ++i) g.add_leaf(v2, 2);
        for (int i = 0; i < k; ++i) g.add_leaf(v3, 2);
        d.left = v1;
        d.right = v4;
    }
    d.graph = g.build();
    return d;
}

Multigraph glue_cyclically(const BlockD& block, int t) {
    if (t < 1) throw BadParameters("t must be ≥ 1");
    if (block.kind == BlockKind::D1 && t < 2) throw BadParameters("a single D1 block cannot close on itself");
    const int m = block.graph.order();
    // Copy c owns bridge c (its left connector) followed by its interior
    // vertices; its right connector is bridge c+1 (mod t).
    std::vector<int> id(static_cast<std::size_t>(t) * m, -1);
    std::vector<int> bridge(t);
    int next = 0;
    for (int c = 0; c < t; ++c) {
        bridge[c] = next++;
        for (int x = 0; x < m; ++x)
            if (x != block.left && x != block.right) id[static_cast<std::size_t>(c) * m + x] = next++;
    }
    for (int c = 0; c < t; ++c) {
        id[static_cast<std::size_t>(c) * m + block.left] = bridge[c];
        id[static_cast<std::size_t>(c) * m + block.right] = bridge[(c + 1) % t];
    }
    std::vector<Edge> es;
    for (int c = 0; c < t; ++c)
        for (const Edge& e : block.graph.edges())
            es.push_back({id[static_cast<std::size_t>(c) * m + e.u], id[static_cast<std::size_t>(c) * m + e.v], e.value});
    return Multigraph(next, es);
}

Multigraph generate_family(const FamilySpec& f) {
    validate(f);
    switch (f.tag) {
        case FamilyTag::H2: return glue_cyclically(make_block(BlockKind::D1, f.b), f.t);
        case FamilyTag::H3: return glue_cyclically(make_block(BlockKind::D2, f.b), f.t);
        case FamilyTag::H1: {
            const int k = (f.b - 2) / 4;
            Builder g;
            for (int i = 0; i < f.t; ++i) g.add_vertex();
            for (int i = 0; i < f.t; ++i) g.link(i, (i + 1) % f.t, 1);
            for (int hub = 1; hub < f.t; hub += 2) {
                for (int i = 0; i < k - 1; ++i) g.add_leaf(hub, 2);
                int x2 = g.add_leaf(hub, 1);
                int x1 = g.add_leaf(x2, 1);
                g.add_leaf(x1, 2);
                for (int i = 0; i < k - 1; ++i) g.add_leaf(x1, 2);
            }
            return g.build();
        }
        default: return generate_cyclic(cyclic_pattern(f.tag, f.t));
    }
}

ExpectedAB expected_ab(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::U1: return {false, 3, -1};
        case FamilyTag::U2: return {false, 2, 2};
        case FamilyTag::U3: return {false, 1, 8};
        case FamilyTag::U4: return {false, 4, -2};
        case FamilyTag::U5: return {false, 3, 2};
        case FamilyTag::U6:
        case FamilyTag::U7: return {true, 0, 0};
        default: throw UnknownTag(to_string(tag) + " has no fixed (a,b)");
    }
}

std::string to_string(H1Condition c) {
    switch (c) {
        case H1Condition::none: return "none";
        case H1Condition::parameters: return "parameters";
        case H1Condition::unicyclic: return "(1) unicyclic";
        case H1Condition::cycle: return "(2) cycle";
        case H1Condition::pendant: return "(3) pendant trees";
    }
    return "unknown";
}

H1Diagnostics is_member_H1(const Multigraph& m, long long b, bool require_b_domain) {
    H1Diagnostics out;
    auto fail = [&](H1Condition c, std::string detail) {
        out.failed = c;
        out.detail = std::move(detail);
        return out;
    };
    if (require_b_domain && (b < 6 || b % 4 != 2))
        return fail(H1Condition::parameters, "b must be ≡ 2 mod 4 and ≥ 6");
    if (b < 6 || b % 2 != 0) return fail(H1Condition::parameters, "b must be even and ≥ 6");
    const long long hub_degree = b / 2;

    const SimpleGraph g = b_graph(m);
    if (!is_unicyclic(g)) return fail(H1Condition::unicyclic, "B-graph is not connected unicyclic");
    const UnicyclicDecomposition d = unicyclic_decompose(g);
    const auto& cyc = d.cycle;
    const int c = static_cast<int>(cyc.size());
    out.cycle_length = c;

    // kind[v]: 0 = degree-2 kind, 1 = degree-b/2 kind
    std::vector<int> kind(m.order(), -1);
    for (int i = 0; i < c; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % c];
        if (m.weight(u, v) != 1)
            return fail(H1Condition::cycle, "cycle edge (" + std::to_string(u) + "," + std::to_string(v) + ") has weight 2");
    }
    if (c % 2 != 0) return fail(H1Condition::cycle, "odd cycle cannot alternate degrees");
    const int start_kind = m.degree(cyc[0]) == 2 ? 0 : 1;
    for (int i = 0; i < c; ++i) {
        int want = (start_kind + i) % 2;
        long long deg = m.degree(cyc[i]);
        if (deg != (want == 0 ? 2 : hub_degree))
            return fail(H1Condition::cycle, "cycle vertex " + std::to_string(cyc[i]) + " has degree " +
                                                std::to_string(deg) + " breaking the 2, b/2 alternation");
        kind[cyc[i]] = want;
    }

    // Forest vertices in BFS order (parents first).
    std::vector<int> order(d.forest.begin(), d.forest.end());
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d.depth[x] < d.depth[y]; });
    for (int x : order) {
        int want = 1 - kind[d.parent[x]];
        long long deg = m.degree(x);
        if (deg != (want == 0 ? 2 : hub_degree))
            return fail(H1Condition::pendant, "pendant vertex " + std::to_string(x) + " has degree " +
                                                  std::to_string(deg) + ", expected " +
                                                  std::to_string(want == 0 ? 2 : hub_degree));
        kind[x] = want;
    }
    out.member = true;
    return out;
}

}  // namespace twomain
