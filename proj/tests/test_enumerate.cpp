#include "oracles.hpp"

#include "twomain/canonical.hpp"
#include "twomain/enumerate.hpp"
#include "twomain/errors.hpp"
#include "twomain/unicyclic.hpp"

#include <doctest.h>

#include <algorithm>

using namespace twomain;

namespace {

// Non-isomorphic connected simple graphs of order n with exactly m edges, by
// trying every edge subset and every permutation.
int brute_shapes(int n, int m_edges) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v, 1});
    std::vector<Multigraph> reps;
    const int pairs = static_cast<int>(all.size());
    for (int mask = 0; mask < (1 << pairs); ++mask) {
        if (__builtin_popcount(mask) != m_edges) continue;
        std::vector<Edge> es;
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        if (!oracle::connected(n, es)) continue;
        const Multigraph g(n, es);
        if (std::none_of(reps.begin(), reps.end(), [&](const Multigraph& r) { return oracle::isomorphic(r, g); }))
            reps.push_back(g);
    }
    return static_cast<int>(reps.size());
}

// Two-main classes among all weightings of C_n, by brute force.
int brute_two_main_cycles(int n) {
    std::vector<Multigraph> reps;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? 2 : 1;
        const Multigraph m = oracle::cycle(w);
        if (oracle::krylov_rank(m) != 2) continue;
        if (std::none_of(reps.begin(), reps.end(), [&](const Multigraph& r) { return oracle::isomorphic(r, m); }))
            reps.push_back(m);
    }
    return static_cast<int>(reps.size());
}

EnumerationTask task_for(int n, BGraphKind k, EnumFilter f = EnumFilter::all, int jobs = 1) {
    EnumerationTask t;
    t.order = n;
    t.kind = k;
    t.filter = f;
    t.jobs = jobs;
    return t;
}

}  // namespace

TEST_CASE("kind names") {
    CHECK(to_string(BGraphKind::any_connected) == "any-connected");
    CHECK(parse_bgraph_kind("unicyclic") == BGraphKind::unicyclic);
    CHECK_FALSE(parse_bgraph_kind("forest").has_value());
}

TEST_CASE("cycle classes are bracelets") {
    for (int n = 3; n <= 10; ++n) {
        const EnumerationResult r = enumerate(task_for(n, BGraphKind::cycle));
        CHECK(static_cast<long long>(r.records.size()) == oracle::bracelets(n));
        CHECK(r.raw_weightings == (1LL << n));
        CHECK(r.shapes == 1);
    }
    CHECK(enumerate(task_for(3, BGraphKind::cycle)).records.size() == 4);
    CHECK(enumerate(task_for(5, BGraphKind::cycle)).records.size() == 8);
}

TEST_CASE("two-main cycle classes match brute force") {
    for (int n = 3; n <= 9; ++n)
        CHECK(static_cast<int>(enumerate(task_for(n, BGraphKind::cycle, EnumFilter::two_main_only)).records.size()) ==
              brute_two_main_cycles(n));
}

TEST_CASE("shape counts match brute force") {
    for (int n = 3; n <= 6; ++n) {
        CHECK(static_cast<int>(bgraph_shapes(n, BGraphKind::unicyclic).size()) == brute_shapes(n, n));
        CHECK(static_cast<int>(bgraph_shapes(n, BGraphKind::tree).size()) == brute_shapes(n, n - 1));
    }
    for (int n = 2; n <= 5; ++n) {
        int total = 0;
        for (int m = n - 1; m <= n * (n - 1) / 2; ++m) total += brute_shapes(n, m);
        CHECK(static_cast<int>(bgraph_shapes(n, BGraphKind::any_connected).size()) == total);
    }
    for (const SimpleGraph& g : bgraph_shapes(6, BGraphKind::unicyclic)) CHECK(is_unicyclic(g));
}

TEST_CASE("unicyclic enumeration: classes are distinct, canonical and filtered") {
    for (int n = 3; n <= 6; ++n) {
        const EnumerationResult all = enumerate(task_for(n, BGraphKind::unicyclic));
        const EnumerationResult two = enumerate(task_for(n, BGraphKind::unicyclic, EnumFilter::two_main_only));
        CHECK(std::is_sorted(all.records.begin(), all.records.end(),
                             [](const auto& a, const auto& b) { return a.key < b.key; }));
        long long expected_raw = 0;
        for (const SimpleGraph& g : bgraph_shapes(n, BGraphKind::unicyclic)) expected_raw += 1LL << g.edge_count();
        CHECK(all.raw_weightings == expected_raw);
        int two_main = 0;
        for (const auto& r : all.records) {
            CHECK(canonical_form(r.graph).key == r.key);
            CHECK(r.walk_rank == oracle::krylov_rank(r.graph));
            two_main += r.walk_rank == 2;
        }
        CHECK(static_cast<int>(two.records.size()) == two_main);
        for (std::size_t i = 1; i < all.records.size(); ++i) CHECK(all.records[i - 1].key < all.records[i].key);
    }
}

TEST_CASE("classification only where it applies") {
    EnumerationTask t = task_for(6, BGraphKind::unicyclic);
    t.classify = true;
    for (const auto& r : enumerate(t).records) CHECK(r.classification.has_value() == (r.walk_rank == 2));
    EnumerationTask tree = task_for(5, BGraphKind::tree);
    tree.classify = true;
    for (const auto& r : enumerate(tree).records) CHECK_FALSE(r.classification.has_value());
}

TEST_CASE("output independent of worker count") {
    for (BGraphKind k : {BGraphKind::cycle, BGraphKind::unicyclic}) {
        EnumerationTask base = task_for(7, k);
        base.classify = true;
        const EnumerationResult one = enumerate(base);
        for (int jobs : {2, 4, 8}) {
            EnumerationTask t = base;
            t.jobs = jobs;
            const EnumerationResult r = enumerate(t);
            REQUIRE(r.records.size() == one.records.size());
            for (std::size_t i = 0; i < r.records.size(); ++i) {
                CHECK(r.records[i].key == one.records[i].key);
                CHECK(r.records[i].graph == one.records[i].graph);
            }
            CHECK(r.raw_weightings == one.raw_weightings);
        }
    }
}

TEST_CASE("order limits") {
    CHECK_THROWS_AS(enumerate(task_for(15, BGraphKind::cycle)), OrderTooLarge);
    CHECK_THROWS_AS(enumerate(task_for(10, BGraphKind::unicyclic)), OrderTooLarge);
    CHECK_THROWS_AS(bgraph_shapes(2, BGraphKind::cycle), OrderTooSmall);
    CHECK_THROWS_AS(bgraph_shapes(1, BGraphKind::tree), OrderTooSmall);
    EnumerationTask t = task_for(4, BGraphKind::any_connected);
    t.limits.any_connected = 3;
    CHECK_THROWS_AS(enumerate(t), OrderTooLarge);
}
