#include "oracles.hpp"

#include "twomain/errors.hpp"
#include "twomain/families.hpp"
#include "twomain/unicyclic.hpp"

#include <doctest.h>

#include <string>

using namespace twomain;

namespace {

std::vector<int> cycle_weights(const Multigraph& m) {
    std::vector<int> w;
    for (int i = 0; i < m.order(); ++i) w.push_back(m.weight(i, (i + 1) % m.order()));
    return w;
}

std::string bad_params_message(const FamilySpec& f) {
    try {
        validate(f);
    } catch (const BadParameters& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("tags parse and print") {
    for (FamilyTag t : {FamilyTag::U1, FamilyTag::U7, FamilyTag::H1, FamilyTag::H3})
        CHECK(parse_family_tag(to_string(t)) == t);
    CHECK_FALSE(parse_family_tag("U8").has_value());
    CHECK(is_cyclic_family(FamilyTag::U6));
    CHECK_FALSE(is_cyclic_family(FamilyTag::H2));
}

TEST_CASE("U1 with t = 2 is the weighted 8-cycle 2,1,1,1,2,1,1,1") {
    const Multigraph m = generate_family({FamilyTag::U1, 2, 0});
    CHECK(cycle_weights(m) == std::vector<int>{2, 1, 1, 1, 2, 1, 1, 1});
}

TEST_CASE("cyclic patterns have the listed orders") {
    const int period[] = {4, 3, 3, 5, 4, 2, 1};
    const FamilyTag tags[] = {FamilyTag::U1, FamilyTag::U2, FamilyTag::U3, FamilyTag::U4,
                              FamilyTag::U5, FamilyTag::U6, FamilyTag::U7};
    for (int i = 0; i < 7; ++i)
        for (int t = 3; t <= 4; ++t) CHECK(cyclic_pattern(tags[i], t).order() == period[i] * t);
    CHECK_THROWS_AS(generate_cyclic({1, 0, 2}), OrderTooSmall);
    CHECK_THROWS_AS(generate_cyclic({0, 2, 2}), BadParameters);
}

TEST_CASE("U1-U5 realize their (a,b) pair; U6, U7 are regular") {
    const FamilyTag two[] = {FamilyTag::U1, FamilyTag::U2, FamilyTag::U3, FamilyTag::U4, FamilyTag::U5};
    for (FamilyTag tag : two) {
        const ExpectedAB e = expected_ab(tag);
        for (int t = 1; t <= 3; ++t) {
            const Multigraph m = generate_family({tag, t, 0});
            CHECK(oracle::krylov_rank(m) == 2);
            const auto ab = oracle::search_ab(m);
            REQUIRE(ab.has_value());
            CHECK(ab->first == e.a);
            CHECK(ab->second == e.b);
        }
    }
    for (FamilyTag tag : {FamilyTag::U6, FamilyTag::U7})
        for (int t = 3; t <= 5; ++t) CHECK(oracle::krylov_rank(generate_family({tag, t, 0})) == 1);
    CHECK(expected_ab(FamilyTag::U6).one_main);
    CHECK_THROWS_AS(expected_ab(FamilyTag::H1), UnknownTag);
}

TEST_CASE("parameter domains name the violated constraint") {
    CHECK(bad_params_message({FamilyTag::H1, 4, 5}) == "b must be ≡ 2 mod 4 and ≥ 6");
    CHECK(bad_params_message({FamilyTag::H1, 5, 6}) == "t must be even and ≥ 4");
    CHECK(bad_params_message({FamilyTag::H2, 3, 6}) == "b must be ≡ 0 mod 4 and ≥ 4");
    CHECK(bad_params_message({FamilyTag::H2, 2, 4}) == "t must be ≥ 3");
    CHECK(bad_params_message({FamilyTag::H3, 3, 8}) == "b must be ≡ 2 mod 4 and ≥ 6");
    CHECK(bad_params_message({FamilyTag::H3, 3, 6}).empty());
}

TEST_CASE("D blocks carry the stated pendants") {
    const BlockD d1 = make_block(BlockKind::D1, 8);  // k = 2
    CHECK(d1.named.size() == 4);
    auto twos_at = [](const Multigraph& g, int v) {
        int c = 0;
        for (int x : g.neighbors(v)) c += g.weight(v, x) == 2 && g.neighbors(x).size() == 1;
        return c;
    };
    CHECK(twos_at(d1.graph, d1.named[1]) == 1);
    CHECK(twos_at(d1.graph, d1.named[3]) == 2);
    const BlockD d2 = make_block(BlockKind::D2, 10);  // k = 2
    CHECK(twos_at(d2.graph, d2.named[1]) == 2);
    CHECK(twos_at(d2.graph, d2.named[2]) == 2);
    CHECK_THROWS_AS(make_block(BlockKind::D1, 6), BadParameters);
    CHECK_THROWS_AS(make_block(BlockKind::D2, 8), BadParameters);
    CHECK_THROWS_AS(glue_cyclically(d1, 1), BadParameters);
}

TEST_CASE("H families: certificates, cycle lengths and degree alternation") {
    struct Case {
        FamilyTag tag;
        int b, t;
        long long a;
        int cycle_len;
    };
    const Case cases[] = {
        {FamilyTag::H1, 6, 4, 0, 4},  {FamilyTag::H1, 10, 6, 0, 6}, {FamilyTag::H2, 4, 3, 1, 6},
        {FamilyTag::H2, 8, 4, 1, 8},  {FamilyTag::H3, 6, 3, 1, 9},  {FamilyTag::H3, 10, 4, 1, 12},
    };
    for (const Case& c : cases) {
        CAPTURE(to_string(c.tag));
        CAPTURE(c.b);
        CAPTURE(c.t);
        const Multigraph m = generate_family({c.tag, c.t, c.b});
        CHECK(oracle::krylov_rank(m) == 2);
        const auto ab = oracle::search_ab(m);
        REQUIRE(ab.has_value());
        CHECK(ab->first == c.a);
        CHECK(ab->second == c.b);

        const SimpleGraph g = b_graph(m);
        REQUIRE(is_unicyclic(g));
        const UnicyclicDecomposition d = unicyclic_decompose(g);
        CHECK(static_cast<int>(d.cycle.size()) == c.cycle_len);
        if (c.tag == FamilyTag::H1) {
            // Cycle edges weight 1, cycle degrees alternate 2 and b/2.
            for (std::size_t i = 0; i < d.cycle.size(); ++i) {
                const int u = d.cycle[i], v = d.cycle[(i + 1) % d.cycle.size()];
                CHECK(m.weight(u, v) == 1);
                CHECK(std::min(m.degree(u), m.degree(v)) == 2);
                CHECK(std::max(m.degree(u), m.degree(v)) == c.b / 2);
            }
            CHECK(is_member_H1(m, c.b).member);
        } else {
            // The glued connectors are degree-2 bridges on the cycle.
            int bridges = 0;
            for (int v : d.cycle) bridges += m.degree(v) == 2 && g.degree(v) == 2;
            CHECK(bridges == c.t);
        }
    }
}

TEST_CASE("H1 predicate pinpoints the failed condition") {
    const Multigraph h = generate_family({FamilyTag::H1, 4, 6});
    CHECK(is_member_H1(h, 10).failed != H1Condition::none);
    CHECK(is_member_H1(h, 5).failed == H1Condition::parameters);
    CHECK(is_member_H1(oracle::cycle({2, 1, 1, 1}), 6).failed == H1Condition::cycle);
    const std::vector<Edge> tree{{0, 1, 1}, {1, 2, 1}};
    CHECK(is_member_H1(Multigraph(3, tree), 6).failed == H1Condition::unicyclic);
    CHECK_FALSE(is_member_H1(generate_family({FamilyTag::H2, 3, 4}), 6).member);
}
