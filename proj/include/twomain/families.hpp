#pragma once

#include "twomain/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twomain {

enum class FamilyTag { U1, U2, U3, U4, U5, U6, U7, H1, H2, H3 };

std::string to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view text);
bool is_cyclic_family(FamilyTag tag);

/// Cycle weighting that repeats n1 double edges followed by n2 single edges, t times.
struct CyclicPattern {
    int n1 = 1;
    int n2 = 0;
    int t = 1;

    int order() const { return (n1 + n2) * t; }
};

/// Pattern (n1, n2) of a U family with the given repeat count.
CyclicPattern cyclic_pattern(FamilyTag tag, int t);

/// Cycle on (n1+n2)·t vertices; edge i joins i and i+1 (mod order).
/// Throws OrderTooSmall below order 3 and BadParameters for n1 < 1, n2 < 0 or t < 1.
Multigraph generate_cyclic(const CyclicPattern& p);

struct FamilySpec {
    FamilyTag tag = FamilyTag::U1;
    int t = 1;
    int b = 0;  // H families only
};

/// Throws BadParameters naming the violated constraint.
void validate(const FamilySpec& f);

/// U tags go through generate_cyclic; H2/H3 glue t D-blocks cyclically;
/// H1 builds the canonical representative (cycle of length t alternating
/// bridges and hubs, each hub carrying a depth-3 pendant path and k−1
/// weight-2 leaves, the path's middle hub-type vertex carrying k−1 more).
Multigraph generate_family(const FamilySpec& f);

enum class BlockKind { D1, D2 };

/// One building block of H2 (D1, b = 4k) or H3 (D2, b = 4k+2).
struct BlockD {
    BlockKind kind = BlockKind::D1;
    int b = 0;
    Multigraph graph;
    /// Named vertices v1…v4 (index 0 holds v1).
    std::vector<int> named;
    /// Connectors identified with the neighbouring blocks.
    int left = 0;
    int right = 0;
};

/// D1: v1–v2–v3 with v2–v4; v2 carries k−1 and v4 carries k weight-2 leaves.
/// D2: path v1–v2–v3–v4; v2 and v3 each carry k weight-2 leaves.
BlockD make_block(BlockKind kind, int b);

/// t copies of the block, block i's right connector identified with block i+1's left (mod t).
/// Accepts any t ≥ 1 that yields a simple B-graph (t ≥ 2 for D1); the
/// families themselves require t ≥ 3, enforced by validate().
Multigraph glue_cyclically(const BlockD& block, int t);

struct ExpectedAB {
    bool one_main = false;
    long long a = 0;
    long long b = 0;
};

/// (a, b) of the cyclic families; U6, U7 have a single main eigenvalue.
/// Throws UnknownTag for H tags.
ExpectedAB expected_ab(FamilyTag tag);

enum class H1Condition {
    none,        // member
    parameters,  // b is not 4k+2 ≥ 6
    unicyclic,   // (1) B-graph not unicyclic
    cycle,       // (2) cycle weights / alternating degrees
    pendant,     // (3) pendant-tree structure
};

std::string to_string(H1Condition c);

struct H1Diagnostics {
    bool member = false;
    H1Condition failed = H1Condition::none;
    std::string detail;
    int cycle_length = 0;
};

/// Membership in the a = 0 family for a given b. The pendant rule is checked
/// locally: forest vertices alternate between degree-2 and degree-b/2 kinds
/// level by level away from the hubs, which reproduces the even main paths,
/// the weight-2 end edges and the odd side branches. With `require_b_domain`
/// false only evenness and b ≥ 6 are demanded, which lets callers recognise
/// the same structure at b ≡ 0 mod 4.
H1Diagnostics is_member_H1(const Multigraph& m, long long b, bool require_b_domain = true);

}  // namespace twomain
