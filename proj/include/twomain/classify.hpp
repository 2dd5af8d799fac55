#pragma once

#include "twomain/canonical.hpp"
#include "twomain/families.hpp"
#include "twomain/graph.hpp"
#include "twomain/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twomain {

/// The four (a, b) cases a two-main unicyclic multigraph can fall into.
enum class CaseTag {
    a0_b_positive,      // (1) a = 0, b > 0
    a1_b_nonzero,       // (2) a = 1, b ≠ 0
    a2plus_b_nonzero,   // (3) a ≥ 2, b ≠ 0
    a_positive_b0,      // (4) a > 0, b = 0
    none,               // outside all four
};

std::string to_string(CaseTag c);
CaseTag case_tag(long long a, long long b);

/// Whether the summary table allows `family` under case `c`
/// (H1 in (1); H2, H3, U3 in (2); U1, U2, U4, U5 in (3); nothing in (4)).
bool table_admits(CaseTag c, FamilyTag family);

struct FamilyMatch {
    FamilyTag tag = FamilyTag::U1;
    int t = 0;
    long long b = 0;  // meaningful for H families

    std::string str() const;
    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

struct ClassificationResult {
    CaseTag case_tag = CaseTag::none;
    std::optional<FamilyMatch> family;  // empty = UNCLASSIFIED
    ABCertificate certificate;
    /// For unmatched a = 0 / a = 1 graphs: the family structure they do
    /// realise outside the stated parameter range, if any.
    std::string note;

    bool unclassified() const { return !family.has_value(); }
    std::string family_str() const { return family ? family->str() : "UNCLASSIFIED"; }
};

/// Classify a two-main multigraph with unicyclic B-graph. Cycles are matched
/// against U1–U5 by canonical form, a = 0 through is_member_H1, a = 1 against
/// the generated H2/H3 member of the only consistent (b, t). Throws
/// PreconditionError if `m` is not two-main or its B-graph is not unicyclic,
/// and OrderTooLarge if a canonical comparison exceeds `canonical_cap`.
ClassificationResult classify_two_main(const Multigraph& m, int canonical_cap = kDefaultCanonicalCap);

struct SixTypeResult {
    int type_index = 0;  // 1…6
    long long d_v1 = 0;
    long long d_v2 = 0;
    /// Number of weight-2 pendants at v1 (types 5 and 6), else 0.
    int k = 0;
    /// The matched type's d(v2) differs from every other type's formula value.
    bool distinct_from_other_types = true;
};

/// Identify which of the six pendant-neighbourhood patterns the edge v1v2
/// realises. Preconditions: v1 ∼ v2, all other neighbours of v1 are pendant,
/// certificate valid (PreconditionError otherwise). Throws NoTypeMatches when
/// no pattern fits.
SixTypeResult six_type_classify(const Multigraph& m, int v1, int v2, const ABCertificate& cert);

/// Labels around a cycle anchored at the edge u1v1: u[i] walks away from v1
/// starting at u1, v[i] walks away from u1 starting at v1; x is the middle
/// vertex for odd order (-1 otherwise).
struct CycleLabels {
    std::vector<int> u;
    std::vector<int> v;
    int x = -1;
    /// Neighbours of u1 and v1 off the anchor edge.
    int u2 = -1;
    int v2 = -1;
};

/// Throws PreconditionError unless the B-graph is a cycle containing edge u1v1.
CycleLabels cycle_labels(const Multigraph& m, int u1, int v1);

enum class CycleSubcase { i, ii, iii, iv };

std::string to_string(CycleSubcase s);

/// Which of the four weight patterns (w(u1,u2), w(v1,v2)) ∈ {1,2}² occurs at a
/// weight-2 anchor u1v1 of a cycle multigraph.
CycleSubcase cycle_subcase(const Multigraph& m, int u1, int v1);

/// Mirror test around a weight-2 anchor: w(u_i,u_{i+1}) = w(v_i,v_{i+1}) for
/// every i up to the middle, and w(u_m,x) = w(v_m,x) for odd order.
/// Throws PreconditionError naming the first violated precondition.
bool check_cycle_symmetry(const Multigraph& m, int u1, int v1);

}  // namespace twomain
