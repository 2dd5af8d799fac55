#pragma once

#include "twomain/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace twomain {

inline constexpr int kDefaultCanonicalCap = 12;

/// Isomorphism-invariant key of a multigraph. Two multigraphs share a key iff
/// there is a weight-preserving bijection between them.
struct CanonicalKey {
    int order = 0;
    /// Rows 1..n−1 of the strictly lower triangle of the relabelled adjacency,
    /// one digit per entry.
    std::string cells;

    auto operator<=>(const CanonicalKey&) const = default;

    /// "n:cells", e.g. "3:211".
    std::string str() const;
};

struct CanonicalForm {
    CanonicalKey key;
    /// labeling[i] = original vertex placed at canonical position i.
    std::vector<int> labeling;
    /// The input relabelled so that position i holds labeling[i].
    Multigraph graph;
};

/// Branch-and-bound search for the lexicographically largest adjacency string
/// over all relabelings that respect an equitable colour refinement. Twin
/// vertices are explored once per level. Throws OrderTooLarge above `cap`.
CanonicalForm canonical_form(const Multigraph& m, int cap = kDefaultCanonicalCap);

bool are_isomorphic(const Multigraph& a, const Multigraph& b, int cap = kDefaultCanonicalCap);

/// Orbit index per vertex under the weight-preserving automorphism group;
/// orbits are numbered by their smallest vertex in increasing order.
std::vector<int> automorphism_orbits(const Multigraph& m, int cap = kDefaultCanonicalCap);

int automorphism_orbit_count(const Multigraph& m, int cap = kDefaultCanonicalCap);

/// Relabel: result vertex i is `m` vertex perm[i].
Multigraph permute(const Multigraph& m, const std::vector<int>& perm);

}  // namespace twomain
