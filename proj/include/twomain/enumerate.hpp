#pragma once

#include "twomain/canonical.hpp"
#include "twomain/classify.hpp"
#include "twomain/graph.hpp"
#include "twomain/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twomain {

enum class BGraphKind { cycle, unicyclic, tree, any_connected };
enum class EnumFilter { all, two_main_only };

std::string to_string(BGraphKind k);
std::optional<BGraphKind> parse_bgraph_kind(std::string_view text);

/// Largest order accepted per B-graph kind.
struct EnumerationLimits {
    int cycle = 14;
    int unicyclic = 9;
    int tree = 10;
    int any_connected = 5;

    int for_kind(BGraphKind k) const;
};

struct EnumerationTask {
    int order = 3;
    BGraphKind kind = BGraphKind::cycle;
    EnumFilter filter = EnumFilter::all;
    bool classify = false;
    int jobs = 1;
    EnumerationLimits limits;
    /// Cap for canonical comparisons made while classifying; deduplication
    /// itself always canonicalizes at the task's order.
    int canonical_cap = kDefaultCanonicalCap;
};

struct EnumerationRecord {
    CanonicalKey key;
    /// Canonically relabelled representative.
    Multigraph graph;
    int walk_rank = 0;
    ABSolution ab;
    /// Present when classification was requested and applies (two main
    /// eigenvalues, unicyclic B-graph).
    std::optional<ClassificationResult> classification;
};

struct EnumerationResult {
    /// One record per isomorphism class passing the filter, ascending key.
    std::vector<EnumerationRecord> records;
    /// Weight assignments examined (2^|E| summed over B-graph shapes).
    long long raw_weightings = 0;
    /// Number of non-isomorphic B-graph shapes.
    int shapes = 0;
};

/// Non-isomorphic connected simple graphs of the given kind, ascending
/// canonical key. Throws OrderTooSmall below order 3 (cycle, unicyclic) or
/// 2 (tree, any_connected).
std::vector<SimpleGraph> bgraph_shapes(int order, BGraphKind kind);

/// Every (1,2)-weighting of every shape, deduplicated up to weight-preserving
/// isomorphism. Output is identical for every value of `jobs`.
/// Throws OrderTooLarge when the order exceeds the kind's limit.
EnumerationResult enumerate(const EnumerationTask& task);

}  // namespace twomain
