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

/// Outcome of one verification check. A check with nothing to test passes
/// vacuously and says so.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool pass = true;
    bool vacuous = false;
    std::string summary;
    std::vector<std::string> violations;
    /// Observations worth surfacing that are not violations.
    std::vector<std::string> findings;

    void violate(std::string what) {
        pass = false;
        violations.push_back(std::move(what));
    }
    /// "PASS", "PASS (VACUOUS)" or "FAIL".
    std::string verdict() const;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    void append(const VerifyReport& other);
};

/// U1–U5 for t = 1..4 give exactly their listed (a, b) and walk rank 2.
CheckResult check_table1();
/// U6, U7 for t = 2..6 have walk rank 1.
CheckResult check_one_main_families();
/// Generated H1/H2/H3 members give (0, b) / (1, b) and walk rank 2.
CheckResult check_h_certificates();
/// Structural invariants of the generators and the H1 predicate.
CheckResult check_h_invariants();

/// Exhaustive cycle sweep n = 3..n_max: two-main classes equal the U1–U5
/// members of that order; anchored subcases, mirror symmetry, classification
/// totality and case/table consistency; and no two-main cycle has b = 0.
VerifyReport verify_cycle_theorems(int n_max, int jobs = 1);

/// Unicyclic graphs with a pendant forest, n = 3..n_max: a = 0 ⇒ H1,
/// a = 1 ⇒ H2/H3, every hit lands in one of the four (a, b) cases, and the
/// weight-1/weight-2 pendant pair rule forces b = 0.
VerifyReport verify_unicyclic_theorems(int n_max, int jobs = 1);

/// Both sweeps above.
VerifyReport verify_theorems(int n_max_cycle, int n_max_unicyclic, int jobs = 1);

struct EquivalenceOptions {
    int cycle_max_order = 10;
    int random_count = 1000;
    int random_max_order = 8;
    int orbit_max_order = 8;
    unsigned long long seed = 20240601;
    double tol = kDefaultTolerance;
};

/// Exact vs float main counts, rank 2 ⇔ valid certificate, rank 1 ⇔ regular,
/// rank ≤ orbit count, over every cycle weighting plus random connected
/// multigraphs.
CheckResult check_equivalences(const EquivalenceOptions& opt = {});

/// Every signed graph up to `n_max`: equal walk rank for S and its associated
/// multigraph; one main eigenvalue ⇔ net-regular.
CheckResult check_bijection(int n_max = 5);

struct OpenEntry {
    CanonicalKey key;
    Multigraph graph;
    ABCertificate certificate;
    CaseTag case_tag = CaseTag::none;
};

struct OpenReport {
    /// Ascending by key, no duplicates.
    std::vector<OpenEntry> entries;
    /// Sanity findings (e.g. b = 0 with a ≤ 0).
    std::vector<std::string> findings;
};

/// Unclassified two-main unicyclic graphs with (a ≥ 2, b ≠ 0) or
/// (a > 0, b = 0) up to order n_max. Data only; no characterization claimed.
OpenReport explore_open(int n_max, int jobs = 1);

/// Named suites: table1, cycle-theorems, h-families, equivalences,
/// unicyclic-theorems, all. `max_order` bounds each suite's sweeps; absent
/// means the suite's default. Throws UnknownTag for an unknown suite.
VerifyReport run_suite(std::string_view suite, std::optional<int> max_order = std::nullopt, int jobs = 1);

}  // namespace twomain
