#include "twomain/verify.hpp"

#include "twomain/enumerate.hpp"
#include "twomain/errors.hpp"
#include "twomain/families.hpp"
#include "twomain/unicyclic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace twomain {

std::string CheckResult::verdict() const {
    if (!pass) return "FAIL";
    return vacuous ? "PASS (VACUOUS)" : "PASS";
}

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerifyReport::append(const VerifyReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

constexpr FamilyTag kTwoMainCyclic[] = {FamilyTag::U1, FamilyTag::U2, FamilyTag::U3, FamilyTag::U4, FamilyTag::U5};

std::string ab_str(long long a, long long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string describe(const CanonicalKey& key, const ABCertificate& c) {
    return key.str() + " (a,b)=" + ab_str(c.a, c.b);
}

Multigraph cycle_weighting(int n, unsigned mask) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        int u = i, v = (i + 1) % n;
        es.push_back({std::min(u, v), std::max(u, v), (mask >> i & 1U) ? 2 : 1});
    }
    return Multigraph(n, es);
}

bool constant_degree(const Multigraph& m) {
    for (int v = 1; v < m.order(); ++v)
        if (m.degree(v) != m.degree(0)) return false;
    return true;
}

// Families the paper allows under each anchored weight pattern.
std::vector<FamilyTag> subcase_families(CycleSubcase s) {
    switch (s) {
        case CycleSubcase::i: return {FamilyTag::U1, FamilyTag::U2};
        case CycleSubcase::ii:
        case CycleSubcase::iii: return {FamilyTag::U3, FamilyTag::U4, FamilyTag::U5};
        case CycleSubcase::iv: return {FamilyTag::U4, FamilyTag::U5};
    }
    return {};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

CheckResult check_table1() {
    CheckResult r;
    r.name = "table1";
    int checked = 0;
    for (FamilyTag tag : kTwoMainCyclic) {
        const ExpectedAB want = expected_ab(tag);
        for (int t = 1; t <= 4; ++t) {
            const Multigraph m = generate_family({tag, t, 0});
            const int rank = walk_rank(m);
            const ABSolution ab = solve_ab(m);
            ++checked;
            const std::string id = to_string(tag) + " t=" + std::to_string(t);
            if (rank != 2) r.violate(id + ": walk rank " + std::to_string(rank));
            if (!ab.valid())
                r.violate(id + ": certificate " + to_string(ab.status));
            else if (ab.certificate->a != want.a || ab.certificate->b != want.b)
                r.violate(id + ": (a,b)=" + ab_str(ab.certificate->a, ab.certificate->b) + ", expected " +
                          ab_str(want.a, want.b));
        }
    }
    r.summary = std::to_string(checked) + " graphs (U1–U5, t=1..4) against U1(3,-1) U2(2,2) U3(1,8) U4(4,-2) U5(3,2)";
    return r;
}

CheckResult check_one_main_families() {
    CheckResult r;
    r.name = "one-main-families";
    int checked = 0;
    for (FamilyTag tag : {FamilyTag::U6, FamilyTag::U7}) {
        for (int t = 2; t <= 6; ++t) {
            const CyclicPattern p = cyclic_pattern(tag, t);
            const std::string id = to_string(tag) + " t=" + std::to_string(t);
            if (p.order() < 3) {
                r.findings.push_back(id + " has order " + std::to_string(p.order()) +
                                     ", below the order-3 cycle minimum; not generated");
                continue;
            }
            const int rank = walk_rank(generate_cyclic(p));
            ++checked;
            if (rank != 1) r.violate(id + ": walk rank " + std::to_string(rank));
        }
    }
    r.summary = std::to_string(checked) + " graphs (U6, U7, t=2..6) with walk rank 1";
    return r;
}

CheckResult check_h_certificates() {
    CheckResult r;
    r.name = "h-certificates";
    struct Range {
        FamilyTag tag;
        std::vector<int> bs, ts;
        long long a;
    };
    const Range ranges[] = {
        {FamilyTag::H1, {6, 10}, {4, 6}, 0},
        {FamilyTag::H2, {4, 8}, {3, 4}, 1},
        {FamilyTag::H3, {6, 10}, {3, 4}, 1},
    };
    int checked = 0;
    for (const Range& range : ranges)
        for (int b : range.bs)
            for (int t : range.ts) {
                const Multigraph m = generate_family({range.tag, t, b});
                const std::string id = FamilyMatch{range.tag, t, b}.str() + " (n=" + std::to_string(m.order()) + ")";
                const int rank = walk_rank(m);
                const ABSolution ab = solve_ab(m);
                ++checked;
                if (rank != 2) r.violate(id + ": walk rank " + std::to_string(rank));
                if (!ab.valid())
                    r.violate(id + ": certificate " + to_string(ab.status));
                else if (ab.certificate->a != range.a || ab.certificate->b != b)
                    r.violate(id + ": (a,b)=" + ab_str(ab.certificate->a, ab.certificate->b) + ", expected " +
                              ab_str(range.a, b));
            }
    r.summary = std::to_string(checked) + " generated members: H1 give (0,b), H2/H3 give (1,b), all walk rank 2";
    return r;
}

CheckResult check_h_invariants() {
    CheckResult r;
    r.name = "h-invariants";
    int checked = 0;

    auto hub_parity = [&](FamilyTag tag, int b, int t, bool odd) {
        const Multigraph m = generate_family({tag, t, b});
        const std::string id = FamilyMatch{tag, t, b}.str();
        const TwoMainEvidence e = two_main_check(m);
        ++checked;
        if (!e.two_main || !e.ab.valid() || e.ab.certificate->a != 1 || e.ab.certificate->b != b)
            r.violate(id + ": not two-main with (a,b)=(1," + std::to_string(b) + ")");
        for (int v = 0; v < m.order(); ++v) {
            const int d = m.degree(v);
            if (d <= 2) continue;
            if (d != 1 + b / 2 || (d % 2 == 1) != odd)
                r.violate(id + ": vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        }
        if (is_member_H1(m, b).member) r.violate(id + ": accepted by the H1 predicate");
        for (int other : {6, 10})
            if (is_member_H1(m, other).member)
                r.violate(id + ": accepted by the H1 predicate with b=" + std::to_string(other));
        const ClassificationResult c = classify_two_main(m, m.order());
        if (!c.family || c.family->tag != tag || c.family->t != t)
            r.violate(id + ": classified as " + c.family_str());
    };
    for (int b : {4, 8, 12})
        for (int t : {3, 4, 5}) hub_parity(FamilyTag::H2, b, t, true);
    for (int b : {6, 10})
        for (int t : {3, 4}) hub_parity(FamilyTag::H3, b, t, false);

    for (int b : {6, 10})
        for (int t : {4, 6}) {
            const Multigraph m = generate_family({FamilyTag::H1, t, b});
            const std::string id = FamilyMatch{FamilyTag::H1, t, b}.str();
            ++checked;
            const TwoMainEvidence e = two_main_check(m);
            if (!e.two_main || !e.ab.valid() || e.ab.certificate->a != 0 || e.ab.certificate->b != b)
                r.violate(id + ": not two-main with (a,b)=(0," + std::to_string(b) + ")");
            const H1Diagnostics d = is_member_H1(m, b);
            if (!d.member) r.violate(id + ": rejected by the H1 predicate at " + to_string(d.failed) + ": " + d.detail);
            const ClassificationResult c = classify_two_main(m, m.order());
            if (!c.family || c.family->tag != FamilyTag::H1) r.violate(id + ": classified as " + c.family_str());
        }

    for (FamilyTag tag : {FamilyTag::U1, FamilyTag::U2, FamilyTag::U3, FamilyTag::U4, FamilyTag::U5, FamilyTag::U6,
                          FamilyTag::U7})
        for (int t = 1; t <= 4; ++t) {
            const CyclicPattern p = cyclic_pattern(tag, t);
            if (p.order() < 3) continue;
            const Multigraph m = generate_cyclic(p);
            ++checked;
            for (int b : {6, 10})
                if (is_member_H1(m, b).member)
                    r.violate(to_string(tag) + " t=" + std::to_string(t) + ": accepted by the H1 predicate with b=" +
                              std::to_string(b));
        }
    r.summary = std::to_string(checked) +
                " graphs: H2 hubs 1+b/2 odd, H3 hubs 1+b/2 even, H1 predicate accepts exactly the H1 generator output";
    return r;
}

VerifyReport verify_cycle_theorems(int n_max, int jobs) {
    CheckResult classes{"cycle-classes"}, subcases{"cycle-subcases"}, symmetry{"cycle-symmetry"},
        totality{"cycle-classification"}, no_b0{"cycle-b0-absent"};
    std::vector<std::string> counts;
    std::map<CycleSubcase, std::set<std::string>> seen;
    int two_main_total = 0, anchors = 0, symmetric_anchors = 0;

    for (int n = 3; n <= n_max; ++n) {
        EnumerationTask task;
        task.order = n;
        task.kind = BGraphKind::cycle;
        task.filter = EnumFilter::two_main_only;
        task.classify = true;
        task.jobs = jobs;
        task.canonical_cap = n;
        const EnumerationResult res = enumerate(task);

        std::map<CanonicalKey, std::string> expected;
        for (FamilyTag tag : kTwoMainCyclic) {
            const int period = cyclic_pattern(tag, 1).order();
            if (n % period != 0) continue;
            expected.emplace(canonical_form(generate_cyclic(cyclic_pattern(tag, n / period)), n).key,
                             to_string(tag) + "(t=" + std::to_string(n / period) + ")");
        }
        std::set<CanonicalKey> found;
        for (const auto& rec : res.records) found.insert(rec.key);
        for (const auto& [key, name] : expected)
            if (!found.count(key)) classes.violate("n=" + std::to_string(n) + ": " + name + " not found two-main");
        for (const auto& key : found)
            if (!expected.count(key)) classes.violate("n=" + std::to_string(n) + ": unexpected two-main class " + key.str());
        counts.push_back(std::to_string(n) + ":" + std::to_string(res.records.size()));
        two_main_total += static_cast<int>(res.records.size());

        for (const auto& rec : res.records) {
            const Multigraph& m = rec.graph;
            if (!rec.classification) {
                totality.violate(rec.key.str() + ": not classified");
                continue;
            }
            const ClassificationResult& c = *rec.classification;
            const std::string id = describe(rec.key, c.certificate);
            if (c.certificate.b == 0) no_b0.violate(id + ": two-main cycle with b=0");
            if (!c.family) {
                totality.violate(id + ": UNCLASSIFIED");
                continue;
            }
            if (!table_admits(c.case_tag, c.family->tag))
                totality.violate(id + ": case " + to_string(c.case_tag) + " does not admit " + c.family->str());

            for (const Edge& e : m.edges()) {
                if (e.value != 2) continue;
                for (auto [u1, v1] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                    ++anchors;
                    const CycleSubcase s = cycle_subcase(m, u1, v1);
                    seen[s].insert(to_string(c.family->tag));
                    const auto allowed = subcase_families(s);
                    if (std::find(allowed.begin(), allowed.end(), c.family->tag) == allowed.end())
                        subcases.violate(id + " anchored at (" + std::to_string(u1) + "," + std::to_string(v1) +
                                         "): subcase (" + to_string(s) + ") but family " + c.family->str());
                    const CycleLabels l = cycle_labels(m, u1, v1);
                    if (m.weight(u1, l.u2) != m.weight(v1, l.v2)) continue;
                    ++symmetric_anchors;
                    if (!check_cycle_symmetry(m, u1, v1))
                        symmetry.violate(id + " anchored at (" + std::to_string(u1) + "," + std::to_string(v1) +
                                         "): mirror weights differ");
                }
            }
        }
    }
    classes.summary = "n=3.." + std::to_string(n_max) + " two-main classes per n {" + join(counts, " ") +
                      "} equal the U1–U5 members of each order";
    std::vector<std::string> per_case;
    for (const auto& [s, fams] : seen)
        per_case.push_back("(" + to_string(s) + "):" + join(std::vector<std::string>(fams.begin(), fams.end()), "/"));
    subcases.summary = std::to_string(anchors) + " anchored weight-2 edges; families per subcase " + join(per_case, " ");
    if (seen[CycleSubcase::ii] != seen[CycleSubcase::iii])
        subcases.violate("subcases (ii) and (iii) reach different families");
    symmetry.summary = std::to_string(symmetric_anchors) + " anchors meeting the preconditions are mirror-symmetric";
    symmetry.vacuous = symmetric_anchors == 0;
    subcases.vacuous = anchors == 0;
    totality.summary = std::to_string(two_main_total) + " two-main cycles all classified, case admits family";
    totality.vacuous = two_main_total == 0;
    no_b0.summary = std::to_string(two_main_total) + " two-main cycles, none with b=0";
    no_b0.vacuous = two_main_total == 0;

    VerifyReport report;
    report.checks = {classes, subcases, symmetry, totality, no_b0};
    return report;
}

VerifyReport verify_unicyclic_theorems(int n_max, int jobs) {
    CheckResult a0{"unicyclic-a0-H1"}, a1{"unicyclic-a1-H2H3"}, cases{"unicyclic-four-cases"},
        pendant{"pendant-pair-b0"};
    int hits = 0, hits_a0 = 0, hits_a1 = 0, pendant_pairs = 0;
    std::map<std::string, int> open_counts;

    for (int n = 4; n <= n_max; ++n) {
        EnumerationTask task;
        task.order = n;
        task.kind = BGraphKind::unicyclic;
        task.filter = EnumFilter::two_main_only;
        task.classify = true;
        task.jobs = jobs;
        task.canonical_cap = n;
        task.limits.unicyclic = std::max(task.limits.unicyclic, n_max);
        const EnumerationResult res = enumerate(task);
        for (const auto& rec : res.records) {
            const SimpleGraph g = b_graph(rec.graph);
            if (is_cycle_graph(g) || !rec.classification) continue;
            ++hits;
            const ClassificationResult& c = *rec.classification;
            const long long a = c.certificate.a, b = c.certificate.b;
            std::string id = describe(rec.key, c.certificate);
            if (!c.note.empty()) id += " [" + c.note + "]";

            if (c.case_tag == CaseTag::none) cases.violate(id + ": outside the four (a,b) cases");
            if (a == 0) {
                ++hits_a0;
                if (!c.family || c.family->tag != FamilyTag::H1) a0.violate(id + ": a=0 but not in H1");
            } else if (a == 1) {
                ++hits_a1;
                if (!c.family || (c.family->tag != FamilyTag::H2 && c.family->tag != FamilyTag::H3 &&
                                  c.family->tag != FamilyTag::U3))
                    a1.violate(id + ": a=1 but not in H2/H3");
            } else if (c.case_tag != CaseTag::none) {
                ++open_counts[to_string(c.case_tag)];
            }

            for (int v = 0; v < rec.graph.order(); ++v) {
                bool one = false, two = false;
                for (int x : g.neighbors(v)) {
                    if (g.degree(x) != 1) continue;
                    (rec.graph.weight(v, x) == 1 ? one : two) = true;
                }
                if (!(one && two)) continue;
                ++pendant_pairs;
                if (b != 0) pendant.violate(id + ": vertex " + std::to_string(v) + " has weight-1 and weight-2 pendants but b≠0");
            }
        }
    }
    const std::string range = "n=4.." + std::to_string(n_max);
    a0.summary = range + ": " + std::to_string(hits_a0) + " two-main graphs with a=0 and a pendant forest";
    a0.vacuous = hits_a0 == 0;
    a1.summary = range + ": " + std::to_string(hits_a1) + " two-main graphs with a=1 and a pendant forest";
    a1.vacuous = hits_a1 == 0;
    std::vector<std::string> open;
    for (const auto& [k, v] : open_counts) open.push_back(k + ":" + std::to_string(v));
    cases.summary = range + ": " + std::to_string(hits) + " two-main graphs with a pendant forest; open cases {" +
                    join(open, ", ") + "}";
    cases.vacuous = hits == 0;
    pendant.summary = range + ": " + std::to_string(pendant_pairs) + " vertices with weight-1 and weight-2 pendants";
    pendant.vacuous = pendant_pairs == 0;
    VerifyReport report;
    report.checks = {a0, a1, cases, pendant};
    return report;
}

VerifyReport verify_theorems(int n_max_cycle, int n_max_unicyclic, int jobs) {
    VerifyReport r = verify_cycle_theorems(n_max_cycle, jobs);
    r.append(verify_unicyclic_theorems(n_max_unicyclic, jobs));
    return r;
}

CheckResult check_equivalences(const EquivalenceOptions& opt) {
    CheckResult r;
    r.name = "equivalences";
    int graphs = 0, nonintegral = 0;

    auto examine = [&](const Multigraph& m, const std::string& id) {
        ++graphs;
        const int exact = walk_rank(m);
        const SpectralReport f = main_eigenvalues_float(m, opt.tol);
        if (f.main_count_float != exact)
            r.violate(id + ": float main count " + std::to_string(f.main_count_float) + " vs walk rank " +
                      std::to_string(exact));
        const ABSolution ab = solve_ab(m);
        if (ab.status == CertificateStatus::nonintegral) {
            ++nonintegral;
            r.findings.push_back(id + ": NONINTEGRAL certificate");
        }
        if ((exact == 2) != ab.valid())
            r.violate(id + ": walk rank " + std::to_string(exact) + " but certificate " + to_string(ab.status));
        if ((exact == 1) != constant_degree(m))
            r.violate(id + ": walk rank " + std::to_string(exact) + " vs constant degree " +
                      (constant_degree(m) ? "yes" : "no"));
        if (m.order() <= opt.orbit_max_order) {
            const int orbits = automorphism_orbit_count(m, m.order());
            if (exact > orbits)
                r.violate(id + ": walk rank " + std::to_string(exact) + " exceeds orbit count " + std::to_string(orbits));
        }
    };

    for (int n = 3; n <= opt.cycle_max_order; ++n)
        for (unsigned mask = 0; mask < (1U << n); ++mask)
            examine(cycle_weighting(n, mask), "cycle n=" + std::to_string(n) + " mask=" + std::to_string(mask));

    std::mt19937_64 rng(opt.seed);
    int random_done = 0;
    if (opt.random_max_order >= 2) {
        std::uniform_int_distribution<int> order_dist(2, opt.random_max_order);
        std::uniform_int_distribution<int> weight_dist(0, 3);  // 0,1 → absent; 2 → 1; 3 → 2
        while (random_done < opt.random_count) {
            const int n = order_dist(rng);
            std::vector<Edge> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (int x = weight_dist(rng); x >= 2) es.push_back({u, v, x - 1});
            Multigraph m(n, es);
            if (!b_graph(m).connected()) continue;
            examine(m, "random #" + std::to_string(random_done) + " n=" + std::to_string(n));
            ++random_done;
        }
    }
    r.summary = std::to_string(graphs) + " graphs (every cycle weighting n=3.." + std::to_string(opt.cycle_max_order) +
                ", " + std::to_string(random_done) + " random connected n≤" + std::to_string(opt.random_max_order) +
                "); NONINTEGRAL certificates: " + std::to_string(nonintegral);
    r.vacuous = graphs == 0;
    return r;
}

CheckResult check_bijection(int n_max) {
    CheckResult r;
    r.name = "bijection";
    long long graphs = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        long long total = 1;
        for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
        for (long long code = 0; code < total; ++code) {
            std::vector<Edge> es;
            long long c = code;
            for (const auto& [u, v] : pairs) {
                const int digit = static_cast<int>(c % 3);
                c /= 3;
                if (digit != 0) es.push_back({u, v, digit == 1 ? 1 : -1});
            }
            const SignedGraph s(n, es);
            const Multigraph m = associated_multigraph(s);
            ++graphs;
            const std::string id = "signed n=" + std::to_string(n) + " code=" + std::to_string(code);
            if (!(signed_from_multigraph(m) == s)) r.violate(id + ": round trip changed the graph");
            const int rs = walk_rank(s), rm = walk_rank(m);
            if (rs != rm) r.violate(id + ": walk rank " + std::to_string(rs) + " vs associated " + std::to_string(rm));
            if ((rs == 1) != is_net_regular(s))
                r.violate(id + ": walk rank " + std::to_string(rs) + " but net-regular " + (is_net_regular(s) ? "yes" : "no"));
        }
    }
    r.summary = std::to_string(graphs) + " signed graphs n=1.." + std::to_string(n_max) +
                ": equal walk ranks with the associated multigraph; one main ⇔ net-regular";
    return r;
}

OpenReport explore_open(int n_max, int jobs) {
    OpenReport out;
    for (int n = 3; n <= n_max; ++n) {
        EnumerationTask task;
        task.order = n;
        task.kind = BGraphKind::unicyclic;
        task.filter = EnumFilter::two_main_only;
        task.classify = true;
        task.jobs = jobs;
        task.canonical_cap = n;
        task.limits.unicyclic = std::max(task.limits.unicyclic, n_max);
        for (const auto& rec : enumerate(task).records) {
            if (!rec.classification) continue;
            const ClassificationResult& c = *rec.classification;
            if (c.certificate.b == 0 && c.certificate.a <= 0)
                out.findings.push_back(describe(rec.key, c.certificate) + ": b=0 with a≤0");
            if (!c.unclassified()) continue;
            if (c.case_tag != CaseTag::a2plus_b_nonzero && c.case_tag != CaseTag::a_positive_b0) continue;
            out.entries.push_back({rec.key, rec.graph, c.certificate, c.case_tag});
        }
    }
    return out;
}

VerifyReport run_suite(std::string_view suite, std::optional<int> max_order, int jobs) {
    VerifyReport r;
    auto bounded = [&](int fallback) { return max_order ? std::min(*max_order, fallback) : fallback; };
    if (suite == "table1") {
        r.checks = {check_table1(), check_one_main_families()};
    } else if (suite == "cycle-theorems") {
        r = verify_cycle_theorems(max_order.value_or(12), jobs);
    } else if (suite == "h-families") {
        r.checks = {check_h_certificates(), check_h_invariants()};
    } else if (suite == "equivalences") {
        EquivalenceOptions opt;
        opt.cycle_max_order = bounded(opt.cycle_max_order);
        opt.random_max_order = bounded(opt.random_max_order);
        opt.orbit_max_order = bounded(opt.orbit_max_order);
        r.checks = {check_equivalences(opt), check_bijection(bounded(5))};
    } else if (suite == "unicyclic-theorems") {
        r = verify_unicyclic_theorems(max_order.value_or(8), jobs);
    } else if (suite == "all") {
        for (std::string_view s : {"table1", "cycle-theorems", "h-families", "equivalences"})
            r.append(run_suite(s, max_order, jobs));
    } else {
        throw UnknownTag("unknown suite '" + std::string(suite) + "'");
    }
    return r;
}

}  // namespace twomain
