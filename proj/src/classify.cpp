#include "twomain/classify.hpp"

#include "twomain/errors.hpp"
#include "twomain/unicyclic.hpp"

#include <algorithm>

namespace twomain {

std::string to_string(CaseTag c) {
    switch (c) {
        case CaseTag::a0_b_positive: return "(1) a=0 b>0";
        case CaseTag::a1_b_nonzero: return "(2) a=1 b!=0";
        case CaseTag::a2plus_b_nonzero: return "(3) a>=2 b!=0";
        case CaseTag::a_positive_b0: return "(4) a>0 b=0";
        case CaseTag::none: return "none";
    }
    return "none";
}

CaseTag case_tag(long long a, long long b) {
    if (a == 0 && b > 0) return CaseTag::a0_b_positive;
    if (a == 1 && b != 0) return CaseTag::a1_b_nonzero;
    if (a >= 2 && b != 0) return CaseTag::a2plus_b_nonzero;
    if (a > 0 && b == 0) return CaseTag::a_positive_b0;
    return CaseTag::none;
}

bool table_admits(CaseTag c, FamilyTag f) {
    switch (c) {
        case CaseTag::a0_b_positive: return f == FamilyTag::H1;
        case CaseTag::a1_b_nonzero: return f == FamilyTag::H2 || f == FamilyTag::H3 || f == FamilyTag::U3;
        case CaseTag::a2plus_b_nonzero:
            return f == FamilyTag::U1 || f == FamilyTag::U2 || f == FamilyTag::U4 || f == FamilyTag::U5;
        default: return false;
    }
}

std::string FamilyMatch::str() const {
    if (is_cyclic_family(tag)) return to_string(tag) + "(t=" + std::to_string(t) + ")";
    return to_string(tag) + "(b=" + std::to_string(b) + ",t=" + std::to_string(t) + ")";
}

namespace {

// Cycle degrees follow the H2 (bridge, hub) or H3 (bridge, hub, hub) period
// with hubs of degree 1 + b/2.
bool d_block_pattern(const Multigraph& m, const std::vector<int>& cycle, int period, long long hub_degree) {
    const int c = static_cast<int>(cycle.size());
    if (c % period != 0) return false;
    for (int shift = 0; shift < period; ++shift) {
        bool ok = true;
        for (int i = 0; i < c && ok; ++i) {
            long long want = ((i + shift) % period == 0) ? 2 : hub_degree;
            if (m.degree(cycle[i]) != want) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

// An a = 1 graph built from D-blocks glued fewer times than H2/H3 allow.
std::string small_t_gluing(const Multigraph& m, const std::vector<int>& cycle, long long b, int cap) {
    const int c = static_cast<int>(cycle.size());
    const bool d1 = b >= 4 && b % 4 == 0, d2 = b >= 6 && b % 4 == 2;
    if (!d1 && !d2) return {};
    const int period = d1 ? 2 : 3;
    if (c % period != 0 || c / period >= 3) return {};
    const int t = c / period;
    if (!d_block_pattern(m, cycle, period, 1 + b / 2)) return {};
    Multigraph glued;
    try {
        glued = glue_cyclically(make_block(d1 ? BlockKind::D1 : BlockKind::D2, static_cast<int>(b)), t);
    } catch (const BadParameters&) {
        return {};
    }
    if (glued.order() != m.order() || canonical_form(glued, cap).key != canonical_form(m, cap).key) return {};
    return std::string(d1 ? "D1" : "D2") + " blocks glued with t=" + std::to_string(t) + " < 3 (" +
           (d1 ? "H2" : "H3") + " shape below its t range)";
}

}  // namespace

ClassificationResult classify_two_main(const Multigraph& m, int canonical_cap) {
    const SimpleGraph g = b_graph(m);
    if (!is_unicyclic(g)) throw PreconditionError("B-graph is not connected unicyclic");
    const ABSolution ab = solve_ab(m);
    if (!ab.valid() || walk_rank(m) != 2) throw PreconditionError("multigraph does not have exactly two main eigenvalues");

    ClassificationResult r;
    r.certificate = *ab.certificate;
    const long long a = r.certificate.a, b = r.certificate.b;
    r.case_tag = case_tag(a, b);
    const int n = m.order();

    if (is_cycle_graph(g)) {
        const CanonicalKey key = canonical_form(m, canonical_cap).key;
        for (FamilyTag tag : {FamilyTag::U1, FamilyTag::U2, FamilyTag::U3, FamilyTag::U4, FamilyTag::U5}) {
            const CyclicPattern unit = cyclic_pattern(tag, 1);
            if (n % unit.order() != 0) continue;
            const int t = n / unit.order();
            if (canonical_form(generate_cyclic(cyclic_pattern(tag, t)), canonical_cap).key == key) {
                r.family = FamilyMatch{tag, t, 0};
                break;
            }
        }
        return r;
    }

    const UnicyclicDecomposition d = unicyclic_decompose(g);
    const int cycle_len = static_cast<int>(d.cycle.size());
    if (a == 0) {
        if (is_member_H1(m, b).member)
            r.family = FamilyMatch{FamilyTag::H1, cycle_len, b};
        else if (is_member_H1(m, b, false).member)
            r.note = "H1 structure with b=" + std::to_string(b) + " outside b ≡ 2 mod 4";
        return r;
    }
    if (a == 1) {
        struct Candidate {
            FamilyTag tag;
            int period;
        };
        for (Candidate cand : {Candidate{FamilyTag::H2, 2}, Candidate{FamilyTag::H3, 3}}) {
            if (cycle_len % cand.period != 0) continue;
            FamilySpec spec{cand.tag, cycle_len / cand.period, static_cast<int>(b)};
            try {
                validate(spec);
            } catch (const BadParameters&) {
                continue;
            }
            if (!d_block_pattern(m, d.cycle, cand.period, 1 + b / 2)) continue;
            const Multigraph candidate = generate_family(spec);
            if (candidate.order() != n) continue;
            if (canonical_form(candidate, canonical_cap).key == canonical_form(m, canonical_cap).key) {
                r.family = FamilyMatch{cand.tag, spec.t, b};
                break;
            }
        }
        if (!r.family) r.note = small_t_gluing(m, d.cycle, b, canonical_cap);
    }
    return r;
}

// ------------------------------------------------------------------ six types

SixTypeResult six_type_classify(const Multigraph& m, int v1, int v2, const ABCertificate& cert) {
    if (m.weight(v1, v2) == 0)
        throw PreconditionError("v1=" + std::to_string(v1) + " and v2=" + std::to_string(v2) + " are not adjacent");
    if (!cert.valid()) throw PreconditionError("certificate is not valid");
    const SimpleGraph g = b_graph(m);
    int ones = 0, twos = 0;
    for (int x : m.neighbors(v1)) {
        if (x == v2) continue;
        if (g.degree(x) != 1)
            throw PreconditionError("neighbour " + std::to_string(x) + " of v1 is not a pendant vertex");
        (m.weight(x, v1) == 1 ? ones : twos) += 1;
    }
    const long long a = cert.a, b = cert.b;
    const long long w12 = m.weight(v1, v2);
    const long long d1 = m.degree(v1), d2 = m.degree(v2);
    const bool b_even = b % 2 == 0;
    const long long half_b = b / 2;

    // Twice the d(v2) value each type prescribes (types 3, 4 and 6 carry a ½).
    // A type whose prescription is unavailable (odd b) is left unset.
    struct Formula {
        bool defined;
        long long twice_d2;
    };
    const int k = twos;
    Formula f[7] = {
        {false, 0},
        {true, 2 * (a * (a + b - 1) + 1)},
        {b_even, 2 * (a * (a + half_b - 2) + 2)},
        {true, a * (a + b - 1) + 2},
        {b_even, a * (a + half_b - 2) + 4},
        {true, 2 * (a * a - a + 1 - 2 * k)},
        {true, a * a - a + 2 - 2 * k},
    };

    bool match[7] = {false, false, false, false, false, false, false};
    match[1] = w12 == 1 && twos == 0 && d1 == a + b && d1 >= 2;
    match[2] = w12 == 1 && ones == 0 && b_even && d1 == a + half_b && d1 >= 3 && d1 % 2 == 1;
    match[3] = w12 == 2 && twos == 0 && d1 == a + b && d1 >= 3;
    match[4] = w12 == 2 && ones == 0 && b_even && d1 == a + half_b && d1 >= 4 && d1 % 2 == 0;
    match[5] = w12 == 1 && ones >= 1 && twos >= 1 && d1 == a && d1 >= 2 * k + 2;
    match[6] = w12 == 2 && ones >= 1 && twos >= 1 && d1 == a && d1 >= 2 * k + 3;

    for (int i = 1; i <= 6; ++i) {
        if (!match[i] || !f[i].defined || f[i].twice_d2 != 2 * d2) continue;
        SixTypeResult r;
        r.type_index = i;
        r.d_v1 = d1;
        r.d_v2 = d2;
        r.k = (i >= 5) ? k : 0;
        for (int j = 1; j <= 6; ++j)
            if (j != i && f[j].defined && f[j].twice_d2 == f[i].twice_d2) r.distinct_from_other_types = false;
        return r;
    }
    throw NoTypeMatches("no pendant pattern fits v1=" + std::to_string(v1) + ", v2=" + std::to_string(v2) +
                        " with (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

// ------------------------------------------------------------- cycle anchors

std::string to_string(CycleSubcase s) {
    switch (s) {
        case CycleSubcase::i: return "i";
        case CycleSubcase::ii: return "ii";
        case CycleSubcase::iii: return "iii";
        case CycleSubcase::iv: return "iv";
    }
    return "?";
}

CycleLabels cycle_labels(const Multigraph& m, int u1, int v1) {
    const SimpleGraph g = b_graph(m);
    if (!is_cycle_graph(g)) throw PreconditionError("B-graph is not a cycle");
    if (!g.adjacent(u1, v1)) throw PreconditionError("anchor vertices are not adjacent");
    const int n = m.order();
    // s[0] = u1, walking away from v1, ending at s[n-1] = v1.
    std::vector<int> s{u1};
    int prev = v1, cur = u1;
    while (static_cast<int>(s.size()) < n) {
        int next = -1;
        for (int y : g.neighbors(cur))
            if (y != prev) next = y;
        s.push_back(next);
        prev = cur;
        cur = next;
    }
    CycleLabels l;
    for (int i = 1; i <= n / 2; ++i) {
        l.u.push_back(s[i - 1]);
        l.v.push_back(s[n - i]);
    }
    if (n % 2 == 1) l.x = s[(n - 1) / 2];
    l.u2 = s[1];
    l.v2 = s[n - 2];
    return l;
}

CycleSubcase cycle_subcase(const Multigraph& m, int u1, int v1) {
    const CycleLabels l = cycle_labels(m, u1, v1);
    if (m.weight(u1, v1) != 2) throw PreconditionError("anchor edge must have weight 2");
    const int wu = m.weight(u1, l.u2), wv = m.weight(v1, l.v2);
    if (wu == 1) return wv == 1 ? CycleSubcase::i : CycleSubcase::ii;
    return wv == 1 ? CycleSubcase::iii : CycleSubcase::iv;
}

bool check_cycle_symmetry(const Multigraph& m, int u1, int v1) {
    const CycleLabels l = cycle_labels(m, u1, v1);
    if (m.weight(u1, v1) != 2) throw PreconditionError("anchor edge must have weight 2");
    if (walk_rank(m) != 2) throw PreconditionError("multigraph does not have exactly two main eigenvalues");
    if (m.weight(u1, l.u2) != m.weight(v1, l.v2)) throw PreconditionError("w(u1,u2) differs from w(v1,v2)");

    const int half = static_cast<int>(l.u.size());
    for (int i = 1; i + 1 < half; ++i)
        if (m.weight(l.u[i], l.u[i + 1]) != m.weight(l.v[i], l.v[i + 1])) return false;
    if (l.x >= 0 && half >= 1 && m.weight(l.u[half - 1], l.x) != m.weight(l.v[half - 1], l.x)) return false;
    return true;
}

}  // namespace twomain
