// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "twomain/enumerate.hpp"
#include "twomain/report.hpp"
#include "twomain/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace twomain;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const CheckResult* find(const VerifyReport& r, const std::string& name) {
    for (const CheckResult& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

Outcome from_checks(const std::vector<const CheckResult*>& checks) {
    Outcome o;
    for (const CheckResult* c : checks) {
        if (!c) return {false, "check missing"};
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += c->name + " " + c->verdict() + ": " + c->summary;
        if (!c->pass) {
            o.pass = false;
            o.detail += " | " + std::to_string(c->violations.size()) + " violation(s), first: " + c->violations.front();
        }
        for (const std::string& f : c->findings) o.detail += " | finding: " + f;
    }
    return o;
}

bool all_pass = true;

void run(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        o.pass = false;
        o.detail += " | over time budget";
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %d %s: %s (%.2fs, budget %.0fs) -- %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
                budget_s, o.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    VerifyReport cycles;

    run(1, "Table 1 (a,b) for U1-U5, t=1..4", 1, [] {
        const CheckResult c = check_table1();
        return from_checks({&c});
    });
    run(2, "U6, U7 have one main eigenvalue", 1, [] {
        const CheckResult c = check_one_main_families();
        return from_checks({&c});
    });
    run(3, "cycle classification n=3..12, single-threaded", 60, [&] {
        cycles = verify_cycle_theorems(12, 1);
        return from_checks({find(cycles, "cycle-classes"), find(cycles, "cycle-subcases"),
                            find(cycles, "cycle-symmetry"), find(cycles, "cycle-classification")});
    });
    run(4, "H1/H2/H3 certificates", 5, [] {
        const CheckResult c = check_h_certificates();
        return from_checks({&c});
    });
    run(5, "equivalences on cycles n<=10 and 1000 random graphs n<=8", 120, [] {
        const CheckResult c = check_equivalences();
        return from_checks({&c});
    });
    run(6, "signed graphs n<=5: bijection and net-regularity", 60, [] {
        const CheckResult c = check_bijection(5);
        return from_checks({&c});
    });
    run(7, "no two-main cycle multigraph with b=0, n<=12", 60,
        [&] { return from_checks({find(cycles, "cycle-b0-absent")}); });
    run(8, "enumerate n=10 cycle output identical for jobs 1, 4, 8", 60, [] {
        std::string first;
        for (int jobs : {1, 4, 8}) {
            EnumerationTask t;
            t.order = 10;
            t.kind = BGraphKind::cycle;
            t.classify = true;
            t.jobs = jobs;
            const std::string out = render_structured(enumerate_report(t, enumerate(t)));
            if (first.empty())
                first = out;
            else if (out != first)
                return Outcome{false, "output differs at jobs=" + std::to_string(jobs)};
        }
        return Outcome{true, std::to_string(first.size()) + " bytes identical across 3 runs"};
    });

    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
