#include "twomain/report.hpp"

#include "twomain/classify.hpp"
#include "twomain/errors.hpp"
#include "twomain/unicyclic.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace twomain {

double stable_float(double x) {
    if (std::fabs(x) < 1e-10) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

Json certificate_json(const ABSolution& ab) {
    Json c;
    c["status"] = to_string(ab.status);
    if (ab.status == CertificateStatus::j_eigenvector) return c;
    if (ab.certificate) {
        c["a"] = ab.certificate->a;
        c["b"] = ab.certificate->b;
        c["residuals"] = ab.certificate->residuals;
    } else {
        c["a"] = ab.a_rational->get_str();
        c["b"] = ab.b_rational->get_str();
    }
    return c;
}

Json edges_json(const std::vector<Edge>& es) {
    Json out = Json::array();
    for (const Edge& e : es) out.push_back({e.u, e.v, e.value});
    return out;
}

Json classification_json(const ClassificationResult& c) {
    Json j;
    j["status"] = c.unclassified() ? "UNCLASSIFIED" : "classified";
    j["case"] = to_string(c.case_tag);
    j["family"] = c.family_str();
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json not_applicable(const std::string& reason) { return {{"status", "NOT-APPLICABLE"}, {"reason", reason}}; }

std::string join_numbers(const Json& arr) {
    std::string out;
    for (const auto& x : arr) {
        if (!out.empty()) out += ' ';
        out += x.dump();
    }
    return out;
}

std::string certificate_text(const Json& c) {
    const std::string status = c["status"];
    if (status == "j-eigenvector") return "none (j is an eigenvector)";
    std::string ab = "(a,b)=(" + (c["a"].is_string() ? c["a"].get<std::string>() : c["a"].dump()) + "," +
                     (c["b"].is_string() ? c["b"].get<std::string>() : c["b"].dump()) + ")";
    return ab + " " + status;
}

std::string classification_text(const Json& c) {
    if (c["status"] == "NOT-APPLICABLE") return "NOT-APPLICABLE (" + c["reason"].get<std::string>() + ")";
    std::string out = c["family"].get<std::string>() + ", case " + c["case"].get<std::string>();
    if (c.contains("note")) out += " [" + c["note"].get<std::string>() + "]";
    return out;
}

std::string text_analyze(const Json& d) {
    std::ostringstream out;
    out << "input: " << d["input"].get<std::string>() << " of order " << d["order"] << "\n";
    if (d.contains("signed")) {
        const Json& s = d["signed"];
        out << "signed walk rank: " << s["walk_rank"] << "\n";
        out << "net degrees: " << join_numbers(s["net_degrees"]) << (s["net_regular"] ? " (net-regular)" : "") << "\n";
        out << "associated multigraph:\n";
    }
    out << "degrees: " << join_numbers(d["degrees"]) << "\n";
    out << "s values: " << join_numbers(d["s_values"]) << "\n";
    out << "walk rank: " << d["walk_rank"] << "\n";
    out << "main eigenvalues: " << d["main_count"] << "\n";
    out << "certificate: " << certificate_text(d["certificate"]) << "\n";
    if (d["disagree"]) out << "DISAGREE: walk rank and certificate test differ\n";
    if (d.contains("float")) {
        const Json& f = d["float"];
        out << "float eigenvalues: " << join_numbers(f["eigenvalues"]) << "\n";
        out << "float main eigenvalues: " << join_numbers(f["main_eigenvalues"]) << " (" << f["status"].get<std::string>()
            << ")\n";
    }
    if (d.contains("classification")) out << "classification: " << classification_text(d["classification"]) << "\n";
    return out.str();
}

std::string text_enumerate(const Json& d) {
    std::ostringstream out;
    out << "order " << d["order"] << ", " << d["bgraph"].get<std::string>() << " B-graphs, filter "
        << d["filter"].get<std::string>() << ": " << d["shapes"] << " shapes, " << d["raw_weightings"]
        << " weightings, " << d["classes"] << " classes\n";
    for (const Json& r : d["records"]) {
        out << r["key"].get<std::string>() << "  rank " << r["walk_rank"] << "  " << certificate_text(r["certificate"]);
        if (r.contains("classification")) out << "  " << classification_text(r["classification"]);
        out << "\n";
    }
    return out.str();
}

std::string text_verify(const Json& d) {
    std::ostringstream out;
    for (const Json& c : d["checks"]) {
        out << c["verdict"].get<std::string>() << "  " << c["name"].get<std::string>() << ": "
            << c["summary"].get<std::string>() << "\n";
        for (const Json& v : c["violations"]) out << "    violation: " << v.get<std::string>() << "\n";
        for (const Json& f : c["findings"]) out << "    finding: " << f.get<std::string>() << "\n";
    }
    out << "suite " << d["suite"].get<std::string>() << ": " << (d["pass"] ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string text_open(const Json& d) {
    std::ostringstream out;
    out << "open cases up to order " << d["max_order"] << ": " << d["entries"].size() << " unclassified graphs\n";
    for (const Json& e : d["entries"])
        out << e["key"].get<std::string>() << "  " << certificate_text(e["certificate"]) << "  case "
            << e["case"].get<std::string>() << "\n";
    for (const Json& f : d["findings"]) out << "finding: " << f.get<std::string>() << "\n";
    return out.str();
}

}  // namespace

Json analyze_report(const GraphFile& f, const AnalyzeOptions& opt) {
    Json d;
    d["command"] = "analyze";
    d["order"] = f.order;
    Multigraph m;
    if (f.kind == GraphKind::signed_graph) {
        const SignedGraph s = f.signed_graph();
        m = associated_multigraph(s);
        d["input"] = "signed";
        d["signed"] = {{"walk_rank", walk_rank(s)},
                       {"net_degrees", net_degree_profile(s).net_degrees},
                       {"net_regular", is_net_regular(s)}};
    } else {
        m = f.multigraph();
        d["input"] = "multigraph";
    }
    const DegreeProfile p = degree_profile(m);
    d["degrees"] = p.degrees;
    d["s_values"] = p.s_values;
    const int rank = walk_rank(m);
    d["walk_rank"] = rank;
    d["main_count"] = rank;
    if (m.order() >= 2) {
        const ABSolution ab = solve_ab(m);
        d["certificate"] = certificate_json(ab);
        d["disagree"] = (rank == 2) != ab.valid();
    } else {
        d["certificate"] = {{"status", to_string(CertificateStatus::j_eigenvector)}};
        d["disagree"] = false;
    }

    if (opt.float_check) {
        const SpectralReport r = main_eigenvalues_float(m, opt.tol);
        Json fl;
        Json values = Json::array(), mains = Json::array();
        for (double x : r.eigenvalues) values.push_back(stable_float(x));
        for (double x : r.main_eigenvalues()) mains.push_back(stable_float(x));
        fl["tolerance"] = opt.tol;
        fl["eigenvalues"] = values;
        fl["main_eigenvalues"] = mains;
        fl["main_count"] = r.main_count_float;
        fl["status"] = r.disagree() ? "DISAGREE" : "AGREE";
        d["float"] = fl;
    }

    if (opt.classify) {
        if (m.order() < 3 || !is_unicyclic(b_graph(m)))
            d["classification"] = not_applicable("B-graph is not connected unicyclic");
        else if (rank != 2)
            d["classification"] = not_applicable("walk rank " + std::to_string(rank) + ", not two main eigenvalues");
        else
            d["classification"] = classification_json(classify_two_main(m, opt.canonical_cap));
    }
    return d;
}

Json enumerate_report(const EnumerationTask& task, const EnumerationResult& result) {
    Json d;
    d["command"] = "enumerate";
    d["order"] = task.order;
    d["bgraph"] = to_string(task.kind);
    d["filter"] = task.filter == EnumFilter::all ? "all" : "two-main-only";
    d["shapes"] = result.shapes;
    d["raw_weightings"] = result.raw_weightings;
    d["classes"] = result.records.size();
    Json records = Json::array();
    for (const EnumerationRecord& r : result.records) {
        Json j;
        j["key"] = r.key.str();
        j["edges"] = edges_json(r.graph.edges());
        j["walk_rank"] = r.walk_rank;
        j["certificate"] = certificate_json(r.ab);
        if (task.classify) {
            if (r.classification)
                j["classification"] = classification_json(*r.classification);
            else if (r.walk_rank != 2)
                j["classification"] = not_applicable("not two main eigenvalues");
            else
                j["classification"] = not_applicable("B-graph is not connected unicyclic");
        }
        records.push_back(std::move(j));
    }
    d["records"] = std::move(records);
    return d;
}

Json verify_report(const std::string& suite, const VerifyReport& report) {
    Json d;
    d["command"] = "verify";
    d["suite"] = suite;
    d["pass"] = report.pass();
    Json checks = Json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"verdict", c.verdict()},
                          {"summary", c.summary},
                          {"violations", c.violations},
                          {"findings", c.findings}});
    d["checks"] = std::move(checks);
    return d;
}

Json open_report(int n_max, const OpenReport& report) {
    Json d;
    d["command"] = "explore";
    d["max_order"] = n_max;
    Json entries = Json::array();
    for (const OpenEntry& e : report.entries) {
        ABSolution ab;
        ab.status = CertificateStatus::valid;
        ab.certificate = e.certificate;
        entries.push_back({{"key", e.key.str()},
                           {"edges", edges_json(e.graph.edges())},
                           {"certificate", certificate_json(ab)},
                           {"case", to_string(e.case_tag)}});
    }
    d["entries"] = std::move(entries);
    d["findings"] = report.findings;
    return d;
}

std::string render_structured(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_text(const Json& doc) {
    const std::string cmd = doc.value("command", "");
    if (cmd == "analyze") return text_analyze(doc);
    if (cmd == "enumerate") return text_enumerate(doc);
    if (cmd == "verify") return text_verify(doc);
    if (cmd == "explore") return text_open(doc);
    return render_structured(doc);
}

}  // namespace twomain
