#include "twomain/enumerate.hpp"
#include "twomain/errors.hpp"
#include "twomain/families.hpp"
#include "twomain/graph_io.hpp"
#include "twomain/report.hpp"
#include "twomain/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace twomain;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitParams = 4;

std::optional<int> env_int(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw BadParameters(std::string(name) + " must be an integer");
    }
}

GraphFile read_graph(const std::string& path) {
    if (path == "-") return parse_graph_file(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_graph_file(in);
}

void emit(const Json& doc, const std::string& format) {
    std::cout << (format == "structured" ? render_structured(doc) : render_text(doc));
}

void write_graph(const GraphFile& f, const std::string& out_path) {
    const std::string text = serialize(f);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw BadParameters("cannot write " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Main eigenvalues of signed graphs and (0,1,2)-multigraphs"};
    app.require_subcommand(1);

    std::optional<int> canon_flag, enum_flag;
    app.add_option("--max-canonical-order", canon_flag, "Largest order canonicalized (env TWOMAIN_MAX_CANON)");
    app.add_option("--max-enum-order", enum_flag, "Largest enumeration order (env TWOMAIN_MAX_ENUM)");

    const std::vector<std::string> formats{"text", "structured"};

    auto* analyze = app.add_subcommand("analyze", "Walk rank, (a,b) certificate and optional classification");
    std::string analyze_path;
    AnalyzeOptions aopt;
    std::string analyze_format = "text";
    analyze->add_option("path", analyze_path, "Graph file ('-' for stdin)")->required();
    analyze->add_flag("--classify", aopt.classify, "Classify against the known families");
    analyze->add_flag("--float", aopt.float_check, "Floating-point cross-check");
    analyze->add_option("--tol", aopt.tol, "Float tolerance")->check(CLI::PositiveNumber);
    analyze->add_option("--format", analyze_format)->check(CLI::IsMember(formats));

    auto* convert_cmd = app.add_subcommand("convert", "Signed graph <-> multigraph");
    std::string convert_path;
    convert_cmd->add_option("path", convert_path, "Graph file ('-' for stdin)")->required();

    auto* generate = app.add_subcommand("generate", "Generate a family member");
    std::string family;
    FamilySpec fspec;
    std::optional<int> family_b;
    std::string generate_out;
    generate->add_option("--family", family, "U1..U7, H1, H2, H3")->required();
    generate->add_option("--t", fspec.t, "Family parameter t")->required();
    generate->add_option("--b", family_b, "Parameter b (H families)");
    generate->add_option("-o,--output", generate_out, "Output path (default stdout)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive isomorph-free enumeration");
    EnumerationTask task;
    std::string bgraph = "cycle";
    bool two_main_only = false;
    std::string enum_format = "text";
    enumerate_cmd->add_option("--order", task.order)->required();
    enumerate_cmd->add_option("--bgraph", bgraph)->check(CLI::IsMember({"cycle", "unicyclic", "tree", "any-connected"}));
    enumerate_cmd->add_flag("--two-main-only", two_main_only);
    enumerate_cmd->add_flag("--classify", task.classify);
    enumerate_cmd->add_option("--jobs", task.jobs)->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--format", enum_format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    std::optional<int> verify_max;
    int verify_jobs = 1;
    std::string verify_format = "text";
    verify->add_option("--suite", suite);
    verify->add_option("--max-order", verify_max);
    verify->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));

    auto* explore = app.add_subcommand("explore", "List unclassified two-main unicyclic graphs");
    int explore_max = 7;
    int explore_jobs = 1;
    std::string explore_format = "text";
    explore->add_option("--max-order", explore_max);
    explore->add_option("--jobs", explore_jobs)->check(CLI::PositiveNumber);
    explore->add_option("--format", explore_format)->check(CLI::IsMember(formats));

    CLI11_PARSE(app, argc, argv);

    try {
        const int canon_cap = canon_flag.value_or(env_int("TWOMAIN_MAX_CANON").value_or(kDefaultCanonicalCap));
        const std::optional<int> enum_cap = enum_flag ? enum_flag : env_int("TWOMAIN_MAX_ENUM");

        if (*analyze) {
            aopt.canonical_cap = canon_cap;
            emit(analyze_report(read_graph(analyze_path), aopt), analyze_format);
        } else if (*convert_cmd) {
            std::cout << serialize(convert(read_graph(convert_path)));
        } else if (*generate) {
            const auto tag = parse_family_tag(family);
            if (!tag) throw BadParameters("unknown family " + family);
            fspec.tag = *tag;
            if (!is_cyclic_family(*tag)) {
                if (!family_b) throw BadParameters(to_string(*tag) + " requires --b");
                fspec.b = *family_b;
            }
            validate(fspec);
            write_graph(to_graph_file(generate_family(fspec)), generate_out);
        } else if (*enumerate_cmd) {
            task.kind = *parse_bgraph_kind(bgraph);
            task.filter = two_main_only ? EnumFilter::two_main_only : EnumFilter::all;
            task.canonical_cap = canon_cap;
            if (enum_cap) {
                switch (task.kind) {
                    case BGraphKind::cycle: task.limits.cycle = *enum_cap; break;
                    case BGraphKind::unicyclic: task.limits.unicyclic = *enum_cap; break;
                    case BGraphKind::tree: task.limits.tree = *enum_cap; break;
                    case BGraphKind::any_connected: task.limits.any_connected = *enum_cap; break;
                }
            }
            emit(enumerate_report(task, enumerate(task)), enum_format);
        } else if (*verify) {
            const VerifyReport report = run_suite(suite, verify_max, verify_jobs);
            emit(verify_report(suite, report), verify_format);
            return report.pass() ? 0 : kExitViolation;
        } else if (*explore) {
            emit(open_report(explore_max, explore_open(explore_max, explore_jobs)), explore_format);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const OrderTooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const BadParameters& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const OrderTooSmall& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const UnknownTag& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return 0;
}
