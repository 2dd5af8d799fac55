#include "oracles.hpp"

#include "twomain/errors.hpp"
#include "twomain/graph_io.hpp"
#include "twomain/report.hpp"

#include <doctest.h>

#include <random>

using namespace twomain;

namespace {

std::pair<int, std::string> parse_failure(const std::string& text) {
    try {
        parse_graph_text(text);
    } catch (const ParseError& e) {
        return {e.line(), e.reason()};
    }
    return {-1, ""};
}

}  // namespace

TEST_CASE("parse and normalize") {
    const GraphFile f = parse_graph_text("# comment\nmultigraph 3\n\ne 1 2 2\ne 0 1 1\n");
    CHECK(f.kind == GraphKind::multigraph);
    CHECK(f.order == 3);
    CHECK(serialize(f) == "multigraph 3\ne 0 1 1\ne 1 2 2\n");
    const GraphFile s = parse_graph_text("signed 3\ne 0 2 -1\ne 0 1 +1\n");
    CHECK(serialize(s) == "signed 3\ne 0 1 +1\ne 0 2 -1\n");
    CHECK(s.signed_graph().sign(0, 2) == -1);
}

TEST_CASE("parse errors carry line and reason") {
    CHECK(parse_failure("multigraph 3\ne 2 2 1\n") == std::make_pair(2, std::string("self-loop forbidden")));
    CHECK(parse_failure("multigraph 3\ne 2 1 1\n").second == "edge endpoints must satisfy u < v");
    CHECK(parse_failure("multigraph 3\ne 0 3 1\n").second == "vertex out of range 0..2");
    CHECK(parse_failure("multigraph 3\ne 0 1 3\n").second == "multigraph weight must be 1 or 2");
    CHECK(parse_failure("signed 3\ne 0 1 2\n").second == "sign must be +1 or -1");
    CHECK(parse_failure("multigraph 3\ne 0 1 1\n# x\ne 0 1 2\n") == std::make_pair(4, std::string("duplicate edge 0 1")));
    CHECK(parse_failure("multigraph 0\n").second == "order must be a positive integer");
    CHECK(parse_failure("graph 3\n").second == "expected header 'multigraph <n>' or 'signed <n>'");
    CHECK(parse_failure("# only a comment\n").second == "missing header");
    CHECK(parse_failure("multigraph 3\nx 0 1 1\n").first == 2);
}

TEST_CASE("convert follows the bijection") {
    CHECK(serialize(convert(parse_graph_text("signed 2\ne 0 1 -1\n"))) == "multigraph 2\ne 0 1 2\n");
    CHECK(serialize(convert(parse_graph_text("multigraph 2\n"))) == "signed 2\ne 0 1 +1\n");
}

TEST_CASE("serialize/parse and convert round-trips on random graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Multigraph m = oracle::random_connected(rng, 1 + trial % 8);
        const GraphFile f = to_graph_file(m);
        const std::string text = serialize(f);
        CHECK(serialize(parse_graph_text(text)) == text);
        CHECK(parse_graph_text(text).multigraph() == m);
        CHECK(serialize(convert(convert(f))) == text);
        CHECK(convert(f).signed_graph() == signed_from_multigraph(m));
    }
}

TEST_CASE("analysis reports are stable and complete") {
    const GraphFile u3 = parse_graph_text("multigraph 3\ne 0 1 2\ne 0 2 1\ne 1 2 2\n");
    AnalyzeOptions opt;
    opt.classify = true;
    opt.float_check = true;
    const Json d = analyze_report(u3, opt);
    CHECK(d["walk_rank"] == 2);
    CHECK(d["certificate"]["a"] == 1);
    CHECK(d["certificate"]["b"] == 8);
    CHECK(d["float"]["status"] == "AGREE");
    CHECK(d["classification"]["family"] == "U3(t=1)");
    CHECK(render_structured(d) == render_structured(analyze_report(u3, opt)));

    const Json c5 = analyze_report(parse_graph_text("multigraph 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n"), opt);
    CHECK(c5["walk_rank"] == 1);
    CHECK(c5["certificate"]["status"] == "j-eigenvector");
    CHECK(c5["classification"]["status"] == "NOT-APPLICABLE");

    const Json sg = analyze_report(parse_graph_text("signed 3\ne 0 1 -1\ne 1 2 +1\n"), {});
    CHECK(sg["signed"]["walk_rank"] == sg["walk_rank"]);
}

TEST_CASE("stable floats") {
    CHECK(stable_float(1e-12) == 0.0);
    CHECK(stable_float(-3e-11) == 0.0);
    CHECK(stable_float(0.1 + 0.2) == 0.3);
    CHECK(stable_float(2.372281323269) == 2.37228132327);
}
