#pragma once

#include "twomain/enumerate.hpp"
#include "twomain/graph_io.hpp"
#include "twomain/spectral.hpp"
#include "twomain/verify.hpp"

#include <json.hpp>

#include <string>

namespace twomain {

using Json = nlohmann::json;

struct AnalyzeOptions {
    bool classify = false;
    bool float_check = false;
    double tol = kDefaultTolerance;
    int canonical_cap = kDefaultCanonicalCap;
};

/// Full analysis document. Signed input is analysed through its associated
/// multigraph, with the signed walk rank and net degrees added alongside.
/// Throws OrderTooLarge if classification needs a canonical form above the cap.
Json analyze_report(const GraphFile& f, const AnalyzeOptions& opt);
Json enumerate_report(const EnumerationTask& task, const EnumerationResult& result);
Json verify_report(const std::string& suite, const VerifyReport& report);
Json open_report(int n_max, const OpenReport& report);

/// Structured form: sorted keys, two-space indent, trailing newline.
std::string render_structured(const Json& doc);
/// Human-oriented text; dispatches on the document's "command".
std::string render_text(const Json& doc);

/// Rounds to 12 significant digits and flushes |x| < 1e-10 to zero, so
/// reports stay byte-stable.
double stable_float(double x);

}  // namespace twomain
