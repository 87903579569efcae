#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "hamrel/core_poly.hpp"
#include "hamrel/oracle.hpp"
#include "hamrel/spline.hpp"

namespace hamrel::cli {

enum class Command { exact, approximate, bounds, compare, error_bound, curves };
enum class OutputFormat { csv, json };
enum class CurveKind { polynomials, coefficients, segmentary };

struct RunConfig {
    Command command = Command::exact;
    std::optional<int> l;
    std::optional<int> w;
    int s = 1;
    int t = 1;
    std::optional<int> x1;
    std::optional<int> x2;
    SplineMode mode = SplineMode::unique;
    HammockVariant variant = HammockVariant::brickA;

    std::string graph_path;
    std::string fixture_path;
    std::string fixture_dir;  // looked up as hammock_l<L>_w<W>.json
    std::string anchors_file;
    bool auto_anchors = false;
    std::optional<std::string> n_l, n_lt, nw_dual, nws_dual;

    std::string out_path;     // JSON artifact
    std::string curves_path;  // compare: per-p curve CSV
    std::size_t grid = 1001;
    OutputFormat format = OutputFormat::csv;
    CurveKind curve_kind = CurveKind::polynomials;
    unsigned threads = 0;
};

// Runs one command. Errors go to `err` as a single "error[<code>]: <message>"
// line; the return value is the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Exact coefficients for the configured hammock: explicit fixture file, then
// the fixture directory, then the oracle.
ExactCoeffVector resolve_exact(const RunConfig& cfg);

// Anchors from --anchors-file, explicit values, or (--auto-anchors) the exact
// coefficients.
KnownAnchors resolve_anchors(const RunConfig& cfg);

}  // namespace hamrel::cli
