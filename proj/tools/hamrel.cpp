// hamrel: hammock reliability approximation from the command line.

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hamrel/cli.hpp"

namespace {

using hamrel::cli::Command;
using hamrel::cli::RunConfig;

void add_dims(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--l", cfg.l, "hammock length (devices per wire)")->check(CLI::PositiveNumber);
    sub->add_option("--w", cfg.w, "hammock width (number of wires)")->check(CLI::PositiveNumber);
    sub->add_option("--variant", cfg.variant, "brick parity used by the oracle")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, hamrel::HammockVariant>{{"A", hamrel::HammockVariant::brickA},
                                                          {"B", hamrel::HammockVariant::brickB}},
            CLI::ignore_case));
    sub->add_option("--fixture", cfg.fixture_path, "exact coefficient JSON for the hammock");
    sub->add_option("--threads", cfg.threads, "oracle worker threads (0 = all cores)");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "stdout format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, hamrel::cli::OutputFormat>{
                {"csv", hamrel::cli::OutputFormat::csv}, {"json", hamrel::cli::OutputFormat::json}},
            CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "also write the JSON result to this file");
}

void add_anchors(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--s", cfg.s, "dual anchor offset (anchor at w+s)");
    sub->add_option("--t", cfg.t, "primal anchor offset (anchor at l+t)");
    sub->add_flag("--auto-anchors", cfg.auto_anchors, "take anchors from exact coefficients");
    sub->add_option("--anchors-file", cfg.anchors_file, "anchors JSON");
    sub->add_option("--nl", cfg.n_l, "N_l");
    sub->add_option("--nlt", cfg.n_lt, "N_{l+t}");
    sub->add_option("--nw-dual", cfg.nw_dual, "dual N_w");
    sub->add_option("--nws-dual", cfg.nws_dual, "dual N_{w+s}");
    sub->add_option("--mode", cfg.mode, "unique (default) or general")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, hamrel::SplineMode>{{"unique", hamrel::SplineMode::unique},
                                                     {"general", hamrel::SplineMode::general}},
            CLI::ignore_case));
    sub->add_option("--x1", cfg.x1, "first bridge point (general mode)");
    sub->add_option("--x2", cfg.x2, "second bridge point (general mode, default n - x1)");
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--grid", cfg.grid, "number of grid points on [0,1]")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hammock network reliability: exact coefficients, cubic approximation, bounds"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* exact = app.add_subcommand("exact", "exact N-form coefficients by enumeration");
    add_dims(exact, cfg);
    add_output(exact, cfg);
    exact->add_option("--graph", cfg.graph_path, "two-terminal graph file instead of a hammock");

    auto* approx = app.add_subcommand("approximate", "cubic approximation of both polynomials");
    add_dims(approx, cfg);
    add_anchors(approx, cfg);
    add_output(approx, cfg);

    auto* bounds = app.add_subcommand("bounds", "Stanley-type coefficient bounds");
    add_dims(bounds, cfg);
    add_anchors(bounds, cfg);
    add_output(bounds, cfg);

    auto* compare = app.add_subcommand("compare", "per-k table and grid error against exact");
    add_dims(compare, cfg);
    add_anchors(compare, cfg);
    add_output(compare, cfg);
    add_grid(compare, cfg);
    compare->add_option("--curves", cfg.curves_path, "write the per-p curve CSV here");

    auto* ebound = app.add_subcommand("error-bound", "a-priori error bound");
    add_dims(ebound, cfg);
    add_output(ebound, cfg);

    auto* curves = app.add_subcommand("curves", "plot-ready CSV");
    add_dims(curves, cfg);
    add_anchors(curves, cfg);
    add_grid(curves, cfg);
    curves->add_option("--kind", cfg.curve_kind, "polynomials | coefficients | segmentary")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, hamrel::cli::CurveKind>{
                {"polynomials", hamrel::cli::CurveKind::polynomials},
                {"coefficients", hamrel::cli::CurveKind::coefficients},
                {"segmentary", hamrel::cli::CurveKind::segmentary}},
            CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error[usage]: " << e.what() << '\n';
        return 2;
    }

    const std::map<CLI::App*, Command> commands{
        {exact, Command::exact},     {approx, Command::approximate},
        {bounds, Command::bounds},   {compare, Command::compare},
        {ebound, Command::error_bound}, {curves, Command::curves}};
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) cfg.command = command;
    }
    if (const char* dir = std::getenv("HAMREL_FIXTURE_DIR")) cfg.fixture_dir = dir;

    return hamrel::cli::run(cfg, std::cout, std::cerr);
}
