#include "hamrel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "hamrel/bounds.hpp"
#include "hamrel/coeff_fn.hpp"
#include "hamrel/error.hpp"
#include "hamrel/format.hpp"
#include "hamrel/serialize.hpp"

namespace hamrel::cli {

namespace {

HammockDims require_dims(const RunConfig& cfg) {
    if (!cfg.l || !cfg.w) throw Error(ErrorCode::bad_input, "--l and --w are required");
    return HammockDims(*cfg.l, *cfg.w);
}

std::vector<double> make_grid(std::size_t count) {
    if (count < 2) throw Error(ErrorCode::bad_input, "grid needs at least 2 points");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return grid;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::bad_input, "cannot write " + path);
    out << text;
}

void emit_json(const RunConfig& cfg, std::ostream& out, const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (!cfg.out_path.empty()) write_file(cfg.out_path, text);
    if (cfg.format == OutputFormat::json) out << text;
}

BigInt parse_count(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::bad_input, std::string(what) + " must be a nonnegative integer");
    }
    return BigInt(text);
}

// Per-grid evaluation shared by compare and curves.
struct CurveSet {
    std::vector<double> p, exact, approx, approx_dual, lb, ub;
    double max_error = 0.0;       // |h - h~|
    double max_error_dual = 0.0;  // |h_dual - h~_dual|
    double max_defect = 0.0;      // |1 - h~(p) - h~_dual(1-p)|
};

struct Pipeline {
    HammockDims dims;
    ExactCoeffVector exact;
    ExactCoeffVector exact_dual;
    ApproxResult approx;
    BoundsPair bounds;
    ErrorBound bound;
};

BoundsPair bounds_from_exact(const HammockDims& dims, const ExactCoeffVector& v) {
    const int n = dims.n();
    return stanley_bounds(dims, v.coeffs[dims.l], v.coeffs[dims.l + 1],
                          v.coeffs[n - dims.w - 1], v.coeffs[n - dims.w]);
}

ApproxParams params_from(const RunConfig& cfg) {
    ApproxParams params;
    params.s = cfg.s;
    params.t = cfg.t;
    params.mode = cfg.mode;
    if (cfg.mode == SplineMode::general) {
        if (!cfg.x1) throw Error(ErrorCode::bad_input, "general mode needs --x1");
        params.x1 = *cfg.x1;
        params.x2 = cfg.x2.value_or(0);
    }
    return params;
}

Pipeline run_pipeline(const RunConfig& cfg) {
    Pipeline pl;
    pl.dims = require_dims(cfg);
    pl.exact = resolve_exact(cfg);
    pl.exact_dual = dual_coeffs(pl.exact);
    RunConfig auto_cfg = cfg;
    if (cfg.anchors_file.empty() && !cfg.n_l) auto_cfg.auto_anchors = true;
    pl.approx = approximate(resolve_anchors(auto_cfg), params_from(cfg));
    pl.bounds = bounds_from_exact(pl.dims, pl.exact);
    pl.bound = error_bound(pl.dims);
    return pl;
}

CurveSet sample_curves(const Pipeline& pl, std::size_t count) {
    CurveSet c;
    c.p = make_grid(count);
    const BoundCurves bc = bound_polynomials(pl.bounds, c.p);
    c.lb = bc.lb;
    c.ub = bc.ub;
    for (double p : c.p) {
        const double h = eval_nform(pl.exact, p);
        const double hd = eval_nform(pl.exact_dual, p);
        const double ha = eval_nform(pl.approx.primal, p);
        const double had = eval_nform(pl.approx.dual, p);
        c.exact.push_back(h);
        c.approx.push_back(ha);
        c.approx_dual.push_back(had);
        c.max_error = std::max(c.max_error, std::abs(h - ha));
        c.max_error_dual = std::max(c.max_error_dual, std::abs(hd - had));
        const double defect = 1.0 - ha - eval_nform(pl.approx.dual, 1.0 - p);
        c.max_defect = std::max(c.max_defect, std::abs(defect));
    }
    return c;
}

void write_curves_csv(std::ostream& out, const CurveSet& c) {
    out << "p,h_exact,h_approx,h_approx_dual,lb,ub\n";
    for (std::size_t i = 0; i < c.p.size(); ++i) {
        out << format_real(c.p[i]) << ',' << format_real(c.exact[i]) << ','
            << format_real(c.approx[i]) << ',' << format_real(c.approx_dual[i]) << ','
            << format_real(c.lb[i]) << ',' << format_real(c.ub[i]) << '\n';
    }
}

void cmd_exact(const RunConfig& cfg, std::ostream& out) {
    const ExactCoeffVector v = resolve_exact(cfg);
    if (cfg.format == OutputFormat::csv) {
        const auto row = binomial_row(v.n);
        out << "k,N_k,C(n;k)\n";
        for (std::size_t k = 0; k <= v.n; ++k) {
            out << k << ',' << v.coeffs[k] << ',' << row[k] << '\n';
        }
    }
    emit_json(cfg, out, to_json(v));
}

void cmd_approximate(const RunConfig& cfg, std::ostream& out) {
    const ApproxResult r = approximate(resolve_anchors(cfg), params_from(cfg));
    if (cfg.format == OutputFormat::csv) {
        const auto pr = r.primal.rounded();
        const auto dr = r.dual.rounded();
        out << "k,f_lw,f_lw_rounded,f_wl,f_wl_rounded\n";
        for (std::size_t k = 0; k <= r.primal.n; ++k) {
            out << k << ',' << format_real(r.primal.coeffs[k]) << ',' << pr[k] << ','
                << format_real(r.dual.coeffs[k]) << ',' << dr[k] << '\n';
        }
    }
    Json doc;
    doc["primal"] = to_json(r.primal);
    doc["dual"] = to_json(r.dual);
    doc["model"] = to_json(r.model);
    doc["max_relative_residual"] = format_real(r.max_relative_residual);
    emit_json(cfg, out, doc);
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const HammockDims dims = require_dims(cfg);
    BoundsPair bp;
    if (cfg.anchors_file.empty() && !cfg.n_l) {
        bp = bounds_from_exact(dims, resolve_exact(cfg));
    } else {
        const KnownAnchors a = resolve_anchors(cfg);
        if (a.t != 1 || a.s != 1) {
            throw Error(ErrorCode::bad_input, "bounds from anchors need s = t = 1");
        }
        const int n = dims.n();
        bp = stanley_bounds(dims, a.n_l, a.n_lt, binomial(n, dims.w + 1) - a.nws_dual, a.n_nw());
    }
    if (cfg.format == OutputFormat::csv) {
        out << "k,lb,ub\n";
        for (std::size_t k = 0; k <= bp.n; ++k) out << k << ',' << bp.lb[k] << ',' << bp.ub[k] << '\n';
    }
    emit_json(cfg, out, to_json(bp));
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const Pipeline pl = run_pipeline(cfg);
    const CurveSet curves = sample_curves(pl, cfg.grid);
    const int l = pl.dims.l;
    const int hi = pl.dims.n() - pl.dims.w;
    const auto f = pl.approx.primal.rounded();
    const bool within = curves.max_error <= pl.bound.per_network &&
                        curves.max_error_dual <= pl.bound.per_network &&
                        curves.max_defect <= pl.bound.cumulative;

    if (!cfg.curves_path.empty()) {
        std::ofstream cf(cfg.curves_path, std::ios::binary);
        if (!cf) throw Error(ErrorCode::bad_input, "cannot write " + cfg.curves_path);
        write_curves_csv(cf, curves);
    }

    if (cfg.format == OutputFormat::csv) {
        out << "k,lb,f_lw,N_k,ub\n";
        for (int k = l; k <= hi; ++k) {
            out << k << ',' << pl.bounds.lb[k] << ',' << f[k] << ',' << pl.exact.coeffs[k] << ','
                << pl.bounds.ub[k] << '\n';
        }
        out << "# max_abs_error=" << format_real(curves.max_error) << '\n'
            << "# max_abs_error_dual=" << format_real(curves.max_error_dual) << '\n'
            << "# max_cumulative_defect=" << format_real(curves.max_defect) << '\n'
            << "# error_bound=" << format_real(pl.bound.per_network) << '\n'
            << "# cumulative_bound=" << format_real(pl.bound.cumulative) << '\n'
            << "# within_bound=" << (within ? "true" : "false") << '\n';
    }
    Json doc;
    Json table = Json::array();
    for (int k = l; k <= hi; ++k) {
        table.push_back({{"k", k},
                         {"lb", pl.bounds.lb[k].str()},
                         {"f_lw", f[k]},
                         {"N_k", pl.exact.coeffs[k].str()},
                         {"ub", pl.bounds.ub[k].str()}});
    }
    doc["table"] = std::move(table);
    doc["max_abs_error"] = format_real(curves.max_error);
    doc["max_abs_error_dual"] = format_real(curves.max_error_dual);
    doc["max_cumulative_defect"] = format_real(curves.max_defect);
    doc["error_bound"] = format_real(pl.bound.per_network);
    doc["cumulative_bound"] = format_real(pl.bound.cumulative);
    doc["within_bound"] = within;
    emit_json(cfg, out, doc);
}

void cmd_error_bound(const RunConfig& cfg, std::ostream& out) {
    const HammockDims dims = require_dims(cfg);
    const ErrorBound eb = error_bound(dims);
    if (cfg.format == OutputFormat::csv) {
        out << "l,w,n,M,bound,cumulative\n"
            << dims.l << ',' << dims.w << ',' << dims.n() << ',' << eb.M << ','
            << format_real(eb.per_network) << ',' << format_real(eb.cumulative) << '\n';
    }
    emit_json(cfg, out,
              Json{{"l", dims.l},
                   {"w", dims.w},
                   {"n", dims.n()},
                   {"M", eb.M.str()},
                   {"bound_exact", eb.per_network_exact.str()},
                   {"bound", format_real(eb.per_network)},
                   {"cumulative", format_real(eb.cumulative)}});
}

void cmd_curves(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.curve_kind) {
        case CurveKind::polynomials: {
            const Pipeline pl = run_pipeline(cfg);
            write_curves_csv(out, sample_curves(pl, cfg.grid));
            break;
        }
        case CurveKind::coefficients: {
            const Pipeline pl = run_pipeline(cfg);
            out << "k,N_k,f_lw,N_dual_k,f_wl\n";
            for (std::size_t k = 0; k <= pl.exact.n; ++k) {
                out << k << ',' << pl.exact.coeffs[k] << ','
                    << format_real(pl.approx.primal.coeffs[k]) << ','
                    << pl.exact_dual.coeffs[k] << ',' << format_real(pl.approx.dual.coeffs[k])
                    << '\n';
            }
            break;
        }
        case CurveKind::segmentary: {
            const ExactCoeffVector v = resolve_exact(cfg);
            const PiecewiseLinearF f = make_F(v);
            const PiecewiseLinearF fd = make_F(dual_coeffs(v));
            const PiecewiseLinearF b = make_B(v.n);
            write_segmentary_csv(out, {&f, &fd, &b}, {"F_lw", "F_wl", "B"}, cfg.grid);
            break;
        }
    }
}

}  // namespace

ExactCoeffVector resolve_exact(const RunConfig& cfg) {
    if (!cfg.graph_path.empty()) return exact_coeffs(load_graph(cfg.graph_path), cfg.threads);

    if (!cfg.fixture_path.empty()) {
        ExactCoeffVector v = exact_from_json(read_json_file(cfg.fixture_path));
        if (cfg.l && cfg.w && v.dims && !(*v.dims == HammockDims(*cfg.l, *cfg.w))) {
            throw Error(ErrorCode::bad_input, "fixture dimensions disagree with --l/--w");
        }
        return v;
    }
    const HammockDims dims = require_dims(cfg);
    if (!cfg.fixture_dir.empty()) {
        const auto path = std::filesystem::path(cfg.fixture_dir) /
                          ("hammock_l" + std::to_string(dims.l) + "_w" +
                           std::to_string(dims.w) + ".json");
        if (std::filesystem::exists(path)) {
            ExactCoeffVector v = exact_from_json(read_json_file(path.string()));
            v.dims = dims;
            return v;
        }
    }
    return hammock_coeffs(dims, cfg.variant, cfg.threads);
}

KnownAnchors resolve_anchors(const RunConfig& cfg) {
    KnownAnchors a;
    if (!cfg.anchors_file.empty()) {
        a = anchors_from_json(read_json_file(cfg.anchors_file));
        if (cfg.l && cfg.w && !(a.dims == HammockDims(*cfg.l, *cfg.w))) {
            throw Error(ErrorCode::bad_input, "anchors file dimensions disagree with --l/--w");
        }
        return a;
    }
    a.dims = require_dims(cfg);
    a.s = cfg.s;
    a.t = cfg.t;
    if (cfg.n_l || cfg.n_lt || cfg.nw_dual || cfg.nws_dual) {
        if (!(cfg.n_l && cfg.n_lt && cfg.nw_dual && cfg.nws_dual)) {
            throw Error(ErrorCode::bad_input,
                        "explicit anchors need --nl, --nlt, --nw-dual and --nws-dual");
        }
        a.n_l = parse_count(*cfg.n_l, "--nl");
        a.n_lt = parse_count(*cfg.n_lt, "--nlt");
        a.nw_dual = parse_count(*cfg.nw_dual, "--nw-dual");
        a.nws_dual = parse_count(*cfg.nws_dual, "--nws-dual");
        return a;
    }
    if (!cfg.auto_anchors) {
        throw Error(ErrorCode::bad_input,
                    "no anchors: pass --auto-anchors, --anchors-file or explicit values");
    }
    const ExactCoeffVector v = resolve_exact(cfg);
    const ExactCoeffVector d = dual_coeffs(v);
    const auto at = [](const ExactCoeffVector& vec, int k) {
        if (k < 0 || static_cast<std::size_t>(k) > vec.n) {
            throw Error(ErrorCode::invalid_anchors, "anchor index out of range");
        }
        return vec.coeffs[static_cast<std::size_t>(k)];
    };
    a.n_l = at(v, a.dims.l);
    a.n_lt = at(v, a.dims.l + a.t);
    a.nw_dual = at(d, a.dims.w);
    a.nws_dual = at(d, a.dims.w + a.s);
    return a;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::exact: cmd_exact(cfg, out); break;
            case Command::approximate: cmd_approximate(cfg, out); break;
            case Command::bounds: cmd_bounds(cfg, out); break;
            case Command::compare: cmd_compare(cfg, out); break;
            case Command::error_bound: cmd_error_bound(cfg, out); break;
            case Command::curves: cmd_curves(cfg, out); break;
        }
        return 0;
    } catch (const Error& e) {
        err << "error[" << code_name(e.code()) << "]: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hamrel::cli
