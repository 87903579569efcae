// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "hamrel/bounds.hpp"
#include "hamrel/format.hpp"
#include "hamrel/oracle.hpp"
#include "hamrel/spline.hpp"

using namespace hamrel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

KnownAnchors anchors_from(const ExactCoeffVector& h, int s, int t) {
    const auto d = dual_coeffs(h);
    KnownAnchors a;
    a.dims = *h.dims;
    a.s = s;
    a.t = t;
    a.n_l = h.coeffs[a.dims.l];
    a.n_lt = h.coeffs[a.dims.l + t];
    a.nw_dual = d.coeffs[a.dims.w];
    a.nws_dual = d.coeffs[a.dims.w + s];
    return a;
}

BoundsPair bounds_from(const ExactCoeffVector& h) {
    const int l = h.dims->l;
    const int w = h.dims->w;
    const int n = h.dims->n();
    return stanley_bounds(*h.dims, h.coeffs[l], h.coeffs[l + 1], h.coeffs[n - w - 1],
                          h.coeffs[n - w]);
}

std::vector<double> unit_grid(std::size_t count) {
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return grid;
}

void pipeline(Verdict& v, const ExactCoeffVector& h, int from,
              const std::vector<std::int64_t>& want) {
    const auto start = Clock::now();
    const auto result = approximate(anchors_from(h, 1, 1));
    const double elapsed = seconds_since(start);
    const auto rounded = result.primal.rounded();
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        worst = std::max(worst, std::abs(rounded[from + i] - want[i]));
    }
    v.require(worst <= 1, "rounded f within +-1");
    v.require(elapsed < 1.0, "runtime < 1 s");
    v.detail << "max |f - table| = " << worst << ", " << elapsed << " s";
}

void pipeline_53(Verdict& v) {
    const auto h = fixtures::hammock53();
    const auto a = anchors_from(h, 1, 1);
    v.require(a.nw_dual == 16 && a.nws_dual == 178, "dual anchors 16, 178");
    pipeline(v, h, 5, fixtures::kF53);
}

void pipeline_55(Verdict& v) {
    const std::vector<std::int64_t> want(fixtures::kF55.begin() + 2, fixtures::kF55.end() - 2);
    pipeline(v, fixtures::hammock55(), 7, want);
}

void stanley(Verdict& v) {
    auto compare = [&](const ExactCoeffVector& h, const std::vector<std::int64_t>& lb,
                       const std::vector<std::int64_t>& ub, const char* name) {
        const auto bp = bounds_from(h);
        int mismatches = 0;
        for (std::size_t i = 0; i < lb.size(); ++i) {
            const std::size_t k = h.dims->l + i;
            if (bp.lb[k] != lb[i]) ++mismatches;
            if (bp.ub[k] != ub[i]) ++mismatches;
        }
        v.require(mismatches == 0, name);
        v.detail << name << " mismatches = " << mismatches << "; ";
    };
    compare(fixtures::hammock53(), fixtures::kLB53, fixtures::kUB53, "5x3");
    compare(fixtures::hammock55(), fixtures::kLB55, fixtures::kUB55, "5x5");
}

void oracle_truth(Verdict& v) {
    auto one = [&](const ExactCoeffVector& expected, double limit, const char* name) {
        const auto start = Clock::now();
        const auto c = conformance_variant(*expected.dims, expected);
        const double elapsed = seconds_since(start);
        if (!c.variant) {
            std::cerr << "conformance failure for " << name << ":\n" << c.diagnostic;
            v.require(false, std::string(name) + " no brick variant matches the table");
        } else {
            v.detail << name << " " << variant_name(*c.variant) << " in " << elapsed << " s; ";
        }
        v.require(elapsed < limit, std::string(name) + " runtime");
    };
    one(fixtures::hammock53(), 5.0, "5x3");
    one(fixtures::hammock55(), 300.0, "5x5");
}

void identities(Verdict& v) {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
    int checked = 0;
    for (const auto& h : {fixtures::hammock53(), fixtures::hammock55()}) {
        const HammockDims dual_dims = h.dims->dual();
        const auto variant = *conformance_variant(*h.dims, h).variant;
        const auto hd = hammock_coeffs(dual_dims, dual_variant(*h.dims, variant));
        v.require(check_sum_complementarity(h, hd), "sum complementarity");
        v.require(check_coefficient_complementarity(h, hd), "coefficient complementarity");
        for (int i = 0; i < 20; ++i) {
            const std::int64_t b = den(rng);
            const std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, b)(rng);
            const Rational p(a, b);
            v.require(check_duality_identity(h, hd, p), "h(p) + h_dual(1-p) = 1 at " + p.str());
            ++checked;
        }
    }
    v.detail << checked << " rational points, dual from the oracle";
}

void residuals(Verdict& v) {
    double worst_interp = 0.0;
    double worst_system = 0.0;
    auto rel = [](double got, const BigInt& want) {
        const double w = static_cast<double>(want);
        return std::abs(got - w) / std::max(1.0, std::abs(w));
    };
    struct Case {
        ExactCoeffVector h;
        int s, t;
    };
    const std::vector<Case> cases = {{fixtures::hammock53(), 1, 1}, {fixtures::hammock55(), 1, 1},
                                     {fixtures::hammock55(), 9, 1}, {fixtures::hammock55(), 1, 6},
                                     {fixtures::hammock53(), 2, 3}};
    for (const auto& c : cases) {
        const auto a = anchors_from(c.h, c.s, c.t);
        const auto r = approximate(a);
        const int l = a.dims.l;
        const int w = a.dims.w;
        const int n = a.dims.n();
        worst_interp = std::max({worst_interp, rel(eval_f_lw(r.model, l + c.t), a.n_lt),
                                 rel(eval_f_wl(r.model, w + c.s), a.nws_dual),
                                 rel(eval_f_lw(r.model, n - w - c.s), a.n_nws()),
                                 rel(eval_f_wl(r.model, n - l - c.t), a.n_nlt_dual())});
        worst_system = std::max(worst_system, r.max_relative_residual);
    }
    // General mode: anchors plus two bridge conditions through the binomials.
    const auto a = anchors_from(fixtures::hammock55(), 2, 1);
    ApproxParams gp;
    gp.mode = SplineMode::general;
    gp.x1 = 10;
    gp.x2 = 14;
    const auto g = approximate(a, gp);
    const int n = a.dims.n();
    for (int x : {gp.x1, gp.x2}) {
        const double sum = eval_f_lw(g.model, x) + eval_f_wl(g.model, n - x);
        worst_interp = std::max(worst_interp, rel(sum, binomial(n, x)));
    }
    worst_interp = std::max({worst_interp, rel(eval_f_lw(g.model, a.dims.l + 1), a.n_lt),
                             rel(eval_f_wl(g.model, a.dims.w + 2), a.nws_dual)});
    worst_system = std::max(worst_system, g.max_relative_residual);

    v.require(worst_interp <= 1e-6, "interpolation residual <= 1e-6");
    v.require(worst_system <= 1e-8, "system residual <= 1e-8");
    v.detail << "interpolation " << worst_interp << ", system " << worst_system;
}

void error_bound_holds(Verdict& v) {
    const auto grid = unit_grid(1001);
    for (const auto& h : {fixtures::hammock53(), fixtures::hammock55()}) {
        const auto r = approximate(anchors_from(h, 1, 1));
        const auto eb = error_bound(*h.dims);
        double worst = 0.0;
        double worst_cumulative = 0.0;
        for (double p : grid) {
            const double approx = eval_nform(r.primal, p);
            worst = std::max(worst, std::abs(eval_nform(h, p) - approx));
            worst_cumulative =
                std::max(worst_cumulative, std::abs(1.0 - approx - eval_nform(r.dual, 1.0 - p)));
        }
        v.require(worst <= eb.per_network, "grid max <= bound");
        v.require(worst_cumulative <= eb.cumulative, "cumulative defect <= cumulative bound");
        v.detail << h.dims->l << "x" << h.dims->w << ": max " << format_real(worst) << " <= "
                 << format_real(eb.per_network) << ", cumulative " << format_real(worst_cumulative)
                 << " <= " << format_real(eb.cumulative) << "; ";
    }
    v.require(error_bound(HammockDims(5, 3)).per_network_exact ==
                  Rational(BigInt("49374896469257216"), BigInt("9730975341796875")),
              "5x3 exact bound");
}

void sandwich(Verdict& v) {
    const auto grid = unit_grid(1001);
    for (const auto& h : {fixtures::hammock53(), fixtures::hammock55()}) {
        const auto bp = bounds_from(h);
        int bad = 0;
        for (std::size_t k = 0; k <= h.n; ++k) {
            if (bp.lb[k] > h.coeffs[k] || h.coeffs[k] > bp.ub[k]) ++bad;
        }
        const auto curves = bound_polynomials(bp, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double e = eval_nform(h, grid[i]);
            if (curves.lb[i] > e + 1e-12 || e > curves.ub[i] + 1e-12) ++bad;
        }
        v.require(bad == 0, "sandwich");
        v.detail << h.dims->l << "x" << h.dims->w << " violations " << bad << "; ";
    }
}

void oracle_properties(Verdict& v) {
    for (int len = 1; len <= 8; ++len) {
        TwoTerminalGraph series;
        series.vertex_count = len + 1;
        series.source = 0;
        series.terminal = len;
        for (int i = 0; i < len; ++i) series.edges.emplace_back(i, i + 1);
        const auto c = exact_coeffs(series);
        for (int k = 0; k <= len; ++k) v.require(c.coeffs[k] == (k == len ? 1 : 0), "series");
    }
    for (int width = 1; width <= 8; ++width) {
        TwoTerminalGraph parallel{2, std::vector<std::pair<int, int>>(width, {0, 1}), 0, 1};
        const auto c = exact_coeffs(parallel);
        v.require(c.coeffs[0] == 0, "parallel N_0");
        for (int k = 1; k <= width; ++k) v.require(c.coeffs[k] == binomial(width, k), "parallel");
    }

    std::mt19937_64 rng(777);
    int permuted = 0;
    for (int i = 0; i < 50; ++i) {
        auto g = testing::random_graph(rng, 7, 10);
        const auto before = exact_coeffs(g);
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        v.require(exact_coeffs(g) == before, "permutation invariance");
        ++permuted;
    }
    int crossed = 0;
    for (int i = 0; i < 50; ++i) {
        const auto g = testing::random_graph(rng, 8, 12);
        v.require(exact_coeffs(g).coeffs == exact_coeffs_pathsets(g).coeffs, "path-set agreement");
        ++crossed;
    }
    v.detail << "series/parallel up to 8, " << permuted << " permuted graphs, " << crossed
             << " path-set checks";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
        {"3x5 pipeline reproduction", pipeline_53},
        {"5x5 pipeline reproduction", pipeline_55},
        {"bounds reproduction", stanley},
        {"oracle ground truth", oracle_truth},
        {"identity suite", identities},
        {"spline residuals", residuals},
        {"error bound holds", error_bound_holds},
        {"sandwich property", sandwich},
        {"oracle property tests", oracle_properties},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            check(v);
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail.str() << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
