#include "hamrel/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamrel/error.hpp"

namespace hamrel {

namespace {

BigInt ipow(std::int64_t base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

BigInt cube(std::int64_t v) { return ipow(v, 3); }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace

BigInt KnownAnchors::n_nw() const { return binomial(dims.n(), dims.w) - nw_dual; }
BigInt KnownAnchors::n_nl_dual() const { return binomial(dims.n(), dims.l) - n_l; }
BigInt KnownAnchors::n_nws() const { return binomial(dims.n(), dims.w + s) - nws_dual; }
BigInt KnownAnchors::n_nlt_dual() const { return binomial(dims.n(), dims.l + t) - n_lt; }

void KnownAnchors::validate() const {
    const int span = cubic_span();
    if (span < 2) {
        throw Error(ErrorCode::degenerate_dimension,
                    "n - w - l = " + std::to_string(span) +
                        " < 2; series/parallel hammocks are exactly computable by the oracle");
    }
    if (t < 1 || t > span - 1 || s < 1 || s > span - 1) {
        throw Error(ErrorCode::invalid_anchors,
                    "offsets must satisfy 1 <= t, s <= " + std::to_string(span - 1) +
                        ", got t=" + std::to_string(t) + " s=" + std::to_string(s));
    }
    if (!(n_l > 0 && n_lt > n_l)) {
        throw Error(ErrorCode::invalid_anchors, "need 0 < N_l < N_{l+t}, got N_l=" +
                                                    n_l.str() + " N_{l+t}=" + n_lt.str());
    }
    if (!(nw_dual > 0 && nws_dual > nw_dual)) {
        throw Error(ErrorCode::invalid_anchors,
                    "need 0 < N_dual_w < N_dual_{w+s}, got " + nw_dual.str() + " and " +
                        nws_dual.str());
    }
    const int n = dims.n();
    if (n_l > binomial(n, dims.l) || n_lt > binomial(n, dims.l + t) ||
        nw_dual > binomial(n, dims.w) || nws_dual > binomial(n, dims.w + s)) {
        throw Error(ErrorCode::invalid_anchors, "anchor value exceeds its binomial coefficient");
    }
}

UniqueSystems assemble_unique_system(const KnownAnchors& anchors) {
    anchors.validate();
    const std::int64_t L = anchors.cubic_span();
    const std::int64_t t = anchors.t;
    const std::int64_t s = anchors.s;
    const BigInt L3 = cube(L);

    const BigInt a1 = anchors.n_lt * L3 - anchors.n_l * cube(L - t) - anchors.n_nw() * cube(t);
    const BigInt a2 =
        anchors.nws_dual * L3 - anchors.nw_dual * cube(L - s) - anchors.n_nl_dual() * cube(s);
    const BigInt a3 = anchors.n_nlt_dual() * L3 - anchors.n_nl_dual() * cube(L - t) -
                      anchors.nw_dual * cube(t);
    const BigInt a4 = anchors.n_nws() * L3 - anchors.n_nw() * cube(L - s) - anchors.n_l * cube(s);

    UniqueSystems out;
    out.ab.dim = 2;
    out.ab.matrix = {3 * (L - t) * (L - t) * t, 3 * (L - t) * t * t,
                     3 * s * s * (L - s), 3 * s * (L - s) * (L - s)};
    out.ab.rhs = {a1, a4};

    out.cd.dim = 2;
    out.cd.matrix = {3 * (L - s) * (L - s) * s, 3 * (L - s) * s * s,
                     3 * t * t * (L - t), 3 * t * (L - t) * (L - t)};
    out.cd.rhs = {a2, a3};
    return out;
}

LinearSystem assemble_general_system(const KnownAnchors& anchors, int x1, int x2) {
    anchors.validate();
    const int l = anchors.dims.l;
    const int w = anchors.dims.w;
    const int n = anchors.dims.n();
    const int s = anchors.s;
    const int t = anchors.t;

    if (s == t || s == n - t) {
        throw Error(ErrorCode::invalid_anchors, "general mode requires s != t and s != n - t");
    }
    const int lo = std::max(l + t, w + s);
    const int hi = std::min(n - w + s, n - l + t);
    for (int x : {x1, x2}) {
        // Both f_lw(x) and f_wl(n - x) must land on the cubic pieces.
        if (x <= lo || x >= hi || x <= l || x >= n - w) {
            throw Error(ErrorCode::invalid_bridge_point,
                        "bridge point " + std::to_string(x) + " outside (" +
                            std::to_string(std::max(lo, l)) + ", " +
                            std::to_string(std::min(hi, n - w)) + ")");
        }
    }
    if (x1 == x2) throw Error(ErrorCode::invalid_bridge_point, "bridge points must differ");

    const std::int64_t L = anchors.cubic_span();
    const BigInt L3 = cube(L);
    const UniqueSystems unique = assemble_unique_system(anchors);

    LinearSystem sys;
    sys.dim = 4;
    sys.matrix.assign(16, BigInt(0));
    sys.rhs.resize(4);

    sys.matrix[0] = unique.ab.at(0, 0);
    sys.matrix[1] = unique.ab.at(0, 1);
    sys.rhs[0] = unique.ab.rhs[0];
    sys.matrix[4 + 2] = unique.cd.at(0, 0);
    sys.matrix[4 + 3] = unique.cd.at(0, 1);
    sys.rhs[1] = unique.cd.rhs[0];

    const BigInt cnl = binomial(n, l);
    const BigInt cnw = binomial(n, w);
    for (int r = 0; r < 2; ++r) {
        const std::int64_t x = r == 0 ? x1 : x2;
        const std::int64_t left = x - l;
        const std::int64_t right = n - w - x;
        BigInt* row = &sys.matrix[(2 + r) * 4];
        row[0] = 3 * left * right * right;
        row[1] = 3 * left * left * right;
        row[2] = 3 * right * left * left;
        row[3] = 3 * right * right * left;
        sys.rhs[2 + r] = binomial(n, x) * L3 - cnl * cube(right) - cnw * cube(left);
    }
    return sys;
}

Solution solve_system(const LinearSystem& system) {
    const std::size_t dim = system.dim;
    if (dim == 0 || system.matrix.size() != dim * dim || system.rhs.size() != dim) {
        throw Error(ErrorCode::bad_input, "malformed linear system");
    }
    std::vector<double> m(dim * dim);
    std::vector<double> rhs(dim);
    for (std::size_t i = 0; i < dim * dim; ++i) m[i] = to_double(system.matrix[i]);
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = to_double(system.rhs[i]);

    constexpr double kPivotTol = 1e-12;
    Solution sol;
    sol.x.assign(dim, 0.0);

    if (dim == 2) {
        const double det = m[0] * m[3] - m[1] * m[2];
        const double scale = std::abs(m[0] * m[3]) + std::abs(m[1] * m[2]);
        if (scale == 0.0 || std::abs(det) <= kPivotTol * scale) {
            throw Error(ErrorCode::singular_system, "2x2 system is singular");
        }
        sol.x[0] = (rhs[0] * m[3] - m[1] * rhs[1]) / det;
        sol.x[1] = (m[0] * rhs[1] - m[2] * rhs[0]) / det;
    } else {
        std::vector<double> a = m;
        std::vector<double> b = rhs;
        std::vector<double> row_scale(dim, 0.0);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                row_scale[r] = std::max(row_scale[r], std::abs(a[r * dim + c]));
            }
        }
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < dim; ++r) {
                if (std::abs(a[r * dim + col]) > std::abs(a[piv * dim + col])) piv = r;
            }
            if (row_scale[piv] == 0.0 ||
                std::abs(a[piv * dim + col]) <= kPivotTol * row_scale[piv]) {
                throw Error(ErrorCode::singular_system,
                            "pivot " + std::to_string(col) + " vanishes; system is singular");
            }
            if (piv != col) {
                for (std::size_t c = 0; c < dim; ++c) std::swap(a[piv * dim + c], a[col * dim + c]);
                std::swap(b[piv], b[col]);
                std::swap(row_scale[piv], row_scale[col]);
            }
            for (std::size_t r = col + 1; r < dim; ++r) {
                const double factor = a[r * dim + col] / a[col * dim + col];
                if (factor == 0.0) continue;
                for (std::size_t c = col; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
                b[r] -= factor * b[col];
            }
        }
        for (std::size_t i = dim; i-- > 0;) {
            double acc = b[i];
            for (std::size_t c = i + 1; c < dim; ++c) acc -= a[i * dim + c] * sol.x[c];
            sol.x[i] = acc / a[i * dim + i];
        }
    }

    for (std::size_t r = 0; r < dim; ++r) {
        double lhs = 0.0;
        double scale = std::abs(rhs[r]);
        for (std::size_t c = 0; c < dim; ++c) {
            const double term = m[r * dim + c] * sol.x[c];
            lhs += term;
            scale = std::max(scale, std::abs(term));
        }
        const double res = scale > 0.0 ? std::abs(lhs - rhs[r]) / scale : 0.0;
        sol.max_relative_residual = std::max(sol.max_relative_residual, res);
    }
    return sol;
}

SplineModel make_model(const KnownAnchors& anchors, const ApproxParams& params, double a,
                       double b, double c, double d) {
    SplineModel model;
    model.dims = anchors.dims;
    model.anchors = anchors;
    model.params = params;
    model.params.s = anchors.s;
    model.params.t = anchors.t;
    model.a = a;
    model.b = b;
    model.c = c;
    model.d = d;
    model.n_nw = anchors.n_nw();
    model.n_nl_dual = anchors.n_nl_dual();
    model.n_nws = anchors.n_nws();
    model.n_nlt_dual = anchors.n_nlt_dual();
    return model;
}

namespace {

struct Side {
    int n;
    int lo;  // first nonzero index
    int hi;  // last index of the cubic piece
    double start;
    double end;
    double p;
    double q;
};

double eval_side(const Side& side, double x) {
    if (!(x >= 0.0 && x <= static_cast<double>(side.n))) {
        throw Error(ErrorCode::domain, "x = " + std::to_string(x) + " outside [0, n]");
    }
    if (x <= side.lo - 1) return 0.0;
    if (x <= side.lo) return side.start * (x - (side.lo - 1));
    if (x <= side.hi) {
        const double u = (x - side.lo) / static_cast<double>(side.hi - side.lo);
        const double v = 1.0 - u;
        return side.start * v * v * v + 3.0 * side.p * v * v * u + 3.0 * side.q * v * u * u +
               side.end * u * u * u;
    }
    const auto k = static_cast<int>(std::ceil(x));
    const double from = k - 1 == side.hi ? side.end : to_double(binomial(side.n, k - 1));
    const double to = to_double(binomial(side.n, k));
    return from + (to - from) * (x - (k - 1));
}

Side primal_side(const SplineModel& m) {
    const int n = m.dims.n();
    return {n, m.dims.l, n - m.dims.w, to_double(m.anchors.n_l), to_double(m.n_nw), m.a, m.b};
}

Side dual_side(const SplineModel& m) {
    const int n = m.dims.n();
    return {n, m.dims.w, n - m.dims.l, to_double(m.anchors.nw_dual), to_double(m.n_nl_dual),
            m.c, m.d};
}

ApproxCoeffVector sample(const Side& side, const ApproxParams& params) {
    ApproxCoeffVector v;
    v.n = static_cast<std::size_t>(side.n);
    v.params = params;
    v.coeffs.reserve(v.n + 1);
    for (int k = 0; k <= side.n; ++k) v.coeffs.push_back(eval_side(side, k));
    return v;
}

}  // namespace

double eval_f_lw(const SplineModel& model, double x) { return eval_side(primal_side(model), x); }

double eval_f_wl(const SplineModel& model, double x) { return eval_side(dual_side(model), x); }

ApproxResult approximate(const KnownAnchors& anchors, const ApproxParams& params) {
    anchors.validate();
    ApproxParams used = params;
    used.s = anchors.s;
    used.t = anchors.t;

    ApproxResult result;
    double a = 0, b = 0, c = 0, d = 0;
    if (used.mode == SplineMode::unique) {
        used.x1 = anchors.dims.l + 1;
        used.x2 = anchors.dims.n() - anchors.dims.w - 1;
        const UniqueSystems systems = assemble_unique_system(anchors);
        const Solution ab = solve_system(systems.ab);
        const Solution cd = solve_system(systems.cd);
        a = ab.x[0];
        b = ab.x[1];
        c = cd.x[0];
        d = cd.x[1];
        result.max_relative_residual = std::max(ab.max_relative_residual, cd.max_relative_residual);
    } else {
        if (used.x2 == 0) used.x2 = anchors.dims.n() - used.x1;
        const Solution sol = solve_system(assemble_general_system(anchors, used.x1, used.x2));
        a = sol.x[0];
        b = sol.x[1];
        c = sol.x[2];
        d = sol.x[3];
        result.max_relative_residual = sol.max_relative_residual;
    }

    result.model = make_model(anchors, used, a, b, c, d);
    result.primal = sample(primal_side(result.model), used);
    result.dual = sample(dual_side(result.model), used);
    return result;
}

ErrorBound error_bound(const HammockDims& dims) {
    const int l = dims.l;
    const int w = dims.w;
    const int n = dims.n();
    if (n - w - l < 2) {
        throw Error(ErrorCode::degenerate_dimension,
                    "error bound needs n - w - l >= 2, got " + std::to_string(n - w - l));
    }
    auto term = [&](int k) {
        return ipow(k + 1, static_cast<unsigned>(k + 1)) *
               ipow(n - k - 1, static_cast<unsigned>(n - k - 1));
    };
    ErrorBound out;
    out.M = std::max(term(l), term(w));

    BigInt gap = binomial(n, n / 2) - std::min(binomial(n, l + 1), binomial(n, w + 1));
    if (gap < 0) gap = -gap;

    out.per_network_exact =
        Rational(out.M * (n - w - l - 1) * gap, ipow(n, static_cast<unsigned>(n)));
    out.per_network = out.per_network_exact.convert_to<double>();
    out.cumulative = (2 * out.per_network_exact).convert_to<double>();
    return out;
}

}  // namespace hamrel
