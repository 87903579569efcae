#include "hamrel/bounds.hpp"

#include <string>

#include "hamrel/error.hpp"

namespace hamrel {

BigInt round_half_even(const Rational& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);  // always positive
    BigInt q = num / den;               // truncates toward zero
    BigInt r = num - q * den;
    if (r < 0) {
        q -= 1;
        r += den;
    }
    // x = q + r/den with 0 <= r < den
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) != 0)) q += 1;
    return q;
}

BoundsPair stanley_bounds(const HammockDims& dims, const BigInt& n_l, const BigInt& n_l1,
                          const BigInt& n_nw1, const BigInt& n_nw) {
    const int l = dims.l;
    const int w = dims.w;
    const int n = dims.n();
    if (n - w - l < 2) {
        throw Error(ErrorCode::degenerate_dimension,
                    "bounds need n - w - l >= 2, got " + std::to_string(n - w - l));
    }
    const auto row = binomial_row(static_cast<std::size_t>(n));
    if (n_l < 0 || n_l > n_l1 || n_l1 > row[l + 1] || n_nw1 < 0 || n_nw1 > row[n - w - 1] ||
        n_nw < 0 || n_nw > row[n - w] || n_l > row[l]) {
        throw Error(ErrorCode::inconsistent_anchors,
                    "bound anchors must satisfy 0 <= N_l <= N_{l+1} and N_k <= C(n,k)");
    }

    BoundsPair bp;
    bp.n = static_cast<std::size_t>(n);
    bp.lb_exact.assign(bp.n + 1, Rational(0));
    bp.ub_exact.assign(bp.n + 1, Rational(0));

    for (int i = l + 1; i <= n - w - 2; ++i) {
        bp.lb_exact[i] = Rational(n_l1 * row[i], row[l + 1]);
    }
    for (int i = l + 2; i <= n - w - 2; ++i) {
        bp.ub_exact[i] = Rational(n_nw1 * row[i], row[n - w - 1]);
    }
    // Explicit anchors win where they overlap the scaled runs.
    for (auto* v : {&bp.lb_exact, &bp.ub_exact}) {
        (*v)[l] = Rational(n_l);
        (*v)[n - w - 1] = Rational(n_nw1);
        (*v)[n - w] = Rational(n_nw);
        for (int i = n - w + 1; i <= n; ++i) (*v)[i] = Rational(row[i]);
    }
    bp.ub_exact[l + 1] = Rational(n_l1);

    bp.lb.reserve(bp.n + 1);
    bp.ub.reserve(bp.n + 1);
    for (std::size_t k = 0; k <= bp.n; ++k) {
        bp.lb.push_back(round_half_even(bp.lb_exact[k]));
        bp.ub.push_back(round_half_even(bp.ub_exact[k]));
        if (bp.lb[k] > bp.ub[k]) {
            throw Error(ErrorCode::inconsistent_anchors,
                        "lower bound exceeds upper bound at k = " + std::to_string(k));
        }
    }
    return bp;
}

BoundCurves bound_polynomials(const BoundsPair& bp, std::span<const double> grid) {
    std::vector<double> lb(bp.lb.size());
    std::vector<double> ub(bp.ub.size());
    for (std::size_t k = 0; k < lb.size(); ++k) {
        lb[k] = bp.lb[k].convert_to<double>();
        ub[k] = bp.ub[k].convert_to<double>();
    }
    BoundCurves out;
    out.lb.reserve(grid.size());
    out.ub.reserve(grid.size());
    for (double p : grid) {
        out.lb.push_back(eval_nform(std::span<const double>(lb), p));
        out.ub.push_back(eval_nform(std::span<const double>(ub), p));
    }
    return out;
}

}  // namespace hamrel
