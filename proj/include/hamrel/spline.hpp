#pragma once

// Simultaneous cubic approximation of the coefficient sequences of a hammock
// H(l,w) and its dual H(w,l).
//
// Both coefficient functions are modelled as
//
//     0                        on [0, lo-1]
//     chord to (lo, start)     on (lo-1, lo]
//     cubic Bezier piece       on (lo, hi]
//     chords through C(n,k)    on (hi, n]
//
// with (lo, hi) = (l, n-w) for the primal and (w, n-l) for the dual. Both
// cubic pieces live on intervals of the same length n-w-l. The cubic has
// control values (start, a, b, end) for the primal and (start, c, d, end) for
// the dual; the four inner controls are fixed by interpolating known
// coefficients and by the complementarity N_k + N_dual_{n-k} = C(n,k).

#include <vector>

#include "hamrel/core_poly.hpp"

namespace hamrel {

struct KnownAnchors {
    HammockDims dims;
    int t = 1;         // primal anchor sits at index l + t
    int s = 1;         // dual anchor sits at index w + s
    BigInt n_l;        // N_l
    BigInt n_lt;       // N_{l+t}
    BigInt nw_dual;    // N_dual_w
    BigInt nws_dual;   // N_dual_{w+s}

    // Length n - w - l of both cubic intervals.
    int cubic_span() const noexcept { return dims.n() - dims.w - dims.l; }

    // Endpoints implied by complementarity.
    BigInt n_nw() const;         // N_{n-w}       = C(n,w)   - N_dual_w
    BigInt n_nl_dual() const;    // N_dual_{n-l}  = C(n,l)   - N_l
    BigInt n_nws() const;        // N_{n-w-s}     = C(n,w+s) - N_dual_{w+s}
    BigInt n_nlt_dual() const;   // N_dual_{n-l-t}= C(n,l+t) - N_{l+t}

    // Throws degenerate_dimension when n-w-l < 2 and invalid_anchors when the
    // offsets or values break 1 <= t,s <= n-w-l-1, 0 < N_l < N_{l+t},
    // 0 < N_dual_w < N_dual_{w+s}, or exceed the binomial caps.
    void validate() const;
};

// Square system over exact integers; converted to double only when solved.
struct LinearSystem {
    std::size_t dim = 0;
    std::vector<BigInt> matrix;  // row-major, dim * dim
    std::vector<BigInt> rhs;

    const BigInt& at(std::size_t row, std::size_t col) const { return matrix[row * dim + col]; }
};

struct UniqueSystems {
    LinearSystem ab;  // primal controls
    LinearSystem cd;  // dual controls
};

struct Solution {
    std::vector<double> x;
    double max_relative_residual = 0.0;
};

UniqueSystems assemble_unique_system(const KnownAnchors& anchors);

// Rows: primal anchor, dual anchor, bridge at x1, bridge at x2, over (a,b,c,d).
LinearSystem assemble_general_system(const KnownAnchors& anchors, int x1, int x2);

// Cramer's rule for 2x2, Gaussian elimination with partial pivoting otherwise.
// Throws singular_system when a pivot drops below 1e-12 of its row scale.
Solution solve_system(const LinearSystem& system);

struct SplineModel {
    HammockDims dims;
    KnownAnchors anchors;
    ApproxParams params;
    double a = 0, b = 0, c = 0, d = 0;
    BigInt n_nw, n_nl_dual, n_nws, n_nlt_dual;
};

// Builds the model from anchors and solved controls; derives the endpoints.
SplineModel make_model(const KnownAnchors& anchors, const ApproxParams& params, double a,
                       double b, double c, double d);

double eval_f_lw(const SplineModel& model, double x);
double eval_f_wl(const SplineModel& model, double x);

struct ApproxResult {
    ApproxCoeffVector primal;  // f_lw(0..n)
    ApproxCoeffVector dual;    // f_wl(0..n)
    SplineModel model;
    double max_relative_residual = 0.0;  // over every solved equation
};

// Unique mode solves the two decoupled 2x2 systems. General mode solves the
// 4x4 bridge system; x2 defaults to n - x1 when left at 0.
ApproxResult approximate(const KnownAnchors& anchors, const ApproxParams& params = {});

struct ErrorBound {
    Rational per_network_exact;
    double per_network = 0.0;
    double cumulative = 0.0;  // twice per_network
    BigInt M;
};

// M (n-w-l-1) / n^n * |C(n, floor(n/2)) - min(C(n,l+1), C(n,w+1))| with
// M = max((l+1)^(l+1) (n-l-1)^(n-l-1), (w+1)^(w+1) (n-w-1)^(n-w-1)).
ErrorBound error_bound(const HammockDims& dims);

}  // namespace hamrel
