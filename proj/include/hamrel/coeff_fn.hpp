#pragma once

// Segmentary linear coefficient functions: the chord interpolant through the
// points (k, v_k), k = 0..n. Used for diagnostics and plotting.

#include <iosfwd>
#include <string>
#include <vector>

#include "hamrel/core_poly.hpp"

namespace hamrel {

struct PiecewiseLinearF {
    std::size_t n = 0;
    std::vector<Rational> knots;  // v_0..v_n

    // Exact value on [0,n]; throws Error(domain) outside.
    Rational operator()(const Rational& x) const;
    double operator()(double x) const;
};

// F for a coefficient vector: knots N_1..N_n, with F(0) = 0.
PiecewiseLinearF make_F(const ExactCoeffVector& v);

// Binomial envelope B: knots C(n,k), with B(0) = 1.
PiecewiseLinearF make_B(std::size_t n);

// Exact trapezoid sum over [0,n].
Rational integrate_F(const PiecewiseLinearF& f);

// Writes "x,<name_0>,<name_1>,..." followed by `samples` equally spaced rows
// over [0,n]. All functions must share n.
void write_segmentary_csv(std::ostream& out, const std::vector<const PiecewiseLinearF*>& fns,
                          const std::vector<std::string>& names, std::size_t samples);

}  // namespace hamrel
