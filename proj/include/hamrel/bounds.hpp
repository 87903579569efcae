#pragma once

// Stanley-type coefficient bounds: binomially scaled runs between two known
// coefficients at each end, plus the exact binomial tail.

#include <span>
#include <vector>

#include "hamrel/core_poly.hpp"

namespace hamrel {

struct BoundsPair {
    std::size_t n = 0;
    std::vector<BigInt> lb;          // published integer vectors
    std::vector<BigInt> ub;
    std::vector<Rational> lb_exact;  // before rounding
    std::vector<Rational> ub_exact;
};

// lb: 0 below l, N_l, N_{l+1} C(n,i)/C(n,l+1) for i = l+1..n-w-2,
//     N_{n-w-1}, N_{n-w}, then C(n,i).
// ub: 0 below l, N_l, N_{l+1}, N_{n-w-1} C(n,i)/C(n,n-w-1) for i = l+2..n-w-2,
//     N_{n-w-1}, N_{n-w}, then C(n,i).
// Scaled entries are rounded half to even.
BoundsPair stanley_bounds(const HammockDims& dims, const BigInt& n_l, const BigInt& n_l1,
                          const BigInt& n_nw1, const BigInt& n_nw);

struct BoundCurves {
    std::vector<double> lb;
    std::vector<double> ub;
};

BoundCurves bound_polynomials(const BoundsPair& bp, std::span<const double> grid);

// Nearest integer, ties to even.
BigInt round_half_even(const Rational& x);

}  // namespace hamrel
