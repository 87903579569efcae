#pragma once

// Exact N-form reliability polynomials.
//
// A two-terminal network on n devices has reliability
//
//     h(p) = sum_k N_k p^k (1-p)^(n-k)
//
// where N_k counts the k-subsets of devices that connect source to terminal.
// The dual hammock H(w,l) of H(l,w) satisfies h(p) + h_dual(1-p) = 1, which
// forces N_k + N_dual_{n-k} = C(n,k) coefficient-wise and makes the two
// coefficient sums add up to 2^n.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamrel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct HammockDims {
    int l = 1;  // devices per wire
    int w = 1;  // number of wires

    HammockDims() = default;
    HammockDims(int length, int width);

    int n() const noexcept { return l * w; }
    HammockDims dual() const noexcept { return HammockDims{w, l}; }

    friend bool operator==(const HammockDims&, const HammockDims&) = default;
};

struct ExactCoeffVector {
    std::size_t n = 0;
    std::optional<HammockDims> dims;  // absent for non-hammock graphs
    std::vector<BigInt> coeffs;       // N_0..N_n

    ExactCoeffVector() = default;
    ExactCoeffVector(std::size_t degree, std::vector<BigInt> values,
                     std::optional<HammockDims> hammock = std::nullopt);

    // Length n+1 and 0 <= N_k <= C(n,k). Throws Error(invalid_vector).
    void validate() const;

    BigInt sum() const;

    friend bool operator==(const ExactCoeffVector& a, const ExactCoeffVector& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

enum class SplineMode { unique, general };

struct ApproxParams {
    int s = 1;
    int t = 1;
    int x1 = 0;  // bridge points, general mode only
    int x2 = 0;
    SplineMode mode = SplineMode::unique;
};

struct ApproxCoeffVector {
    std::size_t n = 0;
    std::vector<double> coeffs;  // f(0)..f(n)
    ApproxParams params;

    // Round-half-away-from-zero view of coeffs.
    std::vector<std::int64_t> rounded() const;
};

struct BinomialTable {
    std::size_t n = 0;
    std::vector<BigInt> values;  // C(n,0)..C(n,n)

    const BigInt& operator[](std::size_t k) const { return values.at(k); }
};

BinomialTable binomial_row(std::size_t n);

// C(n,k), zero when k is outside [0,n].
BigInt binomial(std::int64_t n, std::int64_t k);

// Double-precision evaluation of sum_k c_k p^k (1-p)^(n-k).
double eval_nform(const ExactCoeffVector& v, double p);
double eval_nform(const ApproxCoeffVector& v, double p);
double eval_nform(std::span<const double> coeffs, double p);

// Exact evaluation at a rational p.
Rational eval_nform_exact(const ExactCoeffVector& v, const Rational& p);
Rational eval_nform_exact(std::span<const BigInt> coeffs, const Rational& p);

// N_dual_k = C(n,k) - N_{n-k}.
ExactCoeffVector dual_coeffs(const ExactCoeffVector& v);

// h(p) + h_dual(1-p) == 1 under exact arithmetic.
bool check_duality_identity(const ExactCoeffVector& h, const ExactCoeffVector& hdual,
                            const Rational& p);

// sum N + sum N_dual == 2^n.
bool check_sum_complementarity(const ExactCoeffVector& h, const ExactCoeffVector& hdual);

// N_k + N_dual_{n-k} == C(n,k) for every k.
bool check_coefficient_complementarity(const ExactCoeffVector& h,
                                       const ExactCoeffVector& hdual);

}  // namespace hamrel
