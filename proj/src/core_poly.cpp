#include "hamrel/core_poly.hpp"

#include <cmath>
#include <string>

#include "hamrel/error.hpp"

namespace hamrel {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::invalid_vector: return "invalid-vector";
        case ErrorCode::degenerate_dimension: return "degenerate-dimension";
        case ErrorCode::invalid_anchors: return "invalid-anchors";
        case ErrorCode::invalid_bridge_point: return "invalid-bridge-point";
        case ErrorCode::singular_system: return "singular-system";
        case ErrorCode::inconsistent_anchors: return "inconsistent-anchors";
        case ErrorCode::cap_exceeded: return "cap-exceeded";
        case ErrorCode::bad_graph: return "bad-graph";
        case ErrorCode::bad_input: return "bad-input";
    }
    return "unknown";
}

HammockDims::HammockDims(int length, int width) : l(length), w(width) {
    if (l < 1 || w < 1) {
        throw Error(ErrorCode::domain, "hammock dimensions must be positive, got l=" +
                                           std::to_string(l) + " w=" + std::to_string(w));
    }
}

ExactCoeffVector::ExactCoeffVector(std::size_t degree, std::vector<BigInt> values,
                                   std::optional<HammockDims> hammock)
    : n(degree), dims(hammock), coeffs(std::move(values)) {}

void ExactCoeffVector::validate() const {
    if (coeffs.size() != n + 1) {
        throw Error(ErrorCode::invalid_vector,
                    "coefficient vector has " + std::to_string(coeffs.size()) +
                        " entries, expected n+1 = " + std::to_string(n + 1));
    }
    if (dims && static_cast<std::size_t>(dims->n()) != n) {
        throw Error(ErrorCode::invalid_vector, "hammock dimensions disagree with n");
    }
    const auto row = binomial_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (coeffs[k] < 0 || coeffs[k] > row[k]) {
            throw Error(ErrorCode::invalid_vector,
                        "N_" + std::to_string(k) + " = " + coeffs[k].str() +
                            " outside [0, C(n,k)]");
        }
    }
}

BigInt ExactCoeffVector::sum() const {
    BigInt total = 0;
    for (const auto& c : coeffs) total += c;
    return total;
}

std::vector<std::int64_t> ApproxCoeffVector::rounded() const {
    std::vector<std::int64_t> out;
    out.reserve(coeffs.size());
    for (double c : coeffs) out.push_back(static_cast<std::int64_t>(std::llround(c)));
    return out;
}

BinomialTable binomial_row(std::size_t n) {
    BinomialTable table;
    table.n = n;
    table.values.reserve(n + 1);
    BigInt c = 1;
    table.values.push_back(c);
    for (std::size_t k = 1; k <= n; ++k) {
        c = c * (n - k + 1) / k;
        table.values.push_back(c);
    }
    return table;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::domain, "p = " + std::to_string(p) + " outside [0,1]");
    }
}

void check_probability(const Rational& p) {
    if (p < 0 || p > 1) {
        throw Error(ErrorCode::domain, "p = " + p.str() + " outside [0,1]");
    }
}

template <class Coeff, class ToDouble>
double eval_double(std::span<const Coeff> coeffs, double p, ToDouble to_double) {
    check_probability(p);
    if (coeffs.empty()) return 0.0;
    const std::size_t n = coeffs.size() - 1;
    const double q = 1.0 - p;
    // Horner in the ratio p/q would blow up near p=1; plain powers are exact
    // enough at the degrees we handle (n <= a few dozen).
    double total = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double c = to_double(coeffs[k]);
        if (c == 0.0) continue;
        total += c * std::pow(p, static_cast<double>(k)) *
                 std::pow(q, static_cast<double>(n - k));
    }
    return total;
}

}  // namespace

double eval_nform(const ExactCoeffVector& v, double p) {
    return eval_double(std::span<const BigInt>(v.coeffs), p,
                       [](const BigInt& c) { return c.convert_to<double>(); });
}

double eval_nform(const ApproxCoeffVector& v, double p) {
    return eval_nform(std::span<const double>(v.coeffs), p);
}

double eval_nform(std::span<const double> coeffs, double p) {
    return eval_double(coeffs, p, [](double c) { return c; });
}

Rational eval_nform_exact(std::span<const BigInt> coeffs, const Rational& p) {
    check_probability(p);
    if (coeffs.empty()) return Rational(0);
    const std::size_t n = coeffs.size() - 1;
    const Rational q = Rational(1) - p;

    std::vector<Rational> q_pow(n + 1);
    q_pow[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) q_pow[k] = q_pow[k - 1] * q;

    Rational total = 0;
    Rational p_pow = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (coeffs[k] != 0) total += Rational(coeffs[k]) * p_pow * q_pow[n - k];
        p_pow *= p;
    }
    return total;
}

Rational eval_nform_exact(const ExactCoeffVector& v, const Rational& p) {
    return eval_nform_exact(std::span<const BigInt>(v.coeffs), p);
}

ExactCoeffVector dual_coeffs(const ExactCoeffVector& v) {
    if (v.coeffs.size() != v.n + 1) {
        throw Error(ErrorCode::invalid_vector, "coefficient vector length is not n+1");
    }
    const auto row = binomial_row(v.n);
    std::vector<BigInt> out(v.n + 1);
    for (std::size_t k = 0; k <= v.n; ++k) {
        out[k] = row[k] - v.coeffs[v.n - k];
        if (out[k] < 0) {
            throw Error(ErrorCode::invalid_vector,
                        "dual coefficient " + std::to_string(k) +
                            " would be negative; input is not a reliability vector");
        }
    }
    std::optional<HammockDims> dims;
    if (v.dims) dims = v.dims->dual();
    return ExactCoeffVector(v.n, std::move(out), dims);
}

bool check_duality_identity(const ExactCoeffVector& h, const ExactCoeffVector& hdual,
                            const Rational& p) {
    if (h.n != hdual.n) return false;
    return eval_nform_exact(h, p) + eval_nform_exact(hdual, Rational(1) - p) == 1;
}

bool check_sum_complementarity(const ExactCoeffVector& h, const ExactCoeffVector& hdual) {
    if (h.n != hdual.n) return false;
    return h.sum() + hdual.sum() == (BigInt(1) << h.n);
}

bool check_coefficient_complementarity(const ExactCoeffVector& h,
                                       const ExactCoeffVector& hdual) {
    if (h.n != hdual.n || h.coeffs.size() != h.n + 1 || hdual.coeffs.size() != h.n + 1) {
        return false;
    }
    const auto row = binomial_row(h.n);
    for (std::size_t k = 0; k <= h.n; ++k) {
        if (h.coeffs[k] + hdual.coeffs[h.n - k] != row[k]) return false;
    }
    return true;
}

}  // namespace hamrel
