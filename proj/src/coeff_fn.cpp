#include "hamrel/coeff_fn.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "hamrel/error.hpp"
#include "hamrel/format.hpp"

namespace hamrel {

Rational PiecewiseLinearF::operator()(const Rational& x) const {
    if (x < 0 || x > Rational(n)) {
        throw Error(ErrorCode::domain, "x = " + x.str() + " outside [0, n]");
    }
    if (x == 0) return knots.at(0);
    // x in (k-1, k]
    BigInt k = numerator(x) / denominator(x);
    if (Rational(k) != x) k += 1;
    const auto ki = k.convert_to<std::size_t>();
    const Rational& lo = knots[ki - 1];
    const Rational& hi = knots[ki];
    return lo + (hi - lo) * (x - Rational(k - 1));
}

double PiecewiseLinearF::operator()(double x) const {
    if (!(x >= 0.0 && x <= static_cast<double>(n))) {
        throw Error(ErrorCode::domain, "x = " + std::to_string(x) + " outside [0, n]");
    }
    if (x == 0.0) return knots.at(0).convert_to<double>();
    auto k = static_cast<std::size_t>(std::ceil(x));
    const double lo = knots[k - 1].convert_to<double>();
    const double hi = knots[k].convert_to<double>();
    return lo + (hi - lo) * (x - static_cast<double>(k - 1));
}

PiecewiseLinearF make_F(const ExactCoeffVector& v) {
    if (v.coeffs.size() != v.n + 1) {
        throw Error(ErrorCode::invalid_vector, "coefficient vector length is not n+1");
    }
    PiecewiseLinearF f;
    f.n = v.n;
    f.knots.reserve(v.n + 1);
    f.knots.emplace_back(0);
    for (std::size_t k = 1; k <= v.n; ++k) f.knots.emplace_back(v.coeffs[k]);
    return f;
}

PiecewiseLinearF make_B(std::size_t n) {
    PiecewiseLinearF f;
    f.n = n;
    for (const auto& c : binomial_row(n).values) f.knots.emplace_back(c);
    return f;
}

Rational integrate_F(const PiecewiseLinearF& f) {
    Rational total = 0;
    for (std::size_t k = 1; k <= f.n; ++k) total += (f.knots[k - 1] + f.knots[k]) / 2;
    return total;
}

void write_segmentary_csv(std::ostream& out, const std::vector<const PiecewiseLinearF*>& fns,
                          const std::vector<std::string>& names, std::size_t samples) {
    if (fns.empty() || fns.size() != names.size()) {
        throw Error(ErrorCode::bad_input, "function and column name counts differ");
    }
    if (samples < 2) throw Error(ErrorCode::bad_input, "need at least 2 samples");
    const std::size_t n = fns.front()->n;
    for (const auto* f : fns) {
        if (f->n != n) throw Error(ErrorCode::bad_input, "functions do not share n");
    }

    out << 'x';
    for (const auto& name : names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < samples; ++i) {
        // Exact grid point so the last sample lands on n.
        const Rational x = Rational(BigInt(i) * n, BigInt(samples - 1));
        out << format_real(x.convert_to<double>());
        for (const auto* f : fns) out << ',' << format_real((*f)(x).convert_to<double>());
        out << '\n';
    }
}

}  // namespace hamrel
