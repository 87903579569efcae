#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "hamrel/core_poly.hpp"
#include "hamrel/error.hpp"

using namespace hamrel;

namespace {

Rational random_probability(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 1000);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d);
    return Rational(num(rng), d);
}

}  // namespace

TEST_CASE("binomial_row") {
    CHECK(binomial_row(15)[7] == 6435);
    CHECK(binomial_row(25)[5] == 53130);
    const auto zero = binomial_row(0);
    REQUIRE(zero.values.size() == 1);
    CHECK(zero[0] == 1);

    for (std::size_t n : {1u, 7u, 30u, 64u}) {
        const auto row = binomial_row(n);
        BigInt total = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(row[k] == row[n - k]);
            total += row[k];
        }
        CHECK(total == (BigInt(1) << n));
        if (n > 1) {
            const auto prev = binomial_row(n - 1);
            for (std::size_t k = 1; k < n; ++k) CHECK(row[k] == prev[k - 1] + prev[k]);
        }
    }
    // Past 64 bits.
    CHECK(binomial_row(100)[50] == BigInt("100891344545564193334812497256"));
}

TEST_CASE("binomial outside range is zero") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(25, 12) == 5200300);
}

TEST_CASE("HammockDims rejects nonpositive sizes") {
    CHECK_THROWS_AS(HammockDims(0, 3), Error);
    CHECK(HammockDims(5, 3).n() == 15);
    CHECK(HammockDims(5, 3).dual() == HammockDims(3, 5));
}

TEST_CASE("ExactCoeffVector validation") {
    fixtures::hammock53().validate();
    ExactCoeffVector bad = fixtures::hammock53();
    bad.coeffs[3] = 1000;  // C(15,3) = 455
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.coeffs.pop_back();
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("eval_nform") {
    const auto h = fixtures::hammock53();
    CHECK(eval_nform(h, 0.0) == 0.0);
    CHECK(eval_nform(h, 1.0) == 1.0);
    CHECK(eval_nform_exact(h, Rational(1, 2)) == Rational(9073, 32768));
    CHECK(eval_nform(h, 0.5) == doctest::Approx(9073.0 / 32768.0).epsilon(1e-14));

    const auto row = binomial_row(15);
    const ExactCoeffVector ones(15, row.values);
    CHECK(eval_nform_exact(ones, Rational(3, 7)) == 1);
    CHECK(eval_nform(ones, 0.3) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(eval_nform(h, 1.5), Error);
    CHECK_THROWS_AS(eval_nform_exact(h, Rational(-1, 2)), Error);
}

TEST_CASE("eval_nform is monotone in each coefficient") {
    std::mt19937_64 rng(7);
    const auto h = fixtures::hammock53();
    for (int trial = 0; trial < 50; ++trial) {
        auto bumped = h;
        const auto k = std::uniform_int_distribution<std::size_t>(0, 15)(rng);
        bumped.coeffs[k] += 1;
        const Rational p = random_probability(rng);
        CHECK(eval_nform_exact(bumped, p) >= eval_nform_exact(h, p));
    }
}

TEST_CASE("dual_coeffs") {
    const auto h = fixtures::hammock53();
    const auto d = dual_coeffs(h);
    CHECK(d.coeffs[3] == 16);
    CHECK(d.coeffs[4] == 178);
    REQUIRE(d.dims.has_value());
    CHECK(*d.dims == HammockDims(3, 5));
    CHECK(dual_coeffs(d) == h);

    const auto sq = fixtures::hammock55();
    CHECK(dual_coeffs(sq) == sq);
    CHECK(dual_coeffs(sq).coeffs[5] == 52);

    // Series network of n devices dualises to the parallel one.
    std::vector<BigInt> series(6, BigInt(0));
    series[5] = 1;
    const auto parallel = dual_coeffs(ExactCoeffVector(5, series));
    CHECK(parallel.coeffs[0] == 0);
    const auto row = binomial_row(5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(parallel.coeffs[k] == row[k]);

    auto broken = h;
    broken.coeffs[15] = 2;  // C(15,0) - 2 < 0
    CHECK_THROWS_AS(dual_coeffs(broken), Error);
}

TEST_CASE("duality identity and complementarity") {
    const auto h = fixtures::hammock53();
    const auto d = dual_coeffs(h);
    CHECK(check_duality_identity(h, d, Rational(1, 3)));
    CHECK(check_sum_complementarity(h, d));
    CHECK(h.sum() + d.sum() == 32768);
    CHECK(check_coefficient_complementarity(h, d));

    const auto sq = fixtures::hammock55();
    CHECK(check_duality_identity(sq, sq, Rational(1, 2)));
    CHECK(check_sum_complementarity(sq, sq));
    CHECK(2 * sq.sum() == (BigInt(1) << 25));

    const ExactCoeffVector full(15, binomial_row(15).values);
    const ExactCoeffVector none(15, std::vector<BigInt>(16, BigInt(0)));
    CHECK(check_duality_identity(full, none, Rational(2, 5)));
    CHECK(check_sum_complementarity(full, none));
    CHECK_FALSE(check_duality_identity(full, full, Rational(2, 5)));
    CHECK_FALSE(check_sum_complementarity(full, full));
    CHECK_FALSE(check_duality_identity(h, h, Rational(1, 3)));
}

TEST_CASE("complementarity properties hold for random reliability-like vectors") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
        const auto row = binomial_row(n);
        std::vector<BigInt> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            const auto cap = row[k].convert_to<std::uint64_t>();
            c[k] = std::uniform_int_distribution<std::uint64_t>(0, cap)(rng);
        }
        const ExactCoeffVector h(n, c);
        const auto d = dual_coeffs(h);
        CHECK(check_coefficient_complementarity(h, d));
        CHECK(check_sum_complementarity(h, d));
        CHECK(dual_coeffs(d) == h);
        for (int i = 0; i < 5; ++i) CHECK(check_duality_identity(h, d, random_probability(rng)));
    }
}

TEST_CASE("rounded view rounds half away from zero") {
    ApproxCoeffVector v;
    v.n = 3;
    v.coeffs = {0.5, 1.49, 2.5, -0.5};
    CHECK(v.rounded() == std::vector<std::int64_t>{1, 1, 3, -1});
}
