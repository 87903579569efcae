#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "hamrel/error.hpp"
#include "hamrel/serialize.hpp"

using namespace hamrel;

TEST_CASE("exact vectors round-trip") {
    for (const auto& v : {fixtures::hammock53(), fixtures::hammock55()}) {
        const Json j = to_json(v);
        CHECK(j["kind"] == "exact");
        CHECK(j["l"] == v.dims->l);
        const auto back = exact_from_json(Json::parse(j.dump()));
        CHECK(back == v);
        REQUIRE(back.dims.has_value());
        CHECK(*back.dims == *v.dims);
    }
    // Values beyond 64 bits stay exact.
    const std::size_t n = 80;
    const auto row = binomial_row(n);
    const ExactCoeffVector wide(n, row.values);
    CHECK(exact_from_json(to_json(wide)) == wide);
}

TEST_CASE("approx vectors round-trip bit for bit") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    for (int trial = 0; trial < 50; ++trial) {
        ApproxCoeffVector v;
        v.n = 1 + trial % 12;
        for (std::size_t k = 0; k <= v.n; ++k) v.coeffs.push_back(dist(rng));
        v.params = {3, 2, 5, 9, SplineMode::general};
        const auto back = approx_from_json(Json::parse(to_json(v).dump()));
        CHECK(back.coeffs == v.coeffs);
        CHECK(back.params.s == 3);
        CHECK(back.params.x2 == 9);
        CHECK(back.params.mode == SplineMode::general);
    }
}

TEST_CASE("anchors round-trip and accept plain integers") {
    KnownAnchors a;
    a.dims = HammockDims(5, 3);
    a.n_l = 21;
    a.n_lt = 194;
    a.nw_dual = 16;
    a.nws_dual = 178;
    const auto back = anchors_from_json(to_json(a));
    CHECK(back.n_lt == 194);
    CHECK(back.nws_dual == 178);

    const auto j = Json::parse(R"({"l": 5, "w": 3, "N_l": 21, "N_lt": "194", "Nw_dual": 16, "Nws_dual": 178})");
    const auto parsed = anchors_from_json(j);
    CHECK(parsed.t == 1);
    CHECK(parsed.s == 1);
    CHECK(parsed.n_lt == 194);
}

TEST_CASE("malformed documents are rejected") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("expected an error");
        return ErrorCode::domain;
    };
    const auto good = to_json(fixtures::hammock53());

    auto wrong_kind = good;
    wrong_kind["kind"] = "approx";
    CHECK(code_of([&] { exact_from_json(wrong_kind); }) == ErrorCode::bad_input);

    auto negative = good;
    negative["coeffs"][3] = "-1";
    CHECK_THROWS_AS(exact_from_json(negative), Error);

    auto too_big = good;
    too_big["coeffs"][2] = "106";
    CHECK(code_of([&] { exact_from_json(too_big); }) == ErrorCode::invalid_vector);

    auto short_vec = good;
    short_vec["coeffs"].erase(short_vec["coeffs"].size() - 1);
    CHECK(code_of([&] { exact_from_json(short_vec); }) == ErrorCode::invalid_vector);

    auto missing = good;
    missing.erase("n");
    CHECK(code_of([&] { exact_from_json(missing); }) == ErrorCode::bad_input);

    CHECK_THROWS_AS(anchors_from_json(Json::parse(R"({"l": 5, "w": 3, "N_l": "x1"})")), Error);
    CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::bad_input);
}

TEST_CASE("bounds serialize as two exact vectors") {
    BoundsPair bp;
    bp.n = 2;
    bp.lb = {0, 1, 1};
    bp.ub = {0, 2, 1};
    const Json j = to_json(bp);
    CHECK(exact_from_json(j["lb"]).coeffs == bp.lb);
    CHECK(exact_from_json(j["ub"]).coeffs == bp.ub);
}
