#include "hamrel/serialize.hpp"

#include <cstdlib>
#include <fstream>

#include "hamrel/error.hpp"
#include "hamrel/format.hpp"

namespace hamrel {

namespace {

BigInt parse_bigint(const Json& j, const char* what) {
    try {
        if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
                throw Error(ErrorCode::bad_input, std::string("not an integer: ") + what);
            }
            return BigInt(s);
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::bad_input, std::string("expected integer for ") + what);
}

double parse_real(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() && *end == '\0') return v;
    }
    throw Error(ErrorCode::bad_input, "expected real number");
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::bad_input, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw Error(ErrorCode::bad_input, std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

}  // namespace

std::string_view mode_name(SplineMode mode) noexcept {
    return mode == SplineMode::unique ? "unique" : "general";
}

Json to_json(const ExactCoeffVector& v) {
    Json j;
    j["n"] = v.n;
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    j["kind"] = "exact";
    if (v.dims) {
        j["l"] = v.dims->l;
        j["w"] = v.dims->w;
    }
    return j;
}

Json to_json(const ApproxCoeffVector& v) {
    Json j;
    j["n"] = v.n;
    Json coeffs = Json::array();
    for (double c : v.coeffs) coeffs.push_back(format_real(c));
    j["coeffs"] = std::move(coeffs);
    j["kind"] = "approx";
    j["params"] = {{"s", v.params.s},
                   {"t", v.params.t},
                   {"x1", v.params.x1},
                   {"x2", v.params.x2},
                   {"mode", mode_name(v.params.mode)}};
    return j;
}

Json to_json(const KnownAnchors& a) {
    return Json{{"l", a.dims.l},
                {"w", a.dims.w},
                {"t", a.t},
                {"s", a.s},
                {"N_l", a.n_l.str()},
                {"N_lt", a.n_lt.str()},
                {"Nw_dual", a.nw_dual.str()},
                {"Nws_dual", a.nws_dual.str()}};
}

Json to_json(const SplineModel& m) {
    Json j;
    j["dims"] = {{"l", m.dims.l}, {"w", m.dims.w}, {"n", m.dims.n()}};
    j["anchors"] = to_json(m.anchors);
    j["mode"] = mode_name(m.params.mode);
    j["x1"] = m.params.x1;
    j["x2"] = m.params.x2;
    j["a"] = format_real(m.a);
    j["b"] = format_real(m.b);
    j["c"] = format_real(m.c);
    j["d"] = format_real(m.d);
    j["endpoints"] = {{"N_nw", m.n_nw.str()},
                      {"Nnl_dual", m.n_nl_dual.str()},
                      {"N_nws", m.n_nws.str()},
                      {"Nnlt_dual", m.n_nlt_dual.str()}};
    return j;
}

Json to_json(const BoundsPair& bp) {
    auto vec = [&](const std::vector<BigInt>& v) {
        return to_json(ExactCoeffVector(bp.n, v));
    };
    return Json{{"lb", vec(bp.lb)}, {"ub", vec(bp.ub)}};
}

ExactCoeffVector exact_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind != "exact") throw Error(ErrorCode::bad_input, "expected an exact coefficient vector");
    ExactCoeffVector v;
    v.n = static_cast<std::size_t>(int_field(j, "n"));
    for (const auto& c : field(j, "coeffs")) v.coeffs.push_back(parse_bigint(c, "coefficient"));
    if (j.contains("l") && j.contains("w")) v.dims = HammockDims(int_field(j, "l"), int_field(j, "w"));
    v.validate();
    return v;
}

ApproxCoeffVector approx_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind != "approx") throw Error(ErrorCode::bad_input, "expected an approx coefficient vector");
    ApproxCoeffVector v;
    v.n = static_cast<std::size_t>(int_field(j, "n"));
    for (const auto& c : field(j, "coeffs")) v.coeffs.push_back(parse_real(c));
    if (v.coeffs.size() != v.n + 1) {
        throw Error(ErrorCode::invalid_vector, "coefficient vector length is not n+1");
    }
    if (j.contains("params")) {
        const Json& p = j.at("params");
        v.params.s = int_field(p, "s");
        v.params.t = int_field(p, "t");
        v.params.x1 = int_field(p, "x1");
        v.params.x2 = int_field(p, "x2");
        v.params.mode = field(p, "mode") == "general" ? SplineMode::general : SplineMode::unique;
    }
    return v;
}

KnownAnchors anchors_from_json(const Json& j) {
    KnownAnchors a;
    a.dims = HammockDims(int_field(j, "l"), int_field(j, "w"));
    a.t = j.contains("t") ? int_field(j, "t") : 1;
    a.s = j.contains("s") ? int_field(j, "s") : 1;
    a.n_l = parse_bigint(field(j, "N_l"), "N_l");
    a.n_lt = parse_bigint(field(j, "N_lt"), "N_lt");
    a.nw_dual = parse_bigint(field(j, "Nw_dual"), "Nw_dual");
    a.nws_dual = parse_bigint(field(j, "Nws_dual"), "Nws_dual");
    return a;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::bad_input, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::bad_input, path + ": " + e.what());
    }
}

}  // namespace hamrel
