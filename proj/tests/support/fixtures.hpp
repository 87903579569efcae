#pragma once

// Published coefficient tables for the 15- and 25-device hammocks.

#include <cstdint>
#include <vector>

#include "hamrel/core_poly.hpp"

namespace hamrel::fixtures {

// l = 5, w = 3: indices k = 5..12.
inline const std::vector<std::int64_t> kN53 = {21, 194, 782, 1772, 2443, 2114, 1187, 439};
inline const std::vector<std::int64_t> kF53 = {21, 194, 561, 982, 1320, 1434, 1187, 439};
inline const std::vector<std::int64_t> kLB53 = {21, 194, 249, 249, 194, 116, 1187, 439};
inline const std::vector<std::int64_t> kUB53 = {21, 194, 5596, 5596, 4352, 2611, 1187, 439};

// l = w = 5: indices k = 5..20.
inline const std::vector<std::int64_t> kN55 = {
    52,      994,     8983,    50796,   200559,  584302, 1294750, 2220298,
    2980002, 3162650, 2684458, 1842416, 1030779, 471717, 176106,  53078};
inline const std::vector<std::int64_t> kLB55 = {52,    994,   2698,  6070,  11466, 18346,
                                                25018, 29187, 29187, 25018, 18346, 11466,
                                                6070,  2698,  176106, 53078};
inline const std::vector<std::int64_t> kUB55 = {
    52,      994,     478002,  1075504, 2031508, 3250414, 4432382, 5171113,
    5171113, 4432382, 3250414, 2031508, 1075504, 478002,  176106,  53078};
// f_lw(k) for k = 5..20 (s = t = 1).
inline const std::vector<std::int64_t> kF55 = {
    52,     994,    20757,  55084,  99716,  150396, 202866, 252867,
    296143, 328434, 345484, 343034, 316826, 262603, 176106, 53078};

// Full N_0..N_n vector: zeros below l, the table from l to n-w, binomial tail.
inline ExactCoeffVector full_vector(int l, int w, const std::vector<std::int64_t>& table) {
    const int n = l * w;
    std::vector<BigInt> c(n + 1, BigInt(0));
    for (std::size_t i = 0; i < table.size(); ++i) c[l + i] = table[i];
    for (int k = n - w + 1; k <= n; ++k) c[k] = binomial(n, k);
    return ExactCoeffVector(n, std::move(c), HammockDims(l, w));
}

inline ExactCoeffVector hammock53() { return full_vector(5, 3, kN53); }
inline ExactCoeffVector hammock55() { return full_vector(5, 5, kN55); }

}  // namespace hamrel::fixtures
