#pragma once

// Exact ground truth by exhaustive enumeration of device subsets.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamrel/core_poly.hpp"

namespace hamrel {

inline constexpr std::size_t kExhaustiveEdgeCap = 30;

struct TwoTerminalGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // parallel edges allowed
    int source = 0;
    int terminal = 1;

    // Throws Error(bad_graph).
    void validate() const;
};

// Parity of the vertical junction merges in the brick wall.
enum class HammockVariant { brickA, brickB };

std::string_view variant_name(HammockVariant v) noexcept;

// Variant whose rotated brick pattern is the dual of make_hammock(dims, v).
// The parity flips only when l and w are both even; otherwise the two
// variants are mirror images with identical coefficients.
HammockVariant dual_variant(const HammockDims& dims, HammockVariant v) noexcept;

// w wires of l devices; wire ends merged into source and terminal. At interior
// junction column j the junctions of wires i and i+1 are identified when
// (i + j) % 2 matches the variant parity. Identifications are vertex merges,
// so the graph has exactly l*w edges.
TwoTerminalGraph make_hammock(const HammockDims& dims, HammockVariant variant);

// N_k = number of k-edge subsets connecting source to terminal. Subsets are
// walked depth first with a rollback union-find, so each step adds or undoes
// a single edge; once source and terminal meet, every completion of the
// prefix is counted in closed form. Work is split by edge prefix across
// `threads` workers (0 = hardware concurrency). Throws cap_exceeded above
// kExhaustiveEdgeCap edges.
ExactCoeffVector exact_coeffs(const TwoTerminalGraph& g, unsigned threads = 0);

// Convenience: exact_coeffs on make_hammock, tagged with the dimensions.
ExactCoeffVector hammock_coeffs(const HammockDims& dims, HammockVariant variant,
                                unsigned threads = 0);

// Independent cross-check: lists every simple source-terminal path as an edge
// mask and counts subsets containing at least one. Limited to 20 edges.
ExactCoeffVector exact_coeffs_pathsets(const TwoTerminalGraph& g);

struct Conformance {
    std::optional<HammockVariant> variant;
    std::string diagnostic;  // per-variant diff when nothing matches
};

// First variant whose coefficients equal `expected` (brickA tried first).
Conformance conformance_variant(const HammockDims& dims, const ExactCoeffVector& expected,
                                unsigned threads = 0);

// "n_vertices source terminal" then one "u v" per edge; '#' starts a comment.
TwoTerminalGraph parse_graph(std::istream& in);
TwoTerminalGraph load_graph(const std::string& path);

}  // namespace hamrel
