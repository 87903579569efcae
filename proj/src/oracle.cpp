#include "hamrel/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "hamrel/error.hpp"

namespace hamrel {

namespace {

// Union by size without path compression, so unions can be undone in LIFO order.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            history_.push_back(-1);
            return;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
    }

    void rollback() {
        const int b = history_.back();
        history_.pop_back();
        if (b < 0) return;
        const int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

using Counts = std::vector<std::uint64_t>;

std::vector<Counts> pascal(std::size_t n) {
    std::vector<Counts> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

class SubsetCounter {
public:
    SubsetCounter(const TwoTerminalGraph& g, const std::vector<Counts>& choose)
        : g_(g), choose_(choose), uf_(g.vertex_count), counts_(g.edges.size() + 1, 0) {}

    // Enumerates completions of the subset fixed by the first `depth` edges.
    void run_prefix(std::size_t depth, std::uint64_t prefix) {
        std::size_t chosen = 0;
        for (std::size_t i = 0; i < depth; ++i) {
            if ((prefix >> i) & 1U) {
                uf_.unite(g_.edges[i].first, g_.edges[i].second);
                ++chosen;
            }
        }
        walk(depth, chosen);
        for (std::size_t i = 0; i < depth; ++i) {
            if ((prefix >> i) & 1U) uf_.rollback();
        }
    }

    const Counts& counts() const { return counts_; }

private:
    void walk(std::size_t next, std::size_t chosen) {
        const std::size_t n = g_.edges.size();
        if (uf_.same(g_.source, g_.terminal)) {
            const std::size_t rest = n - next;
            for (std::size_t j = 0; j <= rest; ++j) counts_[chosen + j] += choose_[rest][j];
            return;
        }
        if (next == n) return;
        walk(next + 1, chosen);
        uf_.unite(g_.edges[next].first, g_.edges[next].second);
        walk(next + 1, chosen + 1);
        uf_.rollback();
    }

    const TwoTerminalGraph& g_;
    const std::vector<Counts>& choose_;
    RollbackUnionFind uf_;
    Counts counts_;
};

ExactCoeffVector to_vector(const Counts& counts) {
    std::vector<BigInt> coeffs(counts.begin(), counts.end());
    return ExactCoeffVector(counts.size() - 1, std::move(coeffs));
}

}  // namespace

std::string_view variant_name(HammockVariant v) noexcept {
    return v == HammockVariant::brickA ? "brickA" : "brickB";
}

HammockVariant dual_variant(const HammockDims& dims, HammockVariant v) noexcept {
    if (dims.l % 2 != 0 || dims.w % 2 != 0) return v;
    return v == HammockVariant::brickA ? HammockVariant::brickB : HammockVariant::brickA;
}

void TwoTerminalGraph::validate() const {
    if (vertex_count < 2) throw Error(ErrorCode::bad_graph, "graph needs at least 2 vertices");
    auto in_range = [&](int v) { return v >= 0 && v < vertex_count; };
    if (!in_range(source) || !in_range(terminal)) {
        throw Error(ErrorCode::bad_graph, "source or terminal out of range");
    }
    if (source == terminal) throw Error(ErrorCode::bad_graph, "source equals terminal");
    for (const auto& [u, v] : edges) {
        if (!in_range(u) || !in_range(v)) {
            throw Error(ErrorCode::bad_graph, "edge (" + std::to_string(u) + ", " +
                                                  std::to_string(v) + ") out of range");
        }
    }
}

TwoTerminalGraph make_hammock(const HammockDims& dims, HammockVariant variant) {
    const int l = dims.l;
    const int w = dims.w;
    const int parity = variant == HammockVariant::brickA ? 0 : 1;
    const int cols = l + 1;
    auto id = [cols](int row, int col) { return row * cols + col; };

    std::vector<int> parent(static_cast<std::size_t>(w * cols));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : (parent[x] = find(parent[x]));
    };
    auto merge = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int i = 1; i < w; ++i) {
        merge(id(i, 0), id(0, 0));
        merge(id(i, l), id(0, l));
    }
    for (int j = 1; j < l; ++j) {
        for (int i = 0; i + 1 < w; ++i) {
            if ((i + j) % 2 == parity) merge(id(i, j), id(i + 1, j));
        }
    }

    // Relabel roots densely in column-major order so the source is vertex 0.
    std::vector<int> label(parent.size(), -1);
    int next = 0;
    auto vertex = [&](int row, int col) {
        int& lab = label[find(id(row, col))];
        if (lab < 0) lab = next++;
        return lab;
    };
    TwoTerminalGraph g;
    g.source = vertex(0, 0);
    for (int j = 1; j <= l; ++j) {
        for (int i = 0; i < w; ++i) vertex(i, j);
    }
    g.terminal = vertex(0, l);
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < l; ++j) g.edges.emplace_back(vertex(i, j), vertex(i, j + 1));
    }
    g.vertex_count = next;
    return g;
}

ExactCoeffVector exact_coeffs(const TwoTerminalGraph& g, unsigned threads) {
    g.validate();
    const std::size_t n = g.edges.size();
    if (n > kExhaustiveEdgeCap) {
        throw Error(ErrorCode::cap_exceeded,
                    std::to_string(n) + " edges exceeds the exhaustive cap of " +
                        std::to_string(kExhaustiveEdgeCap) +
                        "; supply a fixture table instead");
    }
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

    const auto choose = pascal(n);
    // Enough prefixes to balance load; the result does not depend on the split.
    const std::size_t depth = std::min<std::size_t>(n, 8);
    const std::uint64_t prefixes = std::uint64_t{1} << depth;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, prefixes));

    std::atomic<std::uint64_t> next{0};
    std::vector<Counts> partial(workers);
    auto work = [&](unsigned slot) {
        SubsetCounter counter(g, choose);
        for (std::uint64_t p = next++; p < prefixes; p = next++) counter.run_prefix(depth, p);
        partial[slot] = counter.counts();
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work, i);
    }

    Counts total(n + 1, 0);
    for (const auto& part : partial) {
        for (std::size_t k = 0; k <= n; ++k) total[k] += part[k];
    }
    return to_vector(total);
}

ExactCoeffVector hammock_coeffs(const HammockDims& dims, HammockVariant variant,
                                unsigned threads) {
    ExactCoeffVector v = exact_coeffs(make_hammock(dims, variant), threads);
    v.dims = dims;
    return v;
}

ExactCoeffVector exact_coeffs_pathsets(const TwoTerminalGraph& g) {
    g.validate();
    const std::size_t n = g.edges.size();
    if (n > 20) {
        throw Error(ErrorCode::cap_exceeded, "path-set enumeration is limited to 20 edges");
    }

    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);  // (neighbour, edge)
    for (std::size_t e = 0; e < n; ++e) {
        const auto [u, v] = g.edges[e];
        adj[u].emplace_back(v, static_cast<int>(e));
        if (u != v) adj[v].emplace_back(u, static_cast<int>(e));
    }

    std::vector<std::uint32_t> paths;
    std::vector<bool> on_path(g.vertex_count, false);
    std::function<void(int, std::uint32_t)> extend = [&](int v, std::uint32_t mask) {
        if (v == g.terminal) {
            paths.push_back(mask);
            return;
        }
        on_path[v] = true;
        for (const auto& [u, e] : adj[v]) {
            if (!on_path[u]) extend(u, mask | (std::uint32_t{1} << e));
        }
        on_path[v] = false;
    };
    extend(g.source, 0);

    Counts counts(n + 1, 0);
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t subset = 0; subset < total; ++subset) {
        const bool connects = std::any_of(paths.begin(), paths.end(),
                                          [&](std::uint32_t p) { return (p & subset) == p; });
        if (connects) ++counts[static_cast<std::size_t>(std::popcount(subset))];
    }
    return to_vector(counts);
}

Conformance conformance_variant(const HammockDims& dims, const ExactCoeffVector& expected,
                                unsigned threads) {
    Conformance out;
    std::ostringstream diag;
    for (auto variant : {HammockVariant::brickA, HammockVariant::brickB}) {
        const auto got = hammock_coeffs(dims, variant, threads);
        if (got.coeffs == expected.coeffs) {
            out.variant = variant;
            out.diagnostic.clear();
            return out;
        }
        diag << variant_name(variant) << ':';
        const std::size_t len = std::max(got.coeffs.size(), expected.coeffs.size());
        for (std::size_t k = 0; k < len; ++k) {
            const BigInt g = k < got.coeffs.size() ? got.coeffs[k] : BigInt(-1);
            const BigInt e = k < expected.coeffs.size() ? expected.coeffs[k] : BigInt(-1);
            if (g != e) diag << " N_" << k << " got " << g << " expected " << e << ';';
        }
        diag << '\n';
    }
    out.diagnostic = diag.str();
    return out;
}

TwoTerminalGraph parse_graph(std::istream& in) {
    TwoTerminalGraph g;
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string probe;
        if (!(fields >> probe)) continue;
        fields.clear();
        fields.str(line);

        auto fail = [&] {
            throw Error(ErrorCode::bad_graph, "malformed line " + std::to_string(lineno));
        };
        if (!have_header) {
            if (!(fields >> g.vertex_count >> g.source >> g.terminal)) fail();
            have_header = true;
        } else {
            int u = 0;
            int v = 0;
            if (!(fields >> u >> v)) fail();
            g.edges.emplace_back(u, v);
        }
        std::string extra;
        if (fields >> extra) fail();
    }
    if (!have_header) throw Error(ErrorCode::bad_graph, "missing header line");
    g.validate();
    return g;
}

TwoTerminalGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::bad_graph, "cannot open graph file " + path);
    return parse_graph(in);
}

}  // namespace hamrel
