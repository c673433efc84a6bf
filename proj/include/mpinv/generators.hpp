#pragma once

#include "mpinv/graph.hpp"

#include <cstdint>
#include <vector>

namespace mpinv {

/// Deterministic 64-bit PRNG with the splitmix64 recurrence:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
/// Chosen for reproducibility across platforms and standard library
/// versions; std::mt19937 distributions are not bit-stable between
/// implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform draw from [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Pruefer decoding: code entries in 1..n, length n-2 (empty for n <= 2).
/// Edges appear in decoding order. Bijective with labeled trees, so decoding
/// a uniform code yields a uniform labeled tree.
Graph decode_pruefer(const std::vector<int>& code, int n);

/// Uniform random labeled tree on n >= 1 vertices.
Graph random_tree(int n, std::uint64_t seed);

/// Every labeled tree on n vertices, each exactly once (n^{n-2} of them),
/// in lexicographic order of the Pruefer code. Guarded to n <= 8.
std::vector<Graph> enumerate_trees(int n);

/// Random connected graph with exactly one cycle, of odd length cycle_len
/// (3 <= cycle_len <= n, odd). A random permutation fixes the cycle; the
/// remaining vertices attach uniformly to earlier vertices; the edge order
/// is then shuffled so cycle edges land at arbitrary indices.
Graph random_odd_unicyclic(int n, int cycle_len, std::uint64_t seed);

/// Random connected graph: a random tree plus extra_edges distinct extra
/// edges drawn uniformly from the remaining non-adjacent pairs (fewer when
/// the complement runs out).
Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed);

}  // namespace mpinv
