#include "mpinv/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mpinv {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return draw % bound;
}

namespace {

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

}  // namespace

Graph decode_pruefer(const std::vector<int>& code, int n) {
    if (n < 1) throw std::invalid_argument("decode_pruefer: n must be at least 1");
    if (n <= 2 ? !code.empty() : static_cast<int>(code.size()) != n - 2)
        throw std::invalid_argument("decode_pruefer: code length must be n-2");
    for (int c : code)
        if (c < 1 || c > n) throw std::invalid_argument("decode_pruefer: entry outside 1..n");
    std::vector<std::pair<int, int>> edges;
    if (n >= 2) {
        std::vector<int> remaining(n, 1);
        for (int c : code) ++remaining[c - 1];
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 1; v <= n; ++v)
            if (remaining[v - 1] == 1) leaves.push(v);
        for (int c : code) {
            const int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, c);
            if (--remaining[c - 1] == 1) leaves.push(c);
        }
        const int a = leaves.top();
        leaves.pop();
        const int b = leaves.top();
        edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> code(std::max(0, n - 2));
    for (int& c : code) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return decode_pruefer(code, n);
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_trees: n must be in 1..8");
    std::vector<Graph> trees;
    if (n <= 2) {
        trees.push_back(decode_pruefer({}, n));
        return trees;
    }
    std::vector<int> code(n - 2, 1);
    while (true) {
        trees.push_back(decode_pruefer(code, n));
        int pos = n - 3;
        while (pos >= 0 && code[pos] == n) code[pos--] = 1;
        if (pos < 0) break;
        ++code[pos];
    }
    return trees;
}

Graph random_odd_unicyclic(int n, int cycle_len, std::uint64_t seed) {
    if (cycle_len < 3 || cycle_len > n)
        throw std::invalid_argument("random_odd_unicyclic: need 3 <= cycle_len <= n");
    if (cycle_len % 2 == 0)
        throw std::invalid_argument("random_odd_unicyclic: cycle length must be odd");
    SplitMix64 rng(seed);
    const std::vector<int> perm = random_permutation(n, rng);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < cycle_len; ++i)
        edges.emplace_back(perm[i], perm[(i + 1) % cycle_len]);
    for (int i = cycle_len; i < n; ++i)
        edges.emplace_back(perm[i], perm[rng.below(static_cast<std::uint64_t>(i))]);
    for (std::size_t i = edges.size() - 1; i > 0; --i)
        std::swap(edges[i], edges[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return build_graph(n, edges);
}

Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
    if (extra_edges < 0)
        throw std::invalid_argument("random_connected_graph: negative edge count");
    const long long available =
        static_cast<long long>(n) * (n - 1) / 2 - std::max(0, n - 1);
    if (extra_edges > available)
        throw std::invalid_argument("random_connected_graph: only " +
                                    std::to_string(available) + " extra edges fit");
    SplitMix64 rng(seed);
    std::vector<int> code(std::max(0, n - 2));
    for (int& c : code) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Graph tree = decode_pruefer(code, n);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
    std::vector<std::pair<int, int>> candidates;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!tree.find_edge(u, v)) candidates.emplace_back(u, v);
    for (int k = 0; k < extra_edges; ++k) {
        const std::size_t pick = rng.below(candidates.size());
        edges.push_back(candidates[pick]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return build_graph(n, edges);
}

}  // namespace mpinv
