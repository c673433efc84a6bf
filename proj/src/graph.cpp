#include "mpinv/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace mpinv {

Edge Graph::edge(int e) const {
    if (e < 1 || e > edge_count())
        throw graph_error("edge id " + std::to_string(e) + " outside 1.." +
                          std::to_string(edge_count()));
    return edges_[e - 1];
}

const std::vector<std::pair<int, int>>& Graph::incidences(int v) const {
    if (v < 1 || v > n_)
        throw graph_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    return adj_[v - 1];
}

std::optional<int> Graph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto key = std::make_pair(u, v);
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), key,
                               [](const auto& entry, const auto& k) { return entry.first < k; });
    if (it == lookup_.end() || it->first != key) return std::nullopt;
    return it->second;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& endpoints) {
    if (n < 1) throw graph_error("vertex count must be at least 1");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(endpoints.size());
    g.lookup_.reserve(endpoints.size());
    for (std::size_t k = 0; k < endpoints.size(); ++k) {
        const int position = static_cast<int>(k) + 1;
        auto [a, b] = endpoints[k];
        if (a < 1 || a > n) throw endpoint_range_error(position, a, n);
        if (b < 1 || b > n) throw endpoint_range_error(position, b, n);
        if (a == b) throw self_loop_error(position, a);
        if (a > b) std::swap(a, b);
        g.edges_.push_back(Edge{a, b});
        g.lookup_.emplace_back(std::make_pair(a, b), position);
    }
    std::sort(g.lookup_.begin(), g.lookup_.end());
    for (std::size_t k = 1; k < g.lookup_.size(); ++k)
        if (g.lookup_[k].first == g.lookup_[k - 1].first) {
            auto [u, v] = g.lookup_[k].first;
            throw duplicate_edge_error(std::max(g.lookup_[k].second, g.lookup_[k - 1].second),
                                       u, v);
        }
    for (int e = 1; e <= g.edge_count(); ++e) {
        const Edge ed = g.edges_[e - 1];
        g.adj_[ed.u - 1].emplace_back(ed.v, e);
        g.adj_[ed.v - 1].emplace_back(ed.u, e);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

BfsResult bfs_from(const Graph& g, int root) {
    g.incidences(root);  // range check
    const int n = g.vertex_count();
    BfsResult out{std::vector<int>(n, -1), std::vector<int>(n, 0), std::vector<int>(n, 0)};
    std::deque<int> queue{root};
    out.dist[root - 1] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (auto [nb, e] : g.incidences(v)) {
            if (out.dist[nb - 1] != -1) continue;
            out.dist[nb - 1] = out.dist[v - 1] + 1;
            out.parent_vertex[nb - 1] = v;
            out.parent_edge[nb - 1] = e;
            queue.push_back(nb);
        }
    }
    return out;
}

std::vector<int> distances_from(const Graph& g, int v) {
    BfsResult bfs = bfs_from(g, v);
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (bfs.dist[u - 1] == -1) throw disconnected_error(u);
    return std::move(bfs.dist);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> table;
    table.reserve(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) table.push_back(distances_from(g, v));
    return table;
}

int vertex_edge_distance(const Graph& g, int j, int e) {
    const Edge ed = g.edge(e);
    const std::vector<int> dist = distances_from(g, j);
    return std::min(dist[ed.u - 1], dist[ed.v - 1]);
}

int edge_edge_distance(const Graph& g, int e, int f) {
    const Edge fe = g.edge(f);
    const Edge ee = g.edge(e);
    const std::vector<int> du = distances_from(g, ee.u);
    const std::vector<int> dv = distances_from(g, ee.v);
    return std::min(std::min(du[fe.u - 1], du[fe.v - 1]),
                    std::min(dv[fe.u - 1], dv[fe.v - 1]));
}

std::vector<int> shortest_path_edges(const Graph& g, int i, int j) {
    const BfsResult bfs = bfs_from(g, i);
    g.incidences(j);  // range check
    if (bfs.dist[j - 1] == -1) throw disconnected_error(j);
    std::vector<int> edges;
    for (int v = j; v != i; v = bfs.parent_vertex[v - 1])
        edges.push_back(bfs.parent_edge[v - 1]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<int> component_without_edges(const Graph& g, int start,
                                         const std::vector<int>& skip) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{start};
    seen[start - 1] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (auto [nb, e] : g.incidences(v)) {
            if (std::binary_search(skip.begin(), skip.end(), e)) continue;
            if (seen[nb - 1]) continue;
            seen[nb - 1] = 1;
            queue.push_back(nb);
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (seen[v - 1]) out.push_back(v);
    return out;
}

namespace {

/// Labels of the vertices left after repeatedly deleting degree-1 vertices.
/// For a unicyclic graph this is exactly the cycle; empty for a tree.
std::vector<int> prune_to_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(n);
    std::deque<int> leaves;
    for (int v = 1; v <= n; ++v) {
        degree[v - 1] = g.degree(v);
        if (degree[v - 1] <= 1) leaves.push_back(v);
    }
    std::vector<char> removed(n, 0);
    while (!leaves.empty()) {
        const int v = leaves.front();
        leaves.pop_front();
        if (removed[v - 1]) continue;
        removed[v - 1] = 1;
        for (auto [nb, e] : g.incidences(v)) {
            (void)e;
            if (removed[nb - 1]) continue;
            if (--degree[nb - 1] == 1) leaves.push_back(nb);
        }
    }
    std::vector<int> cycle;
    for (int v = 1; v <= n; ++v)
        if (!removed[v - 1]) cycle.push_back(v);
    return cycle;
}

}  // namespace

GraphClass classify(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const BfsResult bfs = bfs_from(g, 1);
    for (int v = 1; v <= n; ++v)
        if (bfs.dist[v - 1] == -1) return {GraphKind::Unsupported, "disconnected"};
    if (m == n - 1) return {GraphKind::Tree, ""};
    if (m > n) return {GraphKind::Unsupported, "m > n"};
    // Connected with m == n: exactly one cycle.
    if (prune_to_cycle(g).size() % 2 == 0) return {GraphKind::Unsupported, "even cycle"};
    return {GraphKind::OddUnicyclic, ""};
}

bool CycleData::edge_on_cycle(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

CycleData find_cycle(const Graph& g) {
    if (classify(g).kind != GraphKind::OddUnicyclic)
        throw wrong_class_error("find_cycle: graph is not odd unicyclic");
    const int n = g.vertex_count();
    const std::vector<int> on_cycle = prune_to_cycle(g);
    std::vector<char> is_cycle(n, 0);
    for (int v : on_cycle) is_cycle[v - 1] = 1;

    CycleData data;
    // Canonical traversal: start at the smallest cycle vertex, step toward
    // its smaller cycle neighbor.
    const int start = on_cycle.front();
    int prev = start;
    int cur = 0;
    for (auto [nb, e] : g.incidences(start)) {
        (void)e;
        if (is_cycle[nb - 1]) {
            cur = nb;  // incidences are sorted, first hit is the smaller
            break;
        }
    }
    data.vertices.push_back(start);
    while (cur != start) {
        data.vertices.push_back(cur);
        for (auto [nb, e] : g.incidences(cur)) {
            (void)e;
            if (is_cycle[nb - 1] && nb != prev) {
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    const std::size_t len = data.vertices.size();
    for (std::size_t k = 0; k < len; ++k) {
        const int a = data.vertices[k];
        const int b = data.vertices[(k + 1) % len];
        data.edges.push_back(*g.find_edge(a, b));
    }
    std::sort(data.edges.begin(), data.edges.end());

    // Multi-source BFS from the cycle assigns every vertex its entry point.
    data.projection.resize(n);
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (int v : on_cycle) {
        dist[v - 1] = 0;
        data.projection[v - 1] = {v, 0, {}};
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (auto [nb, e] : g.incidences(v)) {
            if (dist[nb - 1] != -1) continue;
            dist[nb - 1] = dist[v - 1] + 1;
            VertexProjection& proj = data.projection[nb - 1];
            proj = data.projection[v - 1];
            proj.dist_to_cycle = dist[nb - 1];
            proj.path_edges.push_back(e);
            queue.push_back(nb);
        }
    }
    for (auto& proj : data.projection)
        std::sort(proj.path_edges.begin(), proj.path_edges.end());
    return data;
}

TreeSplit split_tree_at_edge(const Graph& tree, int e) {
    if (classify(tree).kind != GraphKind::Tree)
        throw wrong_class_error("split_tree_at_edge: graph is not a tree");
    const Edge ed = tree.edge(e);
    TreeSplit split;
    split.head = component_without_edges(tree, ed.v, {e});
    std::vector<char> in_head(tree.vertex_count(), 0);
    for (int v : split.head) in_head[v - 1] = 1;
    for (int v = 1; v <= tree.vertex_count(); ++v)
        if (!in_head[v - 1]) split.tail.push_back(v);
    return split;
}

RationalMatrix incidence_matrix(const Graph& g) {
    RationalMatrix m(g.vertex_count(), g.edge_count(), IndexKind::Vertex, IndexKind::Edge);
    for (int e = 1; e <= g.edge_count(); ++e) {
        const Edge ed = g.edge(e);
        m(ed.u - 1, e - 1) = 1;
        m(ed.v - 1, e - 1) = 1;
    }
    return m;
}

RationalMatrix parity_matrix(const Graph& g) {
    const int n = g.vertex_count();
    RationalMatrix p(n, n, IndexKind::Vertex, IndexKind::Vertex);
    for (int i = 1; i <= n; ++i) {
        const std::vector<int> dist = distances_from(g, i);
        for (int j = 1; j <= n; ++j) p(i - 1, j - 1) = dist[j - 1] % 2 == 0 ? 1 : -1;
    }
    return p;
}

}  // namespace mpinv
