#include "mpinv/tree_mp.hpp"

#include <algorithm>

namespace mpinv {

namespace {

void require_tree(const Graph& g) {
    if (classify(g).kind != GraphKind::Tree)
        throw wrong_class_error("operation requires a tree");
}

struct TreeTables {
    int n = 0;
    int m = 0;
    std::vector<BfsResult> bfs;              // [root-1]
    std::vector<std::vector<char>> in_head;  // [e-1][v-1]
    std::vector<long long> head_size;
    std::vector<long long> tail_size;
};

TreeTables build_tables(const Graph& t) {
    TreeTables tab;
    tab.n = t.vertex_count();
    tab.m = t.edge_count();
    tab.bfs.reserve(tab.n);
    for (int v = 1; v <= tab.n; ++v) tab.bfs.push_back(bfs_from(t, v));
    tab.in_head.assign(tab.m, std::vector<char>(tab.n, 0));
    tab.head_size.resize(tab.m);
    tab.tail_size.resize(tab.m);
    for (int e = 1; e <= tab.m; ++e) {
        const std::vector<int> head = component_without_edges(t, t.edge(e).v, {e});
        for (int v : head) tab.in_head[e - 1][v - 1] = 1;
        tab.head_size[e - 1] = static_cast<long long>(head.size());
        tab.tail_size[e - 1] = tab.n - tab.head_size[e - 1];
    }
    return tab;
}

int sign_of_parity(long long distance) { return distance % 2 == 0 ? 1 : -1; }

EdgePairSplit pair_split(const Graph& t, int ei, int ej) {
    std::vector<int> skip{ei, ej};
    std::sort(skip.begin(), skip.end());
    const Edge a = t.edge(ei);
    const Edge b = t.edge(ej);
    std::vector<char> assigned(t.vertex_count(), 0);
    EdgePairSplit out;
    for (int x : {a.u, a.v, b.u, b.v}) {
        if (assigned[x - 1]) continue;
        std::vector<int> comp = component_without_edges(t, x, skip);
        for (int v : comp) assigned[v - 1] = 1;
        auto holds = [&comp](int v) {
            return std::binary_search(comp.begin(), comp.end(), v);
        };
        const bool touches_i = holds(a.u) || holds(a.v);
        const bool touches_j = holds(b.u) || holds(b.v);
        if (touches_i && touches_j)
            out.middle = std::move(comp);
        else if (touches_i)
            out.side_i = std::move(comp);
        else
            out.side_j = std::move(comp);
    }
    return out;
}

}  // namespace

EdgeSplitSizes edge_split_sizes(const Graph& tree) {
    require_tree(tree);
    EdgeSplitSizes sizes;
    for (int e = 1; e <= tree.edge_count(); ++e) {
        const TreeSplit split = split_tree_at_edge(tree, e);
        sizes.head_size.push_back(static_cast<int>(split.head.size()));
        sizes.tail_size.push_back(static_cast<int>(split.tail.size()));
    }
    return sizes;
}

IncidentPartition incident_partition(const Graph& tree, int vertex) {
    require_tree(tree);
    IncidentPartition part;
    for (auto [nb, e] : tree.incidences(vertex)) {
        (void)nb;
        // The head component of e contains the larger endpoint, so an
        // endpoint sits in the head exactly when it is that endpoint.
        if (vertex == tree.edge(e).v)
            part.head_edges.push_back(e);
        else
            part.tail_edges.push_back(e);
    }
    std::sort(part.head_edges.begin(), part.head_edges.end());
    std::sort(part.tail_edges.begin(), part.tail_edges.end());
    return part;
}

EdgePairSplit edge_pair_split(const Graph& tree, int ei, int ej) {
    require_tree(tree);
    tree.edge(ei);
    tree.edge(ej);
    if (ei == ej) throw std::invalid_argument("edge_pair_split: edges must be distinct");
    return pair_split(tree, ei, ej);
}

RationalMatrix mp_incidence(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    const int m = tree.edge_count();
    RationalMatrix h(m, n, IndexKind::Edge, IndexKind::Vertex);
    if (m == 0) return h;
    const TreeTables tab = build_tables(tree);
    for (int e = 1; e <= m; ++e) {
        const Edge ed = tree.edge(e);
        for (int j = 1; j <= n; ++j) {
            const int d = std::min(tab.bfs[ed.u - 1].dist[j - 1], tab.bfs[ed.v - 1].dist[j - 1]);
            const long long size =
                tab.in_head[e - 1][j - 1] ? tab.tail_size[e - 1] : tab.head_size[e - 1];
            h(e - 1, j - 1) = make_rational(sign_of_parity(d) * size, n);
        }
    }
    return h;
}

RationalMatrix mp_signless_laplacian(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    RationalMatrix q(n, n, IndexKind::Vertex, IndexKind::Vertex);
    if (n == 1) return q;
    const TreeTables tab = build_tables(tree);
    const long long nn = static_cast<long long>(n) * n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            long long total = 0;
            for (int e = 1; e <= tab.m; ++e) {
                const bool hi = tab.in_head[e - 1][i - 1];
                const bool hj = tab.in_head[e - 1][j - 1];
                if (hi && hj)
                    total += tab.tail_size[e - 1] * tab.tail_size[e - 1];
                else if (!hi && !hj)
                    total += tab.head_size[e - 1] * tab.head_size[e - 1];
            }
            // Walk the unique i-j path through the BFS tree rooted at i.
            const BfsResult& bfs = tab.bfs[i - 1];
            for (int v = j; v != i; v = bfs.parent_vertex[v - 1]) {
                const int e = bfs.parent_edge[v - 1];
                total -= tab.head_size[e - 1] * tab.tail_size[e - 1];
            }
            const int sign = sign_of_parity(bfs.dist[j - 1]);
            q(i - 1, j - 1) = make_rational(sign * total, nn);
            q(j - 1, i - 1) = q(i - 1, j - 1);
        }
    }
    return q;
}

RationalMatrix mp_edge_laplacian(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    const int m = tree.edge_count();
    RationalMatrix s(m, m, IndexKind::Edge, IndexKind::Edge);
    if (m == 0) return s;
    const TreeTables tab = build_tables(tree);
    for (int e = 1; e <= m; ++e)
        s(e - 1, e - 1) = make_rational(tab.head_size[e - 1] * tab.tail_size[e - 1], n);
    for (int i = 1; i <= m; ++i) {
        const Edge a = tree.edge(i);
        for (int j = i + 1; j <= m; ++j) {
            const Edge b = tree.edge(j);
            const int d = std::min({tab.bfs[a.u - 1].dist[b.u - 1], tab.bfs[a.u - 1].dist[b.v - 1],
                                    tab.bfs[a.v - 1].dist[b.u - 1], tab.bfs[a.v - 1].dist[b.v - 1]});
            const EdgePairSplit split = pair_split(tree, i, j);
            const long long product = static_cast<long long>(split.side_i.size()) *
                                      static_cast<long long>(split.side_j.size());
            s(i - 1, j - 1) = make_rational(-sign_of_parity(d) * product, n);
            s(j - 1, i - 1) = s(i - 1, j - 1);
        }
    }
    return s;
}

RationalMatrix tree_mm_plus(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    RationalMatrix out = RationalMatrix::identity(n, IndexKind::Vertex);
    const RationalMatrix parity = parity_matrix(tree);
    const Rational inv_n = make_rational(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) -= inv_n * parity(i, j);
    return out;
}

}  // namespace mpinv
