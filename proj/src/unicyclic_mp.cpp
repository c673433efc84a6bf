#include "mpinv/unicyclic_mp.hpp"

#include <algorithm>

namespace mpinv {

namespace {

void require_odd_unicyclic(const Graph& g) {
    if (classify(g).kind != GraphKind::OddUnicyclic)
        throw wrong_class_error("operation requires an odd unicyclic graph");
}

struct UniTables {
    int n = 0;
    CycleData cycle;
    std::vector<BfsResult> bfs;                   // [root-1]
    std::vector<char> on_cycle_edge;              // [e-1]
    std::vector<std::vector<char>> without_mask;  // [e-1][v-1]; zero on cycle edges
    std::vector<long long> without_size;          // [e-1]; 0 on cycle edges
};

UniTables build_tables(const Graph& g) {
    UniTables tab;
    tab.n = g.vertex_count();
    tab.cycle = find_cycle(g);
    tab.bfs.reserve(tab.n);
    for (int v = 1; v <= tab.n; ++v) tab.bfs.push_back(bfs_from(g, v));
    tab.on_cycle_edge.resize(tab.n, 0);
    tab.without_mask.assign(tab.n, std::vector<char>(tab.n, 0));
    tab.without_size.resize(tab.n, 0);
    const int anchor = tab.cycle.vertices.front();
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (tab.cycle.edge_on_cycle(e)) {
            tab.on_cycle_edge[e - 1] = 1;
            continue;
        }
        // Off-cycle edges are bridges; the cycle stays on the anchor's side.
        const std::vector<int> with = component_without_edges(g, anchor, {e});
        std::vector<char> keep(tab.n, 1);
        for (int v : with) keep[v - 1] = 0;
        tab.without_mask[e - 1] = keep;
        tab.without_size[e - 1] =
            std::count(keep.begin(), keep.end(), static_cast<char>(1));
    }
    return tab;
}

int sign_of_parity(long long distance) { return distance % 2 == 0 ? 1 : -1; }

int edge_vertex_dist(const UniTables& tab, const Graph& g, int e, int j) {
    const Edge ed = g.edge(e);
    return std::min(tab.bfs[ed.u - 1].dist[j - 1], tab.bfs[ed.v - 1].dist[j - 1]);
}

int edge_edge_dist(const UniTables& tab, const Graph& g, int ei, int ej) {
    const Edge b = g.edge(ej);
    return std::min(edge_vertex_dist(tab, g, ei, b.u), edge_vertex_dist(tab, g, ei, b.v));
}

/// Order of the component of G minus {ei, ej} that carries the shorter arc
/// between the two cycle edges. The endpoint pair realizing d(e_i, e_j) is
/// unique because the cycle is odd.
std::vector<int> between_component(const UniTables& tab, const Graph& g, int ei, int ej) {
    const Edge a = g.edge(ei);
    const Edge b = g.edge(ej);
    int best = -1;
    int start = a.u;
    for (int x : {a.u, a.v})
        for (int y : {b.u, b.v}) {
            const int d = tab.bfs[x - 1].dist[y - 1];
            if (best == -1 || d < best) {
                best = d;
                start = x;
            }
        }
    std::vector<int> skip{ei, ej};
    std::sort(skip.begin(), skip.end());
    return component_without_edges(g, start, skip);
}

long long sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    long long count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

OffCycleSplit off_cycle_split(const Graph& g, int e) {
    require_odd_unicyclic(g);
    g.edge(e);
    const CycleData cycle = find_cycle(g);
    OffCycleSplit split;
    if (cycle.edge_on_cycle(e)) {
        for (int v = 1; v <= g.vertex_count(); ++v) split.with_cycle.push_back(v);
        return split;
    }
    split.with_cycle = component_without_edges(g, cycle.vertices.front(), {e});
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : split.with_cycle) seen[v - 1] = 1;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!seen[v - 1]) split.without_cycle.push_back(v);
    return split;
}

CycleEdgePairSplit cycle_edge_pair_split(const Graph& g, int ei, int ej) {
    require_odd_unicyclic(g);
    g.edge(ei);
    g.edge(ej);
    if (ei == ej)
        throw std::invalid_argument("cycle_edge_pair_split: edges must be distinct");
    const UniTables tab = build_tables(g);
    if (!tab.on_cycle_edge[ei - 1] || !tab.on_cycle_edge[ej - 1])
        throw std::invalid_argument("cycle_edge_pair_split: both edges must lie on the cycle");
    return {between_component(tab, g, ei, ej)};
}

RationalMatrix inv_incidence(const Graph& g) {
    require_odd_unicyclic(g);
    const int n = g.vertex_count();
    const UniTables tab = build_tables(g);
    RationalMatrix a(n, n, IndexKind::Edge, IndexKind::Vertex);
    for (int e = 1; e <= n; ++e)
        for (int j = 1; j <= n; ++j) {
            const int sign = sign_of_parity(edge_vertex_dist(tab, g, e, j));
            if (tab.on_cycle_edge[e - 1])
                a(e - 1, j - 1) = make_rational(sign, 2);
            else if (tab.without_mask[e - 1][j - 1])
                a(e - 1, j - 1) = sign;
        }
    return a;
}

RationalMatrix inv_signless_laplacian(const Graph& g) {
    require_odd_unicyclic(g);
    const int n = g.vertex_count();
    const UniTables tab = build_tables(g);
    const long long cycle_len = static_cast<long long>(tab.cycle.vertices.size());
    RationalMatrix q(n, n, IndexKind::Vertex, IndexKind::Vertex);
    for (int i = 1; i <= n; ++i) {
        const VertexProjection& pi = tab.cycle.projection[i - 1];
        for (int j = i; j <= n; ++j) {
            const VertexProjection& pj = tab.cycle.projection[j - 1];
            const long long arc =
                tab.bfs[pi.closest_cycle_vertex - 1].dist[pj.closest_cycle_vertex - 1];
            const long long shared = sorted_intersection_size(pi.path_edges, pj.path_edges);
            const int sign = sign_of_parity(tab.bfs[i - 1].dist[j - 1]);
            q(i - 1, j - 1) = make_rational(sign * (cycle_len - 2 * arc + 4 * shared), 4);
            q(j - 1, i - 1) = q(i - 1, j - 1);
        }
    }
    return q;
}

RationalMatrix inv_edge_laplacian(const Graph& g) {
    require_odd_unicyclic(g);
    const int n = g.vertex_count();
    const UniTables tab = build_tables(g);
    RationalMatrix s(n, n, IndexKind::Edge, IndexKind::Edge);
    for (int e = 1; e <= n; ++e)
        s(e - 1, e - 1) = tab.on_cycle_edge[e - 1] ? make_rational(n, 4)
                                                   : Rational(tab.without_size[e - 1]);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int sign = sign_of_parity(edge_edge_dist(tab, g, i, j));
            const bool ci = tab.on_cycle_edge[i - 1];
            const bool cj = tab.on_cycle_edge[j - 1];
            Rational value;
            if (ci && cj) {
                const long long between =
                    static_cast<long long>(between_component(tab, g, i, j).size());
                value = make_rational(sign * (2 * between - n), 4);
            } else if (!ci && !cj) {
                long long shared_cut = 0;
                for (int v = 1; v <= n; ++v)
                    if (tab.without_mask[i - 1][v - 1] && tab.without_mask[j - 1][v - 1])
                        ++shared_cut;
                value = Rational(-sign * shared_cut);
            } else {
                const long long total = tab.without_size[i - 1] + tab.without_size[j - 1];
                value = make_rational(-sign * total, 2);
            }
            s(i - 1, j - 1) = value;
            s(j - 1, i - 1) = value;
        }
    return s;
}

CycleDiagnostics cycle_diagnostics(const Graph& g, const RationalMatrix& q_inv,
                                   const RationalMatrix& s_inv) {
    require_odd_unicyclic(g);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (q_inv.rows() != n || q_inv.cols() != n || s_inv.rows() != n || s_inv.cols() != n)
        throw dimension_error("cycle_diagnostics: both matrices must be n x n");

    CycleDiagnostics diag;
    Rational q_min = q_inv(0, 0);
    for (std::size_t i = 1; i < n; ++i) q_min = std::min(q_min, q_inv(i, i));
    std::vector<char> on_cycle(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (q_inv(i, i) == q_min) {
            on_cycle[i] = 1;
            diag.cycle_vertices.push_back(static_cast<int>(i) + 1);
        }

    const Rational quarter_n = make_rational(static_cast<long long>(n), 4);
    for (int e = 1; e <= g.edge_count(); ++e) {
        const Edge ed = g.edge(e);
        if (on_cycle[ed.u - 1] && on_cycle[ed.v - 1] && s_inv(e - 1, e - 1) == quarter_n)
            diag.cycle_edges.push_back(e);
    }
    for (int e = 1; e <= g.edge_count(); ++e) {
        const bool is_cycle_edge =
            std::binary_search(diag.cycle_edges.begin(), diag.cycle_edges.end(), e);
        if (!is_cycle_edge && s_inv(e - 1, e - 1) == 1) diag.pendant_edges.push_back(e);
    }
    return diag;
}

bool unicyclic_mm_plus_check(const Graph& g) {
    require_odd_unicyclic(g);
    const RationalMatrix m = incidence_matrix(g);
    const RationalMatrix a = inv_incidence(g);
    const RationalMatrix eye =
        RationalMatrix::identity(static_cast<std::size_t>(g.vertex_count()), IndexKind::Vertex);
    return matmul(m, a) == eye && matmul(a, m) == eye;
}

}  // namespace mpinv
