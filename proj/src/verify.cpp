#include "mpinv/verify.hpp"

#include "mpinv/bipartite.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/tree_mp.hpp"
#include "mpinv/unicyclic_mp.hpp"

#include <algorithm>
#include <sstream>

namespace mpinv {

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::size_t VerificationReport::passed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.pass; }));
}

namespace {

void add_check(VerificationReport& report, std::string name, bool pass,
               std::string detail = "") {
    report.checks.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
}

void check_matrices(VerificationReport& report, std::string name, const RationalMatrix& got,
                    const RationalMatrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        std::ostringstream detail;
        detail << "shape " << got.rows() << 'x' << got.cols() << " vs " << want.rows() << 'x'
               << want.cols();
        add_check(report, std::move(name), false, detail.str());
        return;
    }
    const auto diff = first_difference(got, want);
    if (!diff) {
        add_check(report, std::move(name), true);
        return;
    }
    std::ostringstream detail;
    detail << "first mismatch at (" << diff->first + 1 << ',' << diff->second + 1 << "): got "
           << got(diff->first, diff->second) << ", want " << want(diff->first, diff->second);
    add_check(report, std::move(name), false, detail.str());
}

void check_penrose(VerificationReport& report, std::string name, const RationalMatrix& a,
                   const RationalMatrix& x) {
    const PenroseReport penrose = penrose_check(a, x);
    if (penrose.all_satisfied()) {
        add_check(report, std::move(name), true);
        return;
    }
    std::ostringstream detail;
    detail << penrose.first_failure->equation << " fails at ("
           << penrose.first_failure->row + 1 << ',' << penrose.first_failure->col + 1 << ')';
    add_check(report, std::move(name), false, detail.str());
}

int edge_dist(const std::vector<BfsResult>& bfs, const Edge& e, int v) {
    return std::min(bfs[e.u - 1].dist[v - 1], bfs[e.v - 1].dist[v - 1]);
}

int edge_pair_dist(const std::vector<BfsResult>& bfs, const Edge& a, const Edge& b) {
    return std::min(edge_dist(bfs, a, b.u), edge_dist(bfs, a, b.v));
}

std::vector<int> path_from(const BfsResult& bfs, int i, int j) {
    std::vector<int> edges;
    for (int v = j; v != i; v = bfs.parent_vertex[v - 1])
        edges.push_back(bfs.parent_edge[v - 1]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<BfsResult> all_bfs(const Graph& g) {
    std::vector<BfsResult> bfs;
    bfs.reserve(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) bfs.push_back(bfs_from(g, v));
    return bfs;
}

void run_tree_suite(const Graph& g, bool inject_fault, VerificationReport& report) {
    const int n = g.vertex_count();
    const int m = g.edge_count();

    const RationalMatrix inc = incidence_matrix(g);
    RationalMatrix h = mp_incidence(g);
    if (inject_fault && h.rows() > 0) h(0, 0) += 1;
    const RationalMatrix oracle = pseudoinverse_oracle(inc);

    check_matrices(report, "incidence-pinv-formula-vs-oracle", h, oracle);
    check_matrices(report, "incidence-pinv-left-identity", matmul(h, inc),
                   RationalMatrix::identity(m, IndexKind::Edge));
    check_matrices(report, "mmplus-product-vs-structure", matmul(inc, h), tree_mm_plus(g));

    const RationalMatrix q = matmul(inc, inc.transposed());
    const RationalMatrix q_pinv = mp_signless_laplacian(g);
    check_matrices(report, "q-pinv-formula-vs-product", q_pinv, matmul(h.transposed(), h));
    check_matrices(report, "q-pinv-formula-vs-oracle", q_pinv, pseudoinverse_oracle(q));

    const RationalMatrix s = matmul(inc.transposed(), inc);
    const RationalMatrix s_pinv = mp_edge_laplacian(g);
    check_matrices(report, "s-pinv-formula-vs-product", s_pinv, matmul(h, h.transposed()));
    check_matrices(report, "s-pinv-formula-vs-oracle", s_pinv, pseudoinverse_oracle(s));

    check_penrose(report, "penrose-incidence", inc, h);
    check_penrose(report, "penrose-q", q, q_pinv);
    check_penrose(report, "penrose-s", s, s_pinv);

    // Every vertex sees each edge from its head or tail side; the opposite
    // component sizes add up to the edge count of the tree.
    {
        const EdgeSplitSizes sizes = edge_split_sizes(g);
        bool ok = true;
        std::string detail;
        for (int v = 1; v <= n && ok; ++v) {
            const IncidentPartition part = incident_partition(g, v);
            long long total = 0;
            for (int e : part.head_edges) total += sizes.tail_size[e - 1];
            for (int e : part.tail_edges) total += sizes.head_size[e - 1];
            if (total != n - 1) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " sums to " + std::to_string(total);
            }
        }
        add_check(report, "spanning-forest-sum", ok, detail);
    }

    const std::vector<BfsResult> bfs = all_bfs(g);
    std::vector<std::vector<char>> in_head(m, std::vector<char>(n, 0));
    for (int e = 1; e <= m; ++e)
        for (int v : component_without_edges(g, g.edge(e).v, {e})) in_head[e - 1][v - 1] = 1;

    // An edge lies on the i-j path exactly when it separates i from j, and
    // the parity of d(e,i) + d(e,j) flips relative to d(i,j) on the path.
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j) {
                const std::vector<int> path = path_from(bfs[i - 1], i, j);
                for (int e = 1; e <= m; ++e) {
                    const bool on_path = std::binary_search(path.begin(), path.end(), e);
                    const bool separates = in_head[e - 1][i - 1] != in_head[e - 1][j - 1];
                    const int parity =
                        (edge_dist(bfs, g.edge(e), i) + edge_dist(bfs, g.edge(e), j) +
                         bfs[i - 1].dist[j - 1]) % 2;
                    const bool parity_ok = on_path ? parity == 1 : parity == 0;
                    if (on_path != separates || !parity_ok) {
                        ok = false;
                        detail = "edge " + std::to_string(e) + ", pair (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")";
                        break;
                    }
                }
            }
        add_check(report, "path-edge-parity", ok, detail);
    }

    // Deleting two edges: vertices in the middle component keep the parity
    // of d(e_i, e_j); vertices beyond either edge flip it.
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= m && ok; ++i)
            for (int j = i + 1; j <= m && ok; ++j) {
                const EdgePairSplit split = edge_pair_split(g, i, j);
                const int base = edge_pair_dist(bfs, g.edge(i), g.edge(j));
                for (int k = 1; k <= n; ++k) {
                    const bool in_middle =
                        std::binary_search(split.middle.begin(), split.middle.end(), k);
                    const int parity = (edge_dist(bfs, g.edge(i), k) +
                                        edge_dist(bfs, g.edge(j), k) + base) % 2;
                    if ((parity == 0) != in_middle) {
                        ok = false;
                        detail = "edges (" + std::to_string(i) + "," + std::to_string(j) +
                                 "), vertex " + std::to_string(k);
                        break;
                    }
                }
            }
        add_check(report, "component-pair-parity", ok, detail);
    }

    const RationalMatrix parity = parity_matrix(g);
    add_check(report, "pinv-parity-annihilation", matmul(h, parity).is_zero(),
              "H * parity has a nonzero entry");
    check_matrices(report, "parity-idempotent-scaled", matmul(parity, parity),
                   Rational(n) * parity);
}

void run_unicyclic_suite(const Graph& g, bool inject_fault, VerificationReport& report) {
    const int n = g.vertex_count();
    const CycleData cycle = find_cycle(g);

    const RationalMatrix inc = incidence_matrix(g);
    RationalMatrix a = inv_incidence(g);
    if (inject_fault) a(0, 0) += 1;
    const RationalMatrix eye = RationalMatrix::identity(n, IndexKind::Vertex);

    check_matrices(report, "incidence-inverse-formula-vs-elimination", a, inverse(inc));
    check_matrices(report, "incidence-inverse-left-identity", matmul(a, inc), eye);
    check_matrices(report, "incidence-inverse-right-identity", matmul(inc, a), eye);

    const RationalMatrix q = matmul(inc, inc.transposed());
    const RationalMatrix q_inv = inv_signless_laplacian(g);
    check_matrices(report, "q-inverse-formula-vs-product", q_inv, matmul(a.transposed(), a));
    check_matrices(report, "q-inverse-formula-vs-elimination", q_inv, inverse(q));

    const RationalMatrix s = matmul(inc.transposed(), inc);
    const RationalMatrix s_inv = inv_edge_laplacian(g);
    check_matrices(report, "s-inverse-formula-vs-product", s_inv, matmul(a, a.transposed()));
    check_matrices(report, "s-inverse-formula-vs-elimination", s_inv, inverse(s));

    check_penrose(report, "penrose-incidence", inc, a);
    check_penrose(report, "penrose-q", q, q_inv);
    check_penrose(report, "penrose-s", s, s_inv);

    const std::vector<BfsResult> bfs = all_bfs(g);
    std::vector<std::vector<char>> cut_mask(n, std::vector<char>(n, 0));
    for (int e = 1; e <= n; ++e) {
        if (cycle.edge_on_cycle(e)) continue;
        for (int v : off_cycle_split(g, e).without_cycle) cut_mask[e - 1][v - 1] = 1;
    }

    // Parity of d(e,i) + d(e,j) against d(i,j): flips for cycle edges on the
    // i-j path, holds off the path, and holds for a bridge lying on both
    // projection paths (equivalently, one cutting off both i and j).
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j) {
                const std::vector<int> path = path_from(bfs[i - 1], i, j);
                for (int e = 1; e <= n; ++e) {
                    const int parity = (edge_dist(bfs, g.edge(e), i) +
                                        edge_dist(bfs, g.edge(e), j) +
                                        bfs[i - 1].dist[j - 1]) % 2;
                    bool claim_ok = true;
                    if (cycle.edge_on_cycle(e)) {
                        const bool on_path = std::binary_search(path.begin(), path.end(), e);
                        claim_ok = on_path ? parity == 1 : parity == 0;
                    } else {
                        const bool cuts_both = cut_mask[e - 1][i - 1] && cut_mask[e - 1][j - 1];
                        const auto& pi = cycle.projection[i - 1].path_edges;
                        const auto& pj = cycle.projection[j - 1].path_edges;
                        const bool on_both_projections =
                            std::binary_search(pi.begin(), pi.end(), e) &&
                            std::binary_search(pj.begin(), pj.end(), e);
                        claim_ok = cuts_both == on_both_projections &&
                                   (!cuts_both || parity == 0);
                    }
                    if (!claim_ok) {
                        ok = false;
                        detail = "edge " + std::to_string(e) + ", pair (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")";
                        break;
                    }
                }
            }
        add_check(report, "cycle-path-parity", ok, detail);
    }

    // Parity of d(e_i,k) + d(e_j,k) against d(e_i,e_j), by edge pair type.
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j) {
                const bool ci = cycle.edge_on_cycle(i);
                const bool cj = cycle.edge_on_cycle(j);
                const int base = edge_pair_dist(bfs, g.edge(i), g.edge(j));
                std::vector<char> in_between;
                if (ci && cj) {
                    in_between.assign(n, 0);
                    for (int v : cycle_edge_pair_split(g, i, j).between)
                        in_between[v - 1] = 1;
                }
                for (int k = 1; k <= n; ++k) {
                    const int parity = (edge_dist(bfs, g.edge(i), k) +
                                        edge_dist(bfs, g.edge(j), k) + base) % 2;
                    bool claim_ok = true;
                    if (ci && cj)
                        claim_ok = (parity == 0) == static_cast<bool>(in_between[k - 1]);
                    else if (!ci && !cj)
                        claim_ok = !(cut_mask[i - 1][k - 1] && cut_mask[j - 1][k - 1]) ||
                                   parity == 1;
                    else {
                        const int bridge = ci ? j : i;
                        claim_ok = !cut_mask[bridge - 1][k - 1] || parity == 1;
                    }
                    if (!claim_ok) {
                        ok = false;
                        detail = "edges (" + std::to_string(i) + "," + std::to_string(j) +
                                 "), vertex " + std::to_string(k);
                        break;
                    }
                }
            }
        add_check(report, "edge-pair-parity", ok, detail);
    }

    // Structure recovery from the inverses alone.
    {
        const CycleDiagnostics diag = cycle_diagnostics(g, q_inv, s_inv);
        std::vector<int> true_vertices;
        for (int v = 1; v <= n; ++v)
            if (cycle.vertex_on_cycle(v)) true_vertices.push_back(v);
        add_check(report, "diag-cycle-vertices", diag.cycle_vertices == true_vertices,
                  "recovered cycle vertices differ");
        add_check(report, "diag-cycle-edges", diag.cycle_edges == cycle.edges,
                  "recovered cycle edges differ");
        if (n == 4) {
            add_check(report, "diag-pendant-edges", true);
        } else {
            std::vector<int> true_pendants;
            for (int e = 1; e <= n; ++e) {
                const Edge ed = g.edge(e);
                if (g.degree(ed.u) == 1 || g.degree(ed.v) == 1) true_pendants.push_back(e);
            }
            add_check(report, "diag-pendant-edges", diag.pendant_edges == true_pendants,
                      "recovered pendant edges differ");
        }
    }
}

void run_structure_suite(const Graph& g, bool inject_fault, VerificationReport& report) {
    const int n = g.vertex_count();
    const RationalMatrix inc = incidence_matrix(g);
    RationalMatrix pinv = pseudoinverse_oracle(inc);
    if (inject_fault && pinv.rows() > 0) pinv(0, 0) += 1;

    check_matrices(report, "mmplus-structure-vs-oracle", matmul(inc, pinv),
                   predicted_mm_plus(g));
    const bool bip = is_bipartite(g);
    const std::size_t r = rank(inc);
    add_check(report, "incidence-rank-bipartite",
              r == static_cast<std::size_t>(bip ? n - 1 : n),
              "rank " + std::to_string(r) + " with n=" + std::to_string(n) +
                  (bip ? " (bipartite)" : " (odd cycle)"));
    check_penrose(report, "penrose-incidence", inc, pinv);
    if (bip) {
        const RationalMatrix parity = parity_matrix(g);
        add_check(report, "pinv-parity-annihilation", matmul(pinv, parity).is_zero(),
                  "M+ * parity has a nonzero entry");
        check_matrices(report, "parity-idempotent-scaled", matmul(parity, parity),
                       Rational(n) * parity);
    }
}

}  // namespace

VerificationReport verify_graph(const Graph& g, bool inject_fault) {
    const GraphClass cls = classify(g);
    if (cls.kind == GraphKind::Unsupported && cls.detail == "disconnected") {
        distances_from(g, 1);  // throws disconnected_error naming a vertex
    }
    VerificationReport report;
    std::ostringstream summary;
    switch (cls.kind) {
        case GraphKind::Tree:
            summary << "tree n=" << g.vertex_count() << " m=" << g.edge_count();
            report.graph_summary = summary.str();
            run_tree_suite(g, inject_fault, report);
            break;
        case GraphKind::OddUnicyclic:
            summary << "odd-unicyclic n=" << g.vertex_count()
                    << " cycle=" << find_cycle(g).vertices.size();
            report.graph_summary = summary.str();
            run_unicyclic_suite(g, inject_fault, report);
            break;
        case GraphKind::Unsupported:
            summary << "other n=" << g.vertex_count() << " m=" << g.edge_count() << " ("
                    << cls.detail << ")";
            report.graph_summary = summary.str();
            run_structure_suite(g, inject_fault, report);
            break;
    }
    return report;
}

}  // namespace mpinv
