#pragma once

#include "mpinv/graph.hpp"
#include "mpinv/matrix.hpp"

#include <vector>

namespace mpinv {

// Exact inverses for a connected graph on n vertices with n edges whose
// unique cycle C has odd length. All three matrices M, Q = M M', S = M'M are
// then invertible, and the inverses have closed combinatorial forms. Every
// routine validates the class and throws wrong_class_error otherwise.

/// Deleting an off-cycle edge e (a bridge) leaves the component holding the
/// cycle and the component cut off from it. For an on-cycle edge the graph
/// stays connected: with_cycle is everything, without_cycle empty.
struct OffCycleSplit {
    std::vector<int> with_cycle;
    std::vector<int> without_cycle;
};

OffCycleSplit off_cycle_split(const Graph& g, int e);

/// For two distinct cycle edges, the component of G minus both edges that
/// contains the shortest path between them (the shorter arc; unique since
/// the cycle is odd).
struct CycleEdgePairSplit {
    std::vector<int> between;
};

CycleEdgePairSplit cycle_edge_pair_split(const Graph& g, int ei, int ej);

/// Inverse of the n x n incidence matrix, tagged (Edge, Vertex). Row e_i:
///   on the cycle:          (-1)^{d(j,e_i)} / 2 everywhere;
///   off the cycle:         (-1)^{d(j,e_i)} for j cut off from the cycle by
///                          e_i, and 0 for every other j.
RationalMatrix inv_incidence(const Graph& g);

/// Inverse of Q, tagged (Vertex, Vertex). With i*, j* the closest cycle
/// vertices and P_i, P_j the paths down to them:
///   (-1)^{d(i,j)} / 4 * (|C| - 2 d(i*,j*) + 4 |E(P_i) intersect E(P_j)|).
RationalMatrix inv_signless_laplacian(const Graph& g);

/// Inverse of S, tagged (Edge, Edge). Writing w(e) for the vertex count cut
/// off by an off-cycle edge e (and w(e) = 0 on the cycle):
///   diagonal:   n/4 on the cycle, w(e_i) off it;
///   both off:   -(-1)^{d(e_i,e_j)} |cut(e_i) intersect cut(e_j)|;
///   both on:    (-1)^{d(e_i,e_j)} / 4 * (2 |between(e_i,e_j)| - n);
///   mixed:      -(-1)^{d(e_i,e_j)} / 2 * (w(e_i) + w(e_j)).
RationalMatrix inv_edge_laplacian(const Graph& g);

/// Reads the cycle structure back out of the two inverse matrices alone:
/// cycle vertices minimize the diagonal of Q^-1; cycle edges have diagonal
/// n/4 in S^-1 with both endpoints recovered as cycle vertices; pendant
/// edges have diagonal 1 in S^-1 (ambiguous with cycle edges when n = 4,
/// so recovered cycle edges are excluded).
struct CycleDiagnostics {
    std::vector<int> cycle_vertices;
    std::vector<int> cycle_edges;
    std::vector<int> pendant_edges;
};

CycleDiagnostics cycle_diagnostics(const Graph& g, const RationalMatrix& q_inv,
                                   const RationalMatrix& s_inv);

/// M * inv_incidence and inv_incidence * M are both the identity.
bool unicyclic_mm_plus_check(const Graph& g);

}  // namespace mpinv
