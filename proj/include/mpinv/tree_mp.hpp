#pragma once

#include "mpinv/graph.hpp"
#include "mpinv/matrix.hpp"

#include <vector>

namespace mpinv {

// Closed-form Moore-Penrose inverses for a tree T on n vertices with edges
// e_1..e_{n-1}. Every routine validates the class first and throws
// wrong_class_error on non-trees. Conventions: deleting e splits T into the
// head component (containing the larger endpoint of e) and the tail
// component; all signs are parities of hop distances.

/// head_size[e-1] and tail_size[e-1] are the component orders after deleting
/// edge e; they sum to n.
struct EdgeSplitSizes {
    std::vector<int> head_size;
    std::vector<int> tail_size;
};

EdgeSplitSizes edge_split_sizes(const Graph& tree);

/// Edges incident to one vertex, split by which side of themselves the
/// vertex lies on: head_edges hold the vertex in their head component.
/// Both lists ascending; together they are all edges at the vertex.
struct IncidentPartition {
    std::vector<int> head_edges;
    std::vector<int> tail_edges;
};

IncidentPartition incident_partition(const Graph& tree, int vertex);

/// Deleting two distinct edges leaves three components: middle touches both
/// edges, side_i only e_i, side_j only e_j. Vertex lists ascending.
struct EdgePairSplit {
    std::vector<int> middle;
    std::vector<int> side_i;
    std::vector<int> side_j;
};

EdgePairSplit edge_pair_split(const Graph& tree, int ei, int ej);

/// Moore-Penrose inverse H of the incidence matrix, (n-1) x n, tagged
/// (Edge, Vertex):
///   h[e][j] = (-1)^{d(j,e)} / n * (tail size of e if j lies in the head
///             component, else head size).
/// For n = 1 the result is the empty 0 x 1 matrix.
RationalMatrix mp_incidence(const Graph& tree);

/// Moore-Penrose inverse of Q = M M', n x n, tagged (Vertex, Vertex).
/// Entry (i,j) is (-1)^{d(i,j)} / n^2 times
///   sum of tail(e)^2 over edges with both i,j in head(e)
/// + sum of head(e)^2 over edges with both i,j in tail(e)
/// - sum of head(e)*tail(e) over edges on the i-j path.
RationalMatrix mp_signless_laplacian(const Graph& tree);

/// Moore-Penrose inverse of S = M'M, (n-1) x (n-1), tagged (Edge, Edge).
/// Diagonal: head(e)*tail(e)/n. Off-diagonal (i,j):
///   -(-1)^{d(e_i,e_j)} / n * |side_i| * |side_j| from edge_pair_split.
RationalMatrix mp_edge_laplacian(const Graph& tree);

/// M H = I - (1/n) * parity_matrix, the projector onto the column space of M.
RationalMatrix tree_mm_plus(const Graph& tree);

}  // namespace mpinv
