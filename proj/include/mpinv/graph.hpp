#pragma once

#include "mpinv/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpinv {

// Vertices are labeled 1..n and edges 1..m throughout the public API.
// Returned dense containers (distance vectors, matrices) are 0-based:
// slot k corresponds to vertex or edge k+1.

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct self_loop_error final : graph_error {
    self_loop_error(int position, int vertex)
        : graph_error("edge " + std::to_string(position) + " is a self-loop at vertex " +
                      std::to_string(vertex)),
          edge_position(position) {}
    int edge_position;
};

struct duplicate_edge_error final : graph_error {
    duplicate_edge_error(int position, int u, int v)
        : graph_error("edge " + std::to_string(position) + " duplicates {" +
                      std::to_string(u) + "," + std::to_string(v) + "}"),
          edge_position(position) {}
    int edge_position;
};

struct endpoint_range_error final : graph_error {
    endpoint_range_error(int position, int endpoint, int n)
        : graph_error("edge " + std::to_string(position) + " endpoint " +
                      std::to_string(endpoint) + " outside 1.." + std::to_string(n)),
          edge_position(position) {}
    int edge_position;
};

struct disconnected_error : graph_error {
    explicit disconnected_error(int vertex)
        : graph_error("graph is disconnected: vertex " + std::to_string(vertex) +
                      " unreachable"),
          unreachable_vertex(vertex) {}
    int unreachable_vertex;
};

/// An operation was applied to a graph outside its class (e.g. a tree
/// formula to a non-tree).
struct wrong_class_error : graph_error {
    using graph_error::graph_error;
};

/// Undirected edge with endpoints normalized so u < v. The larger endpoint v
/// is the "head" side used by the orientation conventions below.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
};

/// Simple undirected graph. Immutable once built; edge order is the input
/// order and is significant (it fixes matrix row/column indexing).
class Graph {
public:
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// 1-based edge lookup.
    Edge edge(int e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    /// (neighbor, edge id) pairs for a vertex, sorted by neighbor label.
    const std::vector<std::pair<int, int>>& incidences(int v) const;

    int degree(int v) const { return static_cast<int>(incidences(v).size()); }

    /// Edge id joining u and v, if present.
    std::optional<int> find_edge(int u, int v) const;

private:
    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& endpoints);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;       // [v-1]
    std::vector<std::pair<std::pair<int, int>, int>> lookup_; // sorted (u,v) -> edge id
};

/// Validates and builds a graph. Endpoints may come in either order; each
/// edge is normalized to u < v. Throws self_loop_error, endpoint_range_error
/// or duplicate_edge_error naming the 1-based position of the bad edge.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& endpoints);

enum class GraphKind { Tree, OddUnicyclic, Unsupported };

struct GraphClass {
    GraphKind kind = GraphKind::Unsupported;
    std::string detail;  // reason when Unsupported: "disconnected", "even cycle", "m > n"
};

GraphClass classify(const Graph& g);

/// BFS layers, parents and parent edges from a root. Slot k describes vertex
/// k+1; dist is -1 and parents are 0 for unreachable vertices.
struct BfsResult {
    std::vector<int> dist;
    std::vector<int> parent_vertex;
    std::vector<int> parent_edge;
};

/// Neighbors are explored in ascending label order, so the BFS tree is
/// deterministic.
BfsResult bfs_from(const Graph& g, int root);

/// Hop counts from v to every vertex. Throws disconnected_error naming the
/// first unreachable vertex.
std::vector<int> distances_from(const Graph& g, int v);

/// table[i-1][j-1] = d(i, j). Throws disconnected_error.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// d(j, e) = min over the endpoints of e.
int vertex_edge_distance(const Graph& g, int j, int e);

/// d(e, f) = min over endpoint pairs; 0 when the edges share an endpoint.
int edge_edge_distance(const Graph& g, int e, int f);

/// Edge ids on a shortest path between i and j, ascending. In a tree (and in
/// an odd unicyclic graph, where shortest paths are unique) this is the path.
std::vector<int> shortest_path_edges(const Graph& g, int i, int j);

/// Vertices reachable from start once the edges in skip (sorted ids) are
/// deleted; ascending.
std::vector<int> component_without_edges(const Graph& g, int start,
                                         const std::vector<int>& skip);

/// The two components of a tree after deleting edge e. head contains the
/// larger endpoint of e, tail the smaller; both sorted ascending.
struct TreeSplit {
    std::vector<int> head;
    std::vector<int> tail;
};

TreeSplit split_tree_at_edge(const Graph& tree, int e);

/// How a vertex hangs off the cycle of a unicyclic graph.
struct VertexProjection {
    int closest_cycle_vertex = 0;  // the vertex itself when on the cycle
    int dist_to_cycle = 0;
    std::vector<int> path_edges;   // ids on the path down to the cycle, ascending
};

struct CycleData {
    std::vector<int> vertices;     // traversal order, starting at the smallest
                                   // cycle vertex toward its smaller neighbor
    std::vector<int> edges;        // ids of cycle edges, ascending
    std::vector<VertexProjection> projection;  // slot v-1

    bool vertex_on_cycle(int v) const { return projection[v - 1].dist_to_cycle == 0; }
    bool edge_on_cycle(int e) const;
};

/// Requires an odd unicyclic graph (throws wrong_class_error otherwise).
CycleData find_cycle(const Graph& g);

/// Vertex-by-edge 0/1 incidence matrix, tagged (Vertex, Edge).
RationalMatrix incidence_matrix(const Graph& g);

/// n x n matrix with entries (-1)^{d(i,j)}, tagged (Vertex, Vertex).
/// Throws disconnected_error.
RationalMatrix parity_matrix(const Graph& g);

}  // namespace mpinv
