#pragma once

#include "mpinv/graph.hpp"
#include "mpinv/matrix.hpp"

namespace mpinv {

/// Two-colorability, checked by BFS over every component.
bool is_bipartite(const Graph& g);

/// The projector M M+ of a connected graph, predicted from structure alone:
/// the identity when some cycle is odd, and I - (1/n) parity_matrix when the
/// graph is bipartite. Throws disconnected_error.
RationalMatrix predicted_mm_plus(const Graph& g);

struct ParityIdentities {
    bool pinv_annihilates_parity = false;  // M+ P = 0
    bool parity_idempotent_scaled = false; // P P = n P
};

/// Checks the two parity-matrix identities of a connected bipartite graph,
/// with M+ taken from the oracle. Throws wrong_class_error when the graph is
/// not bipartite and disconnected_error when not connected.
ParityIdentities verify_parity_identities(const Graph& g);

}  // namespace mpinv
