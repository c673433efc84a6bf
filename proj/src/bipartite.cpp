#include "mpinv/bipartite.hpp"

#include "mpinv/linalg.hpp"

#include <deque>

namespace mpinv {

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 1; root <= n; ++root) {
        if (color[root - 1] != -1) continue;
        color[root - 1] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (auto [nb, e] : g.incidences(v)) {
                (void)e;
                if (color[nb - 1] == -1) {
                    color[nb - 1] = 1 - color[v - 1];
                    queue.push_back(nb);
                } else if (color[nb - 1] == color[v - 1]) {
                    return false;
                }
            }
        }
    }
    return true;
}

RationalMatrix predicted_mm_plus(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_bipartite(g)) {
        // Connectivity still has to hold for the prediction to make sense.
        distances_from(g, 1);
        return RationalMatrix::identity(n, IndexKind::Vertex);
    }
    const RationalMatrix parity = parity_matrix(g);  // throws when disconnected
    RationalMatrix out = RationalMatrix::identity(n, IndexKind::Vertex);
    const Rational inv_n = make_rational(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) -= inv_n * parity(i, j);
    return out;
}

ParityIdentities verify_parity_identities(const Graph& g) {
    if (!is_bipartite(g))
        throw wrong_class_error("parity identities require a bipartite graph");
    const RationalMatrix parity = parity_matrix(g);  // throws when disconnected
    const RationalMatrix pinv = pseudoinverse_oracle(incidence_matrix(g));
    ParityIdentities out;
    out.pinv_annihilates_parity = matmul(pinv, parity).is_zero();
    out.parity_idempotent_scaled =
        matmul(parity, parity) == Rational(g.vertex_count()) * parity;
    return out;
}

}  // namespace mpinv
