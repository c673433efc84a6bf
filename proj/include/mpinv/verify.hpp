#pragma once

#include "mpinv/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mpinv {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample when failing, empty otherwise
};

struct VerificationReport {
    std::string graph_summary;  // e.g. "tree n=7 m=6"
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t passed_count() const;
};

/// Runs every consistency check that applies to the graph's class: closed
/// forms against the elimination-based oracle, algebraic identities, parity
/// case analyses, and structure recovery. Any connected graph is accepted;
/// graphs that are neither trees nor odd unicyclic get the structural
/// checks only. Throws disconnected_error on disconnected input.
///
/// inject_fault corrupts one entry of the first closed-form matrix before
/// checking, so the comparisons must report a counterexample; it exists to
/// prove the harness can fail.
VerificationReport verify_graph(const Graph& g, bool inject_fault = false);

}  // namespace mpinv
