#pragma once

#include <optional>

#include "ecoc/bipartite.hpp"
#include "ecoc/instance.hpp"

namespace ecoc {

// Ground truth from exhaustive search. Test-only code paths, guarded by
// hard size limits; never part of the kernelization itself.
struct OracleAnswer {
    bool feasible = false;                // a solution of size <= k exists
    std::optional<int> optimum;           // minimum deletion count over all budgets
    std::optional<VertexSet> witness;     // a minimum solution
};

// Exhaustive l-ECOC solver: searches subsets in increasing size order, so
// optimum and witness are exact (deleting all of V is always feasible).
// Throws std::invalid_argument when |V| > 22.
OracleAnswer brute_force_ecoc(const Instance& inst);

// Minimum-size vertex set hitting every connected (l+1)-set.
// Throws std::invalid_argument when |V| > 16.
int brute_force_wecoc_ip(const Graph& g, int l);

// Exact maximum matching size by exhaustive search.
// Throws std::invalid_argument when the graph has more than 12 vertices.
int brute_force_max_matching(const BipartiteGraph& bg);

}  // namespace ecoc
