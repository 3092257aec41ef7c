#pragma once

#include <iosfwd>

#include "ecoc/graph.hpp"
#include "ecoc/rational.hpp"

namespace ecoc {

// Covering relaxation over a graph: minimize the total vertex weight
// subject to x(C) >= 1 for every connected set C of size l+1, with
// 0 <= x_v <= 1. Constraints are materialized in full, in enumeration
// order.
struct CoveringLp {
    VertexSet variables;                 // live vertex ids, sorted
    std::vector<VertexSet> constraints;  // each of size l+1, connected
    int l = 1;
};

struct LpSolution {
    VertexSet variables;           // same order as the originating LP
    std::vector<Rational> values;  // parallel to variables, each in [0,1]
    Rational objective;            // exact sum of values

    const Rational& value_of(int v) const;
};

CoveringLp build_wecoc_lp(const Graph& g, int l);

// Exact optimum of the covering LP: simplex over the rationals with
// Bland's anti-cycling rule, working on the dual so the basis stays of
// size |V|. Constraints are activated on demand from the materialized
// list and the final solution is checked against every constraint.
LpSolution solve_lp_exact(const CoveringLp& lp);

// Same LP, but violated connected sets are separated directly from the
// graph instead of from a materialized constraint list. Optional
// performance path; results are optimal but may pick a different optimal
// vertex than the eager route.
LpSolution solve_wecoc_lp_lazy(const Graph& g, int l);

// Exact partition of the solution by value: a_set = {x_v = 0},
// b_set = {x_v = 1}, fractional = the rest.
struct VertexClassification {
    VertexSet a_set;
    VertexSet b_set;
    VertexSet fractional;
};

VertexClassification classify_vertices(const LpSolution& sol);

// Human-readable constraint listing for debugging.
void dump_lp(const CoveringLp& lp, std::ostream& out);

}  // namespace ecoc
