#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ecoc/instance.hpp"
#include "ecoc/lp.hpp"

namespace ecoc {

// Crown decomposition (I, J, R) of a graph for a given l: the components
// of G[I] all have exactly l vertices, no edge leaves I except into J,
// and component_matching injectively assigns each J-vertex an adjacent
// component of G[I].
struct EcocCrown {
    VertexSet i_set;
    VertexSet j_set;
    VertexSet r_set;
    // (j vertex, vertex set of its matched component), sorted by j.
    std::vector<std::pair<int, VertexSet>> component_matching;
};

enum class RuleId {
    SizeBound = 1,       // instance already within the kernel bound
    SmallComponent = 2,  // component with |C| < l removed, k -= |C|
    ExactComponent = 3,  // component with |C| = l removed, k unchanged
    LpCrown = 4,         // crown from the LP classification removed, k -= |J|
};

struct TraceRecord {
    RuleId rule;
    VertexSet removed;
    long long k_before = 0;
    long long k_after = 0;
    std::optional<EcocCrown> crown;
};

// Outcome of a kernelization run: either the reduced instance or a
// definitive no, plus the ordered record of every rule application.
struct KernelResult {
    std::optional<Instance> kernel;  // nullopt means proven no-instance
    std::vector<TraceRecord> trace;
};

struct KernelizeOptions {
    bool lazy_lp = false;         // separate constraints on demand
    std::ostream* lp_dump = nullptr;  // write each materialized LP here
};

// |V| <= (l+1)k + l - 1, with k clamped at 0 for the comparison. True
// means the instance already is a kernel.
bool rule1_size_check(const Instance& inst);

struct ComponentReduction {
    Instance next;
    RuleId rule;  // SmallComponent or ExactComponent
    VertexSet removed;
};

// Removes a component with |C| < l (budget pays for it), else one with
// |C| = l (free); smallest-min-vertex component first. nullopt when every
// component is larger than l.
std::optional<ComponentReduction> rule23_component_reduction(const Instance& inst);

// Everything the LP route produces, kept around for diagnostics and
// verification: the exact solution, its 0/1 classification, and the
// lifted crown (nullopt when the auxiliary matching saturates the
// component side, which proves a no-instance under the rule-1..3
// preconditions).
struct CrownSearch {
    LpSolution lp;
    VertexClassification classes;
    std::optional<EcocCrown> crown;
};

CrownSearch find_ecoc_crown_via_lp(const Instance& inst, const KernelizeOptions& opts = {});

// (G - (I u J), k - |J|). Throws std::invalid_argument on a crown that
// does not validate against the instance.
Instance apply_crown(const Instance& inst, const EcocCrown& crown);

bool validate_ecoc_crown(const Graph& g, const EcocCrown& crown, int l);

KernelResult kernelize(const Instance& inst, const KernelizeOptions& opts = {});

// Plain-text trace: one record per applied rule, vertices given as the
// external labels of the original instance.
void write_trace(std::ostream& out, const Instance& original, const KernelResult& result);

}  // namespace ecoc
