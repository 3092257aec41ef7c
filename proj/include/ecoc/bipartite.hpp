#pragma once

#include <optional>
#include <vector>

namespace ecoc {

// Bipartite graph with two separate index spaces: a-vertices 0..num_a-1
// and b-vertices 0..num_b-1. Adjacency is kept sorted so all algorithms
// are deterministic for a fixed input order.
class BipartiteGraph {
public:
    BipartiteGraph(int num_a, int num_b);

    void add_edge(int a, int b);

    int num_a() const { return static_cast<int>(adj_.size()); }
    int num_b() const { return num_b_; }
    const std::vector<int>& neighbors_of_a(int a) const { return adj_[a]; }

private:
    std::vector<std::vector<int>> adj_;  // a -> sorted b list
    int num_b_ = 0;
};

struct Matching {
    std::vector<int> a_to_b;  // -1 when unmatched
    std::vector<int> b_to_a;
    int size = 0;
};

// Crown (I, J, R) on a bipartite graph: I on the a-side, J on the b-side,
// every edge out of I lands in J, and the witness matches all of J into
// distinct I vertices. The extraction below additionally guarantees
// |i_side| >= |j_side| + 1.
struct VcCrown {
    std::vector<int> i_side;       // sorted a-vertices
    std::vector<int> j_side;       // sorted b-vertices
    std::vector<int> witness_a;    // witness_a[t] = a matched to j_side[t]
};

// Maximum-cardinality matching (Hopcroft-Karp). BFS layers and DFS
// augmentation both scan in ascending vertex order, so the result is
// deterministic.
Matching max_matching(const BipartiteGraph& bg);

// Computes a maximum matching M, takes Z = the unsaturated a-vertices,
// and returns the crown spanned by M-alternating paths from Z, or
// nullopt when the matching saturates the whole a-side.
std::optional<VcCrown> find_vc_crown(const BipartiteGraph& bg);

}  // namespace ecoc
