#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ecoc {

// Sorted, duplicate-free list of vertex ids. Kept canonical so that
// equality of two VertexSets is structural equality.
using VertexSet = std::vector<int>;

using ComponentList = std::vector<VertexSet>;

// Immutable simple undirected graph. Vertex ids are dense 0..n-1 at
// construction; deleting vertices preserves the ids (and labels) of the
// survivors, so ids stay stable across a whole reduction run.
//
// Each vertex carries an external 1-based label for I/O and traces.
class Graph {
public:
    Graph() = default;

    // Builds a graph on vertices 0..n-1 with labels 1..n.
    // Rejects self-loops; duplicate edges collapse into one.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int capacity() const { return static_cast<int>(adj_.size()); }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return num_edges_; }
    bool empty() const { return vertices_.empty(); }

    const VertexSet& vertices() const { return vertices_; }
    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;

    // Sorted list of live neighbors.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int label(int v) const;
    void set_labels(std::vector<int> labels);

    // Returns the graph with the vertices of x deleted; ids of the
    // survivors are preserved. Throws if x is not a subset of V.
    Graph remove_vertices(const VertexSet& x) const;

    bool operator==(const Graph& other) const;

private:
    VertexSet vertices_;                  // live ids, sorted
    std::vector<std::vector<int>> adj_;   // indexed by id, sorted, live only
    std::vector<int> labels_;             // indexed by id
    std::vector<char> present_;           // indexed by id
    int num_edges_ = 0;
};

// --- VertexSet helpers (inputs must be canonical sorted sets) ---

bool is_canonical_set(const VertexSet& x);
bool set_contains(const VertexSet& x, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// --- Operations ---

// Partition of V(g) into connected components, ordered by smallest
// contained vertex id; each component is sorted.
ComponentList connected_components(const Graph& g);

// G - x. Throws std::invalid_argument if x is not a subset of V(g).
Graph remove_vertices(const Graph& g, const VertexSet& x);

// N(x): vertices outside x adjacent to some vertex of x.
// Throws std::invalid_argument if x is not a subset of V(g).
VertexSet neighborhood(const Graph& g, const VertexSet& x);

// Enumerates every vertex set of exactly `size` vertices that induces a
// connected subgraph, each exactly once, in a deterministic order (rooted
// extension anchored at the smallest vertex of each set). The callback
// returns false to stop the enumeration early.
void for_each_connected_set(const Graph& g, int size,
                            const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int size);

}  // namespace ecoc
