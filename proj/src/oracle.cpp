#include "ecoc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ecoc {

namespace {

// Bitmask adjacency over the positions of the live vertices.
std::vector<uint32_t> adjacency_masks(const Graph& g) {
    const auto& verts = g.vertices();
    std::vector<int> pos(g.capacity(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        pos[verts[i]] = static_cast<int>(i);
    std::vector<uint32_t> adj(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        for (int u : g.neighbors(verts[i]))
            adj[i] |= uint32_t{1} << pos[u];
    return adj;
}

// True iff every component of the graph restricted to `alive` has exactly
// l vertices.
bool all_components_exact(const std::vector<uint32_t>& adj, uint32_t alive, int l) {
    uint32_t todo = alive;
    while (todo != 0) {
        uint32_t seed = todo & (~todo + 1);
        uint32_t comp = seed, frontier = seed;
        while (frontier != 0) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f != 0) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= adj[v] & alive & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        if (__builtin_popcount(comp) != l)
            return false;
        todo &= ~comp;
    }
    return true;
}

// Visits all size-r subsets of {0..n-1} in lexicographic order.
template <typename F>
bool for_each_subset_of_size(int n, int r, F&& f) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    while (true) {
        if (f(idx))
            return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

OracleAnswer brute_force_ecoc(const Instance& inst) {
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    if (n > 22)
        throw std::invalid_argument("brute_force_ecoc: instance too large (|V| > 22)");

    auto adj = adjacency_masks(g);
    const auto& verts = g.vertices();
    uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

    OracleAnswer ans;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> hit;
        bool found = for_each_subset_of_size(n, size, [&](const std::vector<int>& idx) {
            uint32_t removed = 0;
            for (int i : idx)
                removed |= uint32_t{1} << i;
            if (all_components_exact(adj, full & ~removed, inst.l)) {
                hit = idx;
                return true;
            }
            return false;
        });
        if (found) {
            ans.optimum = size;
            ans.feasible = inst.k >= size;
            VertexSet w;
            for (int i : hit)
                w.push_back(verts[i]);
            ans.witness = std::move(w);
            return ans;
        }
    }
    // Unreachable: deleting every vertex always works.
    throw std::logic_error("brute_force_ecoc: no feasible deletion set found");
}

int brute_force_wecoc_ip(const Graph& g, int l) {
    int n = g.num_vertices();
    if (n > 16)
        throw std::invalid_argument("brute_force_wecoc_ip: instance too large (|V| > 16)");
    if (l < 1)
        throw std::invalid_argument("brute_force_wecoc_ip: l must be >= 1");

    const auto& verts = g.vertices();
    std::vector<int> pos(g.capacity(), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        pos[verts[i]] = static_cast<int>(i);

    std::vector<uint32_t> constraint_masks;
    for (const auto& c : enumerate_connected_sets(g, l + 1)) {
        uint32_t mask = 0;
        for (int v : c)
            mask |= uint32_t{1} << pos[v];
        constraint_masks.push_back(mask);
    }
    if (constraint_masks.empty())
        return 0;

    for (int size = 1; size <= n; ++size) {
        bool found = for_each_subset_of_size(n, size, [&](const std::vector<int>& idx) {
            uint32_t chosen = 0;
            for (int i : idx)
                chosen |= uint32_t{1} << i;
            for (uint32_t cm : constraint_masks)
                if ((cm & chosen) == 0)
                    return false;
            return true;
        });
        if (found)
            return size;
    }
    throw std::logic_error("brute_force_wecoc_ip: no hitting set found");
}

namespace {

int matching_search(const BipartiteGraph& bg, int a, std::vector<char>& b_used) {
    if (a == bg.num_a())
        return 0;
    int best = matching_search(bg, a + 1, b_used);  // leave a unmatched
    for (int b : bg.neighbors_of_a(a)) {
        if (b_used[b])
            continue;
        b_used[b] = 1;
        best = std::max(best, 1 + matching_search(bg, a + 1, b_used));
        b_used[b] = 0;
    }
    return best;
}

}  // namespace

int brute_force_max_matching(const BipartiteGraph& bg) {
    if (bg.num_a() + bg.num_b() > 12)
        throw std::invalid_argument("brute_force_max_matching: graph too large (> 12 vertices)");
    std::vector<char> b_used(bg.num_b(), 0);
    return matching_search(bg, 0, b_used);
}

}  // namespace ecoc
