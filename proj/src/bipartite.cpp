#include "ecoc/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ecoc {

BipartiteGraph::BipartiteGraph(int num_a, int num_b) : num_b_(num_b) {
    if (num_a < 0 || num_b < 0)
        throw std::invalid_argument("bipartite: negative side size");
    adj_.resize(num_a);
}

void BipartiteGraph::add_edge(int a, int b) {
    if (a < 0 || a >= num_a() || b < 0 || b >= num_b_)
        throw std::invalid_argument("bipartite: edge endpoint out of range");
    auto& nbrs = adj_[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b)
        nbrs.insert(it, b);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const BipartiteGraph& g;
    std::vector<int> match_a, match_b, dist;

    explicit HopcroftKarp(const BipartiteGraph& bg)
        : g(bg),
          match_a(bg.num_a(), -1),
          match_b(bg.num_b(), -1),
          dist(bg.num_a()) {}

    bool bfs() {
        std::queue<int> q;
        for (int a = 0; a < g.num_a(); ++a) {
            if (match_a[a] == -1) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = kInf;
            }
        }
        bool found_free_b = false;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : g.neighbors_of_a(a)) {
                int a2 = match_b[b];
                if (a2 == -1) {
                    found_free_b = true;
                } else if (dist[a2] == kInf) {
                    dist[a2] = dist[a] + 1;
                    q.push(a2);
                }
            }
        }
        return found_free_b;
    }

    bool dfs(int a) {
        for (int b : g.neighbors_of_a(a)) {
            int a2 = match_b[b];
            if (a2 == -1 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
                match_a[a] = b;
                match_b[b] = a;
                return true;
            }
        }
        dist[a] = kInf;
        return false;
    }

    Matching run() {
        int size = 0;
        while (bfs()) {
            for (int a = 0; a < g.num_a(); ++a)
                if (match_a[a] == -1 && dfs(a))
                    ++size;
        }
        return Matching{std::move(match_a), std::move(match_b), size};
    }
};

}  // namespace

Matching max_matching(const BipartiteGraph& bg) {
    return HopcroftKarp(bg).run();
}

std::optional<VcCrown> find_vc_crown(const BipartiteGraph& bg) {
    Matching m = max_matching(bg);

    std::vector<int> unsaturated;
    for (int a = 0; a < bg.num_a(); ++a)
        if (m.a_to_b[a] == -1)
            unsaturated.push_back(a);
    if (unsaturated.empty())
        return std::nullopt;

    // Alternating BFS from Z: a-side via non-matching edges, b-side back
    // via its matching edge.
    std::vector<char> a_reached(bg.num_a(), 0), b_reached(bg.num_b(), 0);
    std::queue<int> q;
    for (int a : unsaturated) {
        a_reached[a] = 1;
        q.push(a);
    }
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : bg.neighbors_of_a(a)) {
            if (m.a_to_b[a] == b || b_reached[b])
                continue;
            b_reached[b] = 1;
            int a2 = m.b_to_a[b];
            // A reachable b must be saturated: otherwise the path from Z
            // to b would be augmenting, contradicting maximality.
            if (a2 == -1)
                throw std::logic_error("find_vc_crown: augmenting path past a maximum matching");
            if (!a_reached[a2]) {
                a_reached[a2] = 1;
                q.push(a2);
            }
        }
    }

    VcCrown crown;
    for (int a = 0; a < bg.num_a(); ++a)
        if (a_reached[a])
            crown.i_side.push_back(a);
    for (int b = 0; b < bg.num_b(); ++b) {
        if (b_reached[b]) {
            crown.j_side.push_back(b);
            crown.witness_a.push_back(m.b_to_a[b]);
        }
    }
    return crown;
}

}  // namespace ecoc
