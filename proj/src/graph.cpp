#include "ecoc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecoc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.adj_.resize(n);
    g.present_.assign(n, 1);
    g.labels_.resize(n);
    g.vertices_.resize(n);
    for (int v = 0; v < n; ++v) {
        g.vertices_[v] = v;
        g.labels_[v] = v + 1;
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loop rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.num_edges_ += static_cast<int>(nbrs.size());
    }
    g.num_edges_ /= 2;
    return g;
}

bool Graph::has_vertex(int v) const {
    return v >= 0 && v < capacity() && present_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v))
        throw std::out_of_range("graph: no such vertex");
    return adj_[v];
}

int Graph::label(int v) const {
    if (!has_vertex(v))
        throw std::out_of_range("graph: no such vertex");
    return labels_[v];
}

void Graph::set_labels(std::vector<int> labels) {
    if (labels.size() != labels_.size())
        throw std::invalid_argument("graph: label vector size mismatch");
    labels_ = std::move(labels);
}

Graph Graph::remove_vertices(const VertexSet& x) const {
    for (int v : x)
        if (!has_vertex(v))
            throw std::invalid_argument("remove_vertices: not a subset of V");
    Graph g;
    g.adj_.resize(capacity());
    g.present_.assign(capacity(), 0);
    g.labels_ = labels_;
    std::vector<char> dropped(capacity(), 0);
    for (int v : x)
        dropped[v] = 1;
    for (int v : vertices_) {
        if (dropped[v])
            continue;
        g.present_[v] = 1;
        g.vertices_.push_back(v);
        for (int u : adj_[v])
            if (!dropped[u])
                g.adj_[v].push_back(u);
        g.num_edges_ += static_cast<int>(g.adj_[v].size());
    }
    g.num_edges_ /= 2;
    return g;
}

bool Graph::operator==(const Graph& other) const {
    if (vertices_ != other.vertices_)
        return false;
    for (int v : vertices_)
        if (adj_[v] != other.adj_[v] || labels_[v] != other.labels_[v])
            return false;
    return true;
}

bool is_canonical_set(const VertexSet& x) {
    for (size_t i = 1; i < x.size(); ++i)
        if (x[i - 1] >= x[i])
            return false;
    return true;
}

bool set_contains(const VertexSet& x, int v) {
    return std::binary_search(x.begin(), x.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ComponentList connected_components(const Graph& g) {
    ComponentList out;
    std::vector<char> seen(g.capacity(), 0);
    std::vector<int> stack;
    for (int start : g.vertices()) {
        if (seen[start])
            continue;
        VertexSet comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& x) {
    return g.remove_vertices(x);
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<char> in_x(g.capacity(), 0);
    for (int v : x) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("neighborhood: not a subset of V");
        in_x[v] = 1;
    }
    std::vector<char> hit(g.capacity(), 0);
    VertexSet out;
    for (int v : x) {
        for (int u : g.neighbors(v)) {
            if (!in_x[u] && !hit[u]) {
                hit[u] = 1;
                out.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rooted extension (ESU-style): every connected set is grown exactly once
// from its smallest vertex, using only larger vertices, so no
// deduplication pass is needed.
struct ConnectedSetEnum {
    const Graph& g;
    int size;
    const std::function<bool(const VertexSet&)>& visit;
    int anchor = -1;
    VertexSet sub;
    std::vector<char> blocked;  // in sub, or already adjacent to sub
    bool stopped = false;

    bool extend(std::vector<int> ext) {
        if (static_cast<int>(sub.size()) == size) {
            VertexSet out = sub;
            std::sort(out.begin(), out.end());
            if (!visit(out))
                stopped = true;
            return !stopped;
        }
        while (!ext.empty()) {
            int w = ext.front();
            ext.erase(ext.begin());
            std::vector<int> grown = ext;
            std::vector<int> newly_blocked;
            for (int u : g.neighbors(w)) {
                if (u > anchor && !blocked[u]) {
                    blocked[u] = 1;
                    newly_blocked.push_back(u);
                    grown.push_back(u);
                }
            }
            std::sort(grown.begin(), grown.end());
            sub.push_back(w);
            bool keep_going = extend(std::move(grown));
            sub.pop_back();
            for (int u : newly_blocked)
                blocked[u] = 0;
            if (!keep_going)
                return false;
        }
        return true;
    }

    void run() {
        blocked.assign(g.capacity(), 0);
        for (int v : g.vertices()) {
            anchor = v;
            sub = {v};
            std::vector<int> ext;
            std::vector<int> marked;
            blocked[v] = 1;
            marked.push_back(v);
            for (int u : g.neighbors(v)) {
                if (u > v) {
                    blocked[u] = 1;
                    marked.push_back(u);
                    ext.push_back(u);
                }
            }
            bool keep_going = extend(std::move(ext));
            for (int u : marked)
                blocked[u] = 0;
            if (!keep_going)
                return;
        }
    }
};

}  // namespace

void for_each_connected_set(const Graph& g, int size,
                            const std::function<bool(const VertexSet&)>& visit) {
    if (size < 1)
        throw std::invalid_argument("for_each_connected_set: size must be >= 1");
    ConnectedSetEnum e{g, size, visit};
    e.run();
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int size) {
    std::vector<VertexSet> out;
    for_each_connected_set(g, size, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace ecoc
