#include "ecoc/instance_gen.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ecoc {

uint64_t SplitMix64::below(uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("SplitMix64::below: zero bound");
    uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    while (true) {
        uint64_t r = next();
        if (r >= threshold)
            return r % bound;
    }
}

namespace {

mpz_class mpz_from_u64(uint64_t v) {
    mpz_class hi(static_cast<unsigned long>(v >> 32));
    mpz_class lo(static_cast<unsigned long>(v & 0xffffffffULL));
    return (hi << 32) + lo;
}

}  // namespace

bool SplitMix64::bernoulli(const Rational& p) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("SplitMix64::bernoulli: probability outside [0,1]");
    uint64_t u = next();
    // u / 2^64 < num/den  <=>  u * den < num * 2^64
    mpz_class lhs = mpz_from_u64(u) * p.get_den();
    mpz_class rhs = p.get_num() << 64;
    return lhs < rhs;
}

Instance gen_planted(int num_components, int l, int k, const Rational& edge_prob,
                     uint64_t seed) {
    if (num_components < 0 || k < 0 || l < 1)
        throw std::invalid_argument("gen_planted: parameters out of range");
    SplitMix64 rng(seed);
    int n = num_components * l + k;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> tree_edge;

    for (int c = 0; c < num_components; ++c) {
        int base = c * l;
        tree_edge.assign(static_cast<size_t>(l) * l, 0);
        for (int i = 1; i < l; ++i) {
            int parent = static_cast<int>(rng.below(static_cast<uint64_t>(i)));
            edges.emplace_back(base + i, base + parent);
            tree_edge[static_cast<size_t>(i) * l + parent] = 1;
            tree_edge[static_cast<size_t>(parent) * l + i] = 1;
        }
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (!tree_edge[static_cast<size_t>(i) * l + j] && rng.bernoulli(edge_prob))
                    edges.emplace_back(base + i, base + j);
    }

    int first_solution = num_components * l;
    for (int s = first_solution; s < n; ++s)
        for (int v = 0; v < s; ++v)
            if (rng.bernoulli(edge_prob))
                edges.emplace_back(v, s);

    return Instance{Graph::from_edges(n, edges), k, l};
}

Instance gen_random(int n, const Rational& edge_prob, int l, int k, uint64_t seed) {
    if (n < 0 || k < 0 || l < 1)
        throw std::invalid_argument("gen_random: parameters out of range");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(edge_prob))
                edges.emplace_back(i, j);
    return Instance{Graph::from_edges(n, edges), k, l};
}

Instance generate(const GenSpec& spec) {
    if (spec.kind == GenSpec::Kind::Planted)
        return gen_planted(spec.num_components, spec.l, static_cast<int>(spec.k),
                           spec.edge_prob, spec.seed);
    return gen_random(spec.n, spec.edge_prob, spec.l, static_cast<int>(spec.k), spec.seed);
}

}  // namespace ecoc
