#pragma once

#include <cstdint>

#include "ecoc/instance.hpp"
#include "ecoc/rational.hpp"

namespace ecoc {

// Splitmix-style 64-bit generator. Fixed constants, no platform
// dependence, so corpora regenerate bit-identically everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), rejection sampled (no modulo bias).
    uint64_t below(uint64_t bound);

    // True with probability exactly p (one draw per call): u < p * 2^64
    // compared in exact integer arithmetic.
    bool bernoulli(const Rational& p);

private:
    uint64_t state_;
};

// Yes-instance by construction: num_components disjoint connected blocks
// of exactly l vertices (random spanning tree plus extra in-block edges),
// plus k solution vertices wired to everything else with probability
// edge_prob. Deleting the k solution vertices leaves only size-l blocks.
Instance gen_planted(int num_components, int l, int k, const Rational& edge_prob,
                     uint64_t seed);

// Erdos-Renyi style G(n, edge_prob) with the given budget; no feasibility
// guarantee.
Instance gen_random(int n, const Rational& edge_prob, int l, int k, uint64_t seed);

struct GenSpec {
    enum class Kind { Planted, Random };
    Kind kind = Kind::Random;
    int n = 0;               // random: vertex count
    int num_components = 0;  // planted: block count
    int l = 1;
    long long k = 0;
    Rational edge_prob;
    uint64_t seed = 0;
};

Instance generate(const GenSpec& spec);

}  // namespace ecoc
