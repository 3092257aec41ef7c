#pragma once

#include "ecoc/graph.hpp"

namespace ecoc {

// An l-ECOC instance: delete at most k vertices so that every remaining
// connected component has exactly l vertices. k may go negative while
// reduction rules are being applied; l is always >= 1.
struct Instance {
    Graph graph;
    long long k = 0;
    int l = 1;
};

}  // namespace ecoc
