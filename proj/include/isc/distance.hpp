#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isc/exact.hpp"
#include "isc/graph.hpp"

namespace isc {

// Distance histogram: counts[d] = number of unordered vertex pairs at
// distance d >= 1.
struct DistanceDistribution {
    std::map<long long, unsigned long long> counts;

    ExactInt pair_total() const;     // sum of counts; equals N(N-1)/2
    ExactInt weighted_total() const; // sum of d * counts[d]; equals W
    long long diameter() const;      // largest distance present (0 if none)
    std::string csv() const;         // "d,count" header plus one row per d
};

// Unweighted shortest-path distances from `source` to every vertex, indexed
// by dense vertex id.  Throws UnreachableVertex if the graph is
// disconnected, Error if the source id is out of range.
std::vector<long long> bfs_distances(const SquareCellGraph& graph,
                                     std::int32_t source);

struct WienerBfsResult {
    ExactInt wiener;
    DistanceDistribution distribution;
};

// Ground truth by brute force: BFS from every vertex, W = half the sum of
// all pairwise distances, plus the full distance distribution.
WienerBfsResult wiener_bfs(const SquareCellGraph& graph);

// Average distance 2W / (N(N-1)) in lowest terms; throws OrderTooSmall for
// N < 2.
ExactRational mu_from_wiener(const ExactInt& wiener, const ExactInt& order);

}  // namespace isc
