#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isc/graph.hpp"

namespace isc {

// Partition of the edge set into the classes of the transitive closure of
// the Djokovic-Winkler relation: edges (w,x) and (y,z) are related when
// d(w,y) + d(x,z) != d(w,z) + d(x,y).  Classes hold (id_low, id_high) edge
// pairs in ascending order; classes are ordered by their smallest edge.
struct EdgePartition {
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> classes;
};

// Computes the relation over all edge pairs from all-pairs BFS distances,
// closes it transitively with union-find, and verifies that removing each
// class leaves exactly two connected components (throws NotTwoComponents
// otherwise).  Intended as the generic oracle for the geometric strip
// partition at sweep scale; cost is O(|E|^2 + |V| * |E|).
EdgePartition theta_star_partition(const SquareCellGraph& graph);

// Component count and sizes of the graph with the given edges removed;
// throws NotTwoComponents unless there are exactly two.  Exposed so tests
// can exercise the failure path directly.
std::pair<long long, long long> split_component_sizes(
    const SquareCellGraph& graph,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& removed);

}  // namespace isc
