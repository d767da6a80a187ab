#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isc/params.hpp"

namespace isc {

// One lattice row: all vertices (x, y) with x_min <= x <= x_max.
struct RowInterval {
    long long y = 0;
    long long x_min = 0;
    long long x_max = 0;

    long long size() const { return x_max - x_min + 1; }
    bool operator==(const RowInterval&) const = default;
};

// Row intervals of the canonical embedding of ISC(p,q,m,n), bottom-up:
//   y in [0, t]:            [t - y, t + p + y]        (lower wedge)
//   y in [t+1, t+m-1]:      [-(y-t), n - (y-t) + 1]   (band interior)
//   y = t+m:                [-(m-1), n - m + 1]       (band top)
//   y = t+m+j, j in [1,s]:  [-(m-1) + j, n - m + 1 - j]  (upper wedge)
// The band slants left going upward; the mirror image is isomorphic.
std::vector<RowInterval> canonical_rows(const ISCParams& params);

// Immutable square-lattice subgraph described by one x-interval per row.
// Vertices are (x, y) lattice points; edges are implicit between lattice
// neighbours that both exist.  Vertex ids are dense, in (y, x) row-major
// order, with precomputed adjacency for O(1) neighbour iteration.
class SquareCellGraph {
  public:
    // Builds from arbitrary rows (strictly increasing y, x_min <= x_max).
    // Connectivity is NOT checked: rows with a y jump or without column
    // overlap produce a disconnected graph, which BFS reports as
    // UnreachableVertex.  Throws Error on malformed intervals.
    static SquareCellGraph from_rows(std::vector<RowInterval> rows);

    const std::vector<RowInterval>& rows() const { return rows_; }
    long long vertex_count() const { return total_vertices_; }
    long long edge_count() const { return total_edges_; }

    // Number of unit cells: lattice squares with all four corners present.
    long long unit_cell_count() const;

    bool has_vertex(long long x, long long y) const;
    // Dense id of (x, y), or -1 when absent.
    std::int32_t vertex_id(long long x, long long y) const;
    std::pair<long long, long long> coords(std::int32_t id) const;  // (x, y)
    std::span<const std::int32_t> neighbors(std::int32_t id) const;

    // The parameters this graph was built from, when it came from build_isc.
    const std::optional<ISCParams>& origin() const { return origin_; }

  private:
    friend SquareCellGraph build_isc(const ISCParams& params);

    std::vector<RowInterval> rows_;
    std::vector<long long> row_offset_;  // dense id of each row's first vertex
    long long total_vertices_ = 0;
    long long total_edges_ = 0;
    std::vector<std::int32_t> adjacency_;      // CSR payload
    std::vector<std::int64_t> adjacency_pos_;  // CSR offsets, size N+1
    std::optional<ISCParams> origin_;

    int row_index(long long y) const;  // -1 when no such row
    void build_adjacency();
};

// Canonical graph of the parameter tuple; satisfies every structural
// invariant (vertex/edge formulas, Euler cell identity, connectivity).
SquareCellGraph build_isc(const ISCParams& params);

// Plain-text adjacency list, one vertex per line in (y, x) order:
//   "x,y: x1,y1 x2,y2 ..."  with neighbours also in (y, x) order.
std::string to_adjlist(const SquareCellGraph& graph);

// Graphviz DOT (undirected), vertices named v_<x>_<y> (quoted, so negative
// coordinates remain valid identifiers).
std::string to_dot(const SquareCellGraph& graph);

}  // namespace isc
