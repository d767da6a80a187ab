#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isc/exact.hpp"
#include "isc/graph.hpp"
#include "isc/params.hpp"

namespace isc {

// Cut families of the canonical embedding.  H1/H2/H3 are the horizontal
// strips (vertical edges between consecutive rows) of the lower wedge, the
// band, and the upper wedge, indexed bottom-up.  V1..V5 are the vertical
// column gaps (horizontal edges crossing one x-boundary), indexed from the
// side adjacent to the top corner; their index ranges depend on the case.
enum class CutFamily { H1, H2, H3, V1, V2, V3, V4, V5 };

std::string_view to_string(CutFamily family);

// One cut: removing its edges splits the graph into two components of
// sizes f_small and f_comp (f_small counts the sweep-origin side: below
// the strip for H families, right of the gap for V families).
struct CutRecord {
    CutFamily family;
    long long k = 0;           // index within the family, 1-based
    long long edge_count = 0;  // number of edges in the cut
    ExactInt f_small;
    ExactInt f_comp;

    bool operator==(const CutRecord&) const = default;
};

// Cut records by direct evaluation of the per-family side-count formulas
// over the index ranges of the classified case.  Needs only the parameters
// (row intervals are generated for the edge multiplicities, but no graph is
// materialized), so it runs in O(n + m) time at any scale.
std::vector<CutRecord> table_cuts(const ISCParams& params);

// The same records computed from the graph itself: edges counted strip by
// strip from the adjacency structure, component sizes counted by row prefix
// sums (horizontal cuts) and column suffix sums (vertical cuts).  Emitted
// in the same order as table_cuts; the two lists must agree record for
// record.  The graph must come from build_isc (family labelling needs the
// originating parameters).
std::vector<CutRecord> geometric_cuts(const SquareCellGraph& graph);

// W = sum over cuts of f_small * f_comp.
ExactInt wiener_from_cuts(const std::vector<CutRecord>& cuts);

// The strip partition of the edge set, in the same class order as
// geometric_cuts: each class lists its edges as (id_low, id_high) pairs in
// ascending order.  This is the partition the Djokovic-Winkler closure must
// reproduce.
std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>>
strip_edge_partition(const SquareCellGraph& graph);

// "family,k,edge_count,f_small,f_comp" CSV, one row per record.
std::string cuts_csv(const std::vector<CutRecord>& cuts);

}  // namespace isc
