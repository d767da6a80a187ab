#include "isc/cuts.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "isc/errors.hpp"

namespace isc {

std::string_view to_string(CutFamily family) {
    switch (family) {
        case CutFamily::H1: return "H1";
        case CutFamily::H2: return "H2";
        case CutFamily::H3: return "H3";
        case CutFamily::V1: return "V1";
        case CutFamily::V2: return "V2";
        case CutFamily::V3: return "V3";
        case CutFamily::V4: return "V4";
        case CutFamily::V5: return "V5";
    }
    return "?";
}

namespace {

using FamilyRange = std::pair<CutFamily, long long>;

std::array<FamilyRange, 3> horizontal_ranges(const ISCParams& params) {
    return {{{CutFamily::H1, params.t},
             {CutFamily::H2, params.m},
             {CutFamily::H3, params.s}}};
}

// Index ranges of the vertical families; their sum is n + m - 1 in every
// case (the total number of column gaps).
std::array<FamilyRange, 5> vertical_ranges(const ISCParams& params,
                                           CaseKind kind) {
    const long long p = params.p, q = params.q, m = params.m, n = params.n;
    switch (kind) {
        case CaseKind::case1:
            return {{{CutFamily::V1, (2 * m + n - q - 2) / 2},
                     {CutFamily::V2, (q - p - 2 * m + 2) / 2},
                     {CutFamily::V3, p},
                     {CutFamily::V4, (q - p + 2 * m - 2) / 2},
                     {CutFamily::V5, params.s}}};
        case CaseKind::case2:
            return {{{CutFamily::V1, params.t},
                     {CutFamily::V2, p},
                     {CutFamily::V3, (2 * m - p - q - 2) / 2},
                     {CutFamily::V4, q},
                     {CutFamily::V5, params.s}}};
        case CaseKind::case3:
        default:
            return {{{CutFamily::V1, params.t},
                     {CutFamily::V2, (2 * m + p - q - 2) / 2},
                     {CutFamily::V3, (p + q - 2 * m + 2) / 2},
                     {CutFamily::V4, (2 * m - p + q - 2) / 2},
                     {CutFamily::V5, params.s}}};
    }
}

// Closed-form count of vertices on the sweep-origin side of the k-th cut
// of a family: below the strip for H families, right of the gap for V
// families.  All divisions are exact under the parity invariants.
ExactInt table_side_count(const ISCParams& params, CaseKind kind,
                          CutFamily family, long long kk) {
    const ExactInt p = exact_int(params.p);
    const ExactInt q = exact_int(params.q);
    const ExactInt m = exact_int(params.m);
    const ExactInt n = exact_int(params.n);
    const ExactInt k = exact_int(kk);
    switch (family) {
        case CutFamily::H1:
            return p * k + k * k;
        case CutFamily::H2:
            return exact_div(n * n - p * p + 4 * n * k + 8 * k - 4, 4);
        case CutFamily::H3:
            return exact_div(n * n - p * p + 4 * m * n + 8 * m + 4 * n * k +
                                 8 * k - 4 * k * k - 4,
                             4);
        case CutFamily::V1:
            return k * k + k;
        case CutFamily::V2:
            if (kind == CaseKind::case1) {
                return exact_div(4 * m * m + n * n + q * q + 4 * m * n -
                                     4 * m * q - 4 * m - 2 * n * q - 2 * n +
                                     2 * q + 8 * m * k + 4 * n * k - 4 * q * k +
                                     2 * k * k - 2 * k,
                                 4);
            }
            return exact_div(n * n + p * p - 2 * n * p + 2 * n - 2 * p +
                                 4 * n * k - 4 * p * k + 2 * k * k + 6 * k,
                             4);
        case CutFamily::V3:
            switch (kind) {
                case CaseKind::case1:
                    return exact_div(2 * n * n - 4 * m * m + p * p - q * q -
                                         4 * m * p + 4 * m * q - 4 * n * p +
                                         2 * p * q - 2 * p - 2 * q + 4 * m +
                                         4 * n + 8 * k + 8 * m * k + 8 * n * k -
                                         4 * p * k - 4 * q * k,
                                     8);
                case CaseKind::case2:
                    return exact_div(n * n - p * p + 2 * n * p + 2 * n + 4 * p +
                                         4 * n * k + 8 * k,
                                     4);
                case CaseKind::case3:
                default:
                    return exact_div(4 * m * m + 2 * n * n - p * p + q * q +
                                         8 * m * n - 4 * m * p - 4 * m * q -
                                         4 * n * q + 2 * p * q + 4 * m - 4 * n +
                                         6 * p - 2 * q + 8 * m * k + 8 * n * k -
                                         4 * p * k - 4 * q * k + 8 * k - 8,
                                     8);
            }
        case CutFamily::V4:
            switch (kind) {
                case CaseKind::case1:
                    return exact_div(2 * n * n - 4 * m * m - 3 * p * p - q * q +
                                         4 * m * p + 4 * n * p + 4 * m * q -
                                         2 * p * q + 6 * p - 2 * q + 4 * m +
                                         4 * n + 8 * m * k + 8 * n * k -
                                         4 * p * k - 4 * q * k + 12 * k -
                                         4 * k * k,
                                     8);
                case CaseKind::case2:
                    return exact_div(n * n - p * p + 4 * m * n - 2 * n * q +
                                         8 * m - 2 * n - 4 * q + 4 * n * k -
                                         2 * k * k + 10 * k - 8,
                                     4);
                case CaseKind::case3:
                default:
                    return exact_div(2 * n * n - 4 * m * m - 3 * p * p - q * q +
                                         4 * m * p + 4 * m * q - 2 * p * q +
                                         4 * n * p + 4 * m + 4 * n + 6 * p -
                                         2 * q + 8 * m * k + 8 * n * k -
                                         4 * p * k - 4 * q * k - 4 * k * k +
                                         12 * k,
                                     8);
            }
        case CutFamily::V5:
            switch (kind) {
                case CaseKind::case1:
                    return exact_div(8 * m - 2 * n + 6 * q + 4 * m * n +
                                         2 * n * q + n * n - p * p - 2 * q * q -
                                         8 + 4 * n * k - 4 * q * k + 12 * k -
                                         4 * k * k,
                                     4);
                case CaseKind::case2:
                    return exact_div(n * n - p * p + 4 * m * n + 2 * n * q +
                                         8 * m - 2 * n + 6 * q - 2 * q * q +
                                         4 * n * k - 4 * q * k - 4 * k * k +
                                         12 * k - 8,
                                     4);
                case CaseKind::case3:
                default:
                    return exact_div(2 * n * n - 2 * p * p - 4 * q * q +
                                         8 * m * n + 4 * n * q + 16 * m -
                                         4 * n + 12 * q + 8 * n * k -
                                         8 * q * k - 8 * k * k + 24 * k - 16,
                                     8);
            }
    }
    throw Error("unknown cut family");
}

// Vertical-edge count of each horizontal strip: column overlap of the two
// rows bounding it.
std::vector<long long> strip_multiplicities(const std::vector<RowInterval>& rows) {
    std::vector<long long> result;
    result.reserve(rows.size() - 1);
    for (size_t r = 0; r + 1 < rows.size(); ++r) {
        if (rows[r + 1].y != rows[r].y + 1) {
            result.push_back(0);
            continue;
        }
        const long long lo = std::max(rows[r].x_min, rows[r + 1].x_min);
        const long long hi = std::min(rows[r].x_max, rows[r + 1].x_max);
        result.push_back(std::max(0LL, hi - lo + 1));
    }
    return result;
}

// Horizontal-edge count of each column gap, indexed by x - x_low where
// x_low is the leftmost column: the number of rows containing both x and
// x+1, accumulated with a difference array.
std::vector<long long> gap_multiplicities(const std::vector<RowInterval>& rows,
                                          long long x_low, long long gap_total) {
    std::vector<long long> diff(static_cast<size_t>(gap_total) + 1, 0);
    for (const RowInterval& row : rows) {
        if (row.x_max > row.x_min) {
            diff[static_cast<size_t>(row.x_min - x_low)] += 1;
            diff[static_cast<size_t>(row.x_max - x_low)] -= 1;
        }
    }
    std::vector<long long> result(static_cast<size_t>(gap_total), 0);
    long long running = 0;
    for (size_t i = 0; i < result.size(); ++i) {
        running += diff[i];
        result[i] = running;
    }
    return result;
}

}  // namespace

std::vector<CutRecord> table_cuts(const ISCParams& params) {
    const CaseKind kind = classify_case(params);
    const ExactInt order = vertex_count(params);
    const std::vector<RowInterval> rows = canonical_rows(params);
    const long long gap_total = params.n + params.m - 1;
    const long long x_low = -(params.m - 1);
    const std::vector<long long> strip_mult = strip_multiplicities(rows);
    const std::vector<long long> gap_mult =
        gap_multiplicities(rows, x_low, gap_total);

    std::vector<CutRecord> records;
    records.reserve(static_cast<size_t>(strip_mult.size() + gap_total));
    size_t strip = 0;
    for (const auto& [family, count] : horizontal_ranges(params)) {
        for (long long k = 1; k <= count; ++k, ++strip) {
            ExactInt f = table_side_count(params, kind, family, k);
            records.push_back(
                {family, k, strip_mult[strip], f, order - f});
        }
    }
    long long position = 1;  // gap n + m - position counted from the left
    for (const auto& [family, count] : vertical_ranges(params, kind)) {
        for (long long k = 1; k <= count; ++k, ++position) {
            ExactInt f = table_side_count(params, kind, family, k);
            const long long x = params.n - position;  // gap boundary x | x+1
            records.push_back(
                {family, k, gap_mult[static_cast<size_t>(x - x_low)], f,
                 order - f});
        }
    }
    return records;
}

std::vector<CutRecord> geometric_cuts(const SquareCellGraph& graph) {
    if (!graph.origin()) {
        throw Error("geometric_cuts needs a graph built by build_isc");
    }
    const ISCParams& params = *graph.origin();
    const CaseKind kind = classify_case(params);
    const std::vector<RowInterval>& rows = graph.rows();
    const ExactInt order = exact_int(graph.vertex_count());

    // Count the edges of every strip and gap directly from the adjacency
    // structure, and the vertices of every row and column.
    long long x_low = rows.front().x_min;
    long long x_high = rows.front().x_max;
    for (const RowInterval& row : rows) {
        x_low = std::min(x_low, row.x_min);
        x_high = std::max(x_high, row.x_max);
    }
    const long long gap_total = x_high - x_low;
    std::vector<long long> strip_edges(rows.size() - 1, 0);
    std::vector<long long> gap_edges(static_cast<size_t>(gap_total), 0);
    std::vector<long long> column_vertices(static_cast<size_t>(gap_total) + 1, 0);
    std::vector<long long> below_row(rows.size(), 0);
    long long seen = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        below_row[r] = seen;
        seen += rows[r].size();
        for (long long x = rows[r].x_min; x <= rows[r].x_max; ++x) {
            const std::int32_t id = graph.vertex_id(x, rows[r].y);
            column_vertices[static_cast<size_t>(x - x_low)] += 1;
            for (std::int32_t neighbor : graph.neighbors(id)) {
                const auto [nx, ny] = graph.coords(neighbor);
                if (ny == rows[r].y + 1) {
                    strip_edges[r] += 1;
                } else if (ny == rows[r].y && nx == x + 1) {
                    gap_edges[static_cast<size_t>(x - x_low)] += 1;
                }
            }
        }
    }
    // Vertices strictly right of each gap boundary.
    std::vector<ExactInt> right_of(static_cast<size_t>(gap_total) + 1, ExactInt(0));
    for (long long i = gap_total - 1; i >= 0; --i) {
        right_of[static_cast<size_t>(i)] =
            right_of[static_cast<size_t>(i) + 1] +
            exact_int(column_vertices[static_cast<size_t>(i) + 1]);
    }

    std::vector<CutRecord> records;
    records.reserve(static_cast<size_t>(strip_edges.size() + gap_total));
    size_t strip = 0;
    for (const auto& [family, count] : horizontal_ranges(params)) {
        for (long long k = 1; k <= count; ++k, ++strip) {
            ExactInt f = exact_int(below_row[strip + 1]);
            records.push_back(
                {family, k, strip_edges[strip], f, order - f});
        }
    }
    if (strip != strip_edges.size() || gap_total != params.n + params.m - 1) {
        throw Error("strip layout does not match the parameter ranges");
    }
    long long position = 1;
    for (const auto& [family, count] : vertical_ranges(params, kind)) {
        for (long long k = 1; k <= count; ++k, ++position) {
            const long long x = params.n - position;
            const size_t gap = static_cast<size_t>(x - x_low);
            records.push_back({family, k, gap_edges[gap], right_of[gap],
                               order - right_of[gap]});
        }
    }
    return records;
}

ExactInt wiener_from_cuts(const std::vector<CutRecord>& cuts) {
    ExactInt total = 0;
    for (const CutRecord& cut : cuts) {
        total += cut.f_small * cut.f_comp;
    }
    return total;
}

std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>>
strip_edge_partition(const SquareCellGraph& graph) {
    const std::vector<RowInterval>& rows = graph.rows();
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> classes;

    // Horizontal strips, bottom-up.
    for (size_t r = 0; r + 1 < rows.size(); ++r) {
        if (rows[r + 1].y != rows[r].y + 1) {
            continue;
        }
        std::vector<std::pair<std::int32_t, std::int32_t>> edges;
        for (long long x = std::max(rows[r].x_min, rows[r + 1].x_min);
             x <= std::min(rows[r].x_max, rows[r + 1].x_max); ++x) {
            edges.emplace_back(graph.vertex_id(x, rows[r].y),
                               graph.vertex_id(x, rows[r + 1].y));
        }
        if (!edges.empty()) {
            classes.push_back(std::move(edges));
        }
    }
    // Column gaps, from the rightmost boundary leftward (the order the
    // vertical cut families are indexed in).
    long long x_low = rows.front().x_min;
    long long x_high = rows.front().x_max;
    for (const RowInterval& row : rows) {
        x_low = std::min(x_low, row.x_min);
        x_high = std::max(x_high, row.x_max);
    }
    for (long long x = x_high - 1; x >= x_low; --x) {
        std::vector<std::pair<std::int32_t, std::int32_t>> edges;
        for (const RowInterval& row : rows) {
            if (x >= row.x_min && x + 1 <= row.x_max) {
                edges.emplace_back(graph.vertex_id(x, row.y),
                                   graph.vertex_id(x + 1, row.y));
            }
        }
        if (!edges.empty()) {
            classes.push_back(std::move(edges));
        }
    }
    return classes;
}

std::string cuts_csv(const std::vector<CutRecord>& cuts) {
    std::ostringstream out;
    out << "family,k,edge_count,f_small,f_comp\n";
    for (const CutRecord& cut : cuts) {
        out << to_string(cut.family) << "," << cut.k << "," << cut.edge_count
            << "," << cut.f_small.get_str() << "," << cut.f_comp.get_str()
            << "\n";
    }
    return out.str();
}

}  // namespace isc
