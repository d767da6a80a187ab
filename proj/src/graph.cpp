#include "isc/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "isc/errors.hpp"

namespace isc {

std::vector<RowInterval> canonical_rows(const ISCParams& params) {
    const long long p = params.p, m = params.m, n = params.n;
    const long long t = params.t, s = params.s;
    std::vector<RowInterval> rows;
    rows.reserve(static_cast<size_t>(t + m + s + 1));
    for (long long y = 0; y <= t; ++y) {
        rows.push_back({y, t - y, t + p + y});
    }
    for (long long y = t + 1; y <= t + m - 1; ++y) {
        rows.push_back({y, -(y - t), n - (y - t) + 1});
    }
    rows.push_back({t + m, -(m - 1), n - m + 1});
    for (long long j = 1; j <= s; ++j) {
        rows.push_back({t + m + j, -(m - 1) + j, n - m + 1 - j});
    }
    return rows;
}

SquareCellGraph SquareCellGraph::from_rows(std::vector<RowInterval> rows) {
    if (rows.empty()) {
        throw Error("graph needs at least one row");
    }
    SquareCellGraph graph;
    graph.rows_ = std::move(rows);
    graph.row_offset_.reserve(graph.rows_.size() + 1);
    long long offset = 0;
    long long previous_y = 0;
    for (size_t r = 0; r < graph.rows_.size(); ++r) {
        const RowInterval& row = graph.rows_[r];
        if (row.x_min > row.x_max) {
            throw Error("row interval with x_min > x_max at y = " +
                        std::to_string(row.y));
        }
        if (r > 0 && row.y <= previous_y) {
            throw Error("row y values must be strictly increasing");
        }
        previous_y = row.y;
        graph.row_offset_.push_back(offset);
        offset += row.size();
    }
    graph.row_offset_.push_back(offset);
    graph.total_vertices_ = offset;
    if (graph.total_vertices_ > std::numeric_limits<std::int32_t>::max()) {
        throw Error("graph too large to materialize (" +
                    std::to_string(graph.total_vertices_) + " vertices)");
    }
    graph.build_adjacency();
    return graph;
}

int SquareCellGraph::row_index(long long y) const {
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), y,
        [](const RowInterval& row, long long value) { return row.y < value; });
    if (it == rows_.end() || it->y != y) {
        return -1;
    }
    return static_cast<int>(it - rows_.begin());
}

bool SquareCellGraph::has_vertex(long long x, long long y) const {
    const int r = row_index(y);
    return r >= 0 && x >= rows_[r].x_min && x <= rows_[r].x_max;
}

std::int32_t SquareCellGraph::vertex_id(long long x, long long y) const {
    const int r = row_index(y);
    if (r < 0 || x < rows_[r].x_min || x > rows_[r].x_max) {
        return -1;
    }
    return static_cast<std::int32_t>(row_offset_[r] + (x - rows_[r].x_min));
}

std::pair<long long, long long> SquareCellGraph::coords(std::int32_t id) const {
    auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(),
                               static_cast<long long>(id));
    const size_t r = static_cast<size_t>(it - row_offset_.begin()) - 1;
    return {rows_[r].x_min + (id - row_offset_[r]), rows_[r].y};
}

std::span<const std::int32_t> SquareCellGraph::neighbors(std::int32_t id) const {
    return {adjacency_.data() + adjacency_pos_[id],
            adjacency_.data() + adjacency_pos_[id + 1]};
}

void SquareCellGraph::build_adjacency() {
    const size_t vertex_total = static_cast<size_t>(total_vertices_);
    adjacency_pos_.assign(vertex_total + 1, 0);

    // Neighbour ids of (x, y) in (y, x) order: down, left, right, up.
    auto for_each_neighbor = [&](size_t r, long long x, auto&& emit) {
        const RowInterval& row = rows_[r];
        if (r > 0 && rows_[r - 1].y == row.y - 1 && x >= rows_[r - 1].x_min &&
            x <= rows_[r - 1].x_max) {
            emit(row_offset_[r - 1] + (x - rows_[r - 1].x_min));
        }
        if (x > row.x_min) {
            emit(row_offset_[r] + (x - row.x_min) - 1);
        }
        if (x < row.x_max) {
            emit(row_offset_[r] + (x - row.x_min) + 1);
        }
        if (r + 1 < rows_.size() && rows_[r + 1].y == row.y + 1 &&
            x >= rows_[r + 1].x_min && x <= rows_[r + 1].x_max) {
            emit(row_offset_[r + 1] + (x - rows_[r + 1].x_min));
        }
    };

    for (size_t r = 0; r < rows_.size(); ++r) {
        for (long long x = rows_[r].x_min; x <= rows_[r].x_max; ++x) {
            const long long id = row_offset_[r] + (x - rows_[r].x_min);
            for_each_neighbor(r, x, [&](long long) {
                adjacency_pos_[static_cast<size_t>(id) + 1] += 1;
            });
        }
    }
    for (size_t i = 0; i < vertex_total; ++i) {
        adjacency_pos_[i + 1] += adjacency_pos_[i];
    }
    adjacency_.resize(static_cast<size_t>(adjacency_pos_[vertex_total]));
    std::vector<std::int64_t> cursor(adjacency_pos_.begin(),
                                     adjacency_pos_.end() - 1);
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (long long x = rows_[r].x_min; x <= rows_[r].x_max; ++x) {
            const long long id = row_offset_[r] + (x - rows_[r].x_min);
            for_each_neighbor(r, x, [&](long long neighbor) {
                adjacency_[static_cast<size_t>(cursor[static_cast<size_t>(id)]++)] =
                    static_cast<std::int32_t>(neighbor);
            });
        }
    }
    total_edges_ = static_cast<long long>(adjacency_.size()) / 2;
}

long long SquareCellGraph::unit_cell_count() const {
    long long cells = 0;
    for (size_t r = 0; r + 1 < rows_.size(); ++r) {
        if (rows_[r + 1].y != rows_[r].y + 1) {
            continue;
        }
        const long long lo = std::max(rows_[r].x_min, rows_[r + 1].x_min);
        const long long hi = std::min(rows_[r].x_max, rows_[r + 1].x_max);
        cells += std::max(0LL, hi - lo);  // adjacent column pairs in overlap
    }
    return cells;
}

SquareCellGraph build_isc(const ISCParams& params) {
    SquareCellGraph graph = SquareCellGraph::from_rows(canonical_rows(params));
    graph.origin_ = params;
    return graph;
}

std::string to_adjlist(const SquareCellGraph& graph) {
    std::ostringstream out;
    for (std::int32_t id = 0; id < graph.vertex_count(); ++id) {
        const auto [x, y] = graph.coords(id);
        out << x << "," << y << ":";
        for (std::int32_t neighbor : graph.neighbors(id)) {
            const auto [nx, ny] = graph.coords(neighbor);
            out << " " << nx << "," << ny;
        }
        out << "\n";
    }
    return out.str();
}

std::string to_dot(const SquareCellGraph& graph) {
    std::ostringstream out;
    out << "graph isc {\n";
    out << "  node [shape=point];\n";
    auto name = [&](std::int32_t id) {
        const auto [x, y] = graph.coords(id);
        return "\"v_" + std::to_string(x) + "_" + std::to_string(y) + "\"";
    };
    for (std::int32_t id = 0; id < graph.vertex_count(); ++id) {
        out << "  " << name(id) << ";\n";
    }
    for (std::int32_t id = 0; id < graph.vertex_count(); ++id) {
        for (std::int32_t neighbor : graph.neighbors(id)) {
            if (neighbor > id) {
                out << "  " << name(id) << " -- " << name(neighbor) << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace isc
