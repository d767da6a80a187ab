#include "isc/theta.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isc/distance.hpp"
#include "isc/errors.hpp"

namespace isc {

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(std::int32_t a, std::int32_t b) {
        parent[static_cast<size_t>(find(a))] = find(b);
    }
};

}  // namespace

std::pair<long long, long long> split_component_sizes(
    const SquareCellGraph& graph,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& removed) {
    const size_t order = static_cast<size_t>(graph.vertex_count());
    UnionFind components(order);
    std::vector<std::pair<std::int32_t, std::int32_t>> cut(removed);
    std::sort(cut.begin(), cut.end());
    auto is_removed = [&](std::int32_t u, std::int32_t v) {
        if (u > v) {
            std::swap(u, v);
        }
        return std::binary_search(cut.begin(), cut.end(), std::make_pair(u, v));
    };
    for (std::int32_t u = 0; u < graph.vertex_count(); ++u) {
        for (std::int32_t v : graph.neighbors(u)) {
            if (v > u && !is_removed(u, v)) {
                components.unite(u, v);
            }
        }
    }
    std::vector<long long> sizes(order, 0);
    long long component_total = 0;
    for (std::int32_t u = 0; u < graph.vertex_count(); ++u) {
        const size_t root = static_cast<size_t>(components.find(u));
        if (sizes[root] == 0) {
            component_total += 1;
        }
        sizes[root] += 1;
    }
    if (component_total != 2) {
        throw NotTwoComponents("removing a class of " +
                               std::to_string(removed.size()) +
                               " edges left " +
                               std::to_string(component_total) +
                               " components");
    }
    std::pair<long long, long long> result{0, 0};
    for (long long size : sizes) {
        if (size > 0) {
            (result.first == 0 ? result.first : result.second) = size;
        }
    }
    return result;
}

EdgePartition theta_star_partition(const SquareCellGraph& graph) {
    const std::int32_t order = static_cast<std::int32_t>(graph.vertex_count());

    // Dense distance matrix from per-vertex BFS.
    std::vector<std::int32_t> dist(static_cast<size_t>(order) *
                                   static_cast<size_t>(order));
    for (std::int32_t source = 0; source < order; ++source) {
        const std::vector<long long> row = bfs_distances(graph, source);
        for (std::int32_t v = 0; v < order; ++v) {
            dist[static_cast<size_t>(source) * static_cast<size_t>(order) +
                 static_cast<size_t>(v)] =
                static_cast<std::int32_t>(row[static_cast<size_t>(v)]);
        }
    }
    auto distance = [&](std::int32_t a, std::int32_t b) {
        return dist[static_cast<size_t>(a) * static_cast<size_t>(order) +
                    static_cast<size_t>(b)];
    };

    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::int32_t u = 0; u < order; ++u) {
        for (std::int32_t v : graph.neighbors(u)) {
            if (v > u) {
                edges.emplace_back(u, v);
            }
        }
    }

    // Relate edge pairs, then take the transitive closure via union-find.
    UnionFind closure(edges.size());
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(edges.size()); ++i) {
        const auto [w, x] = edges[static_cast<size_t>(i)];
        for (std::int32_t j = i + 1; j < static_cast<std::int32_t>(edges.size());
             ++j) {
            const auto [y, z] = edges[static_cast<size_t>(j)];
            if (distance(w, y) + distance(x, z) !=
                distance(w, z) + distance(x, y)) {
                closure.unite(i, j);
            }
        }
    }

    // Group edges by class root, keeping first-seen order of classes; edges
    // were generated in ascending order, so each class is already sorted.
    std::vector<std::int32_t> class_of(edges.size(), -1);
    EdgePartition partition;
    for (size_t i = 0; i < edges.size(); ++i) {
        const std::int32_t root = closure.find(static_cast<std::int32_t>(i));
        if (class_of[static_cast<size_t>(root)] < 0) {
            class_of[static_cast<size_t>(root)] =
                static_cast<std::int32_t>(partition.classes.size());
            partition.classes.emplace_back();
        }
        partition.classes[static_cast<size_t>(
                              class_of[static_cast<size_t>(root)])]
            .push_back(edges[i]);
    }
    for (const auto& edge_class : partition.classes) {
        split_component_sizes(graph, edge_class);
    }
    return partition;
}

}  // namespace isc
