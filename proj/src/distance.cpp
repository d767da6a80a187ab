#include "isc/distance.hpp"

#include <sstream>

#include "isc/errors.hpp"

namespace isc {

ExactInt DistanceDistribution::pair_total() const {
    ExactInt total = 0;
    for (const auto& [distance, count] : counts) {
        total += ExactInt(static_cast<unsigned long>(count));
    }
    return total;
}

ExactInt DistanceDistribution::weighted_total() const {
    ExactInt total = 0;
    for (const auto& [distance, count] : counts) {
        total += exact_int(distance) * ExactInt(static_cast<unsigned long>(count));
    }
    return total;
}

long long DistanceDistribution::diameter() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

std::string DistanceDistribution::csv() const {
    std::ostringstream out;
    out << "d,count\n";
    for (const auto& [distance, count] : counts) {
        out << distance << "," << count << "\n";
    }
    return out.str();
}

namespace {

// BFS into a caller-owned buffer; returns the number of reached vertices.
// The queue buffer is reused across calls from wiener_bfs.
std::int32_t bfs_fill(const SquareCellGraph& graph, std::int32_t source,
                      std::vector<std::int32_t>& dist,
                      std::vector<std::int32_t>& queue) {
    dist.assign(static_cast<size_t>(graph.vertex_count()), -1);
    queue.clear();
    queue.push_back(source);
    dist[static_cast<size_t>(source)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t u = queue[head];
        for (std::int32_t v : graph.neighbors(u)) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return static_cast<std::int32_t>(queue.size());
}

}  // namespace

std::vector<long long> bfs_distances(const SquareCellGraph& graph,
                                     std::int32_t source) {
    if (source < 0 || source >= graph.vertex_count()) {
        throw Error("BFS source id " + std::to_string(source) +
                    " out of range");
    }
    std::vector<std::int32_t> dist;
    std::vector<std::int32_t> queue;
    const std::int32_t reached = bfs_fill(graph, source, dist, queue);
    if (reached != graph.vertex_count()) {
        throw UnreachableVertex(
            std::to_string(graph.vertex_count() - reached) +
            " vertices unreachable from vertex " + std::to_string(source));
    }
    return {dist.begin(), dist.end()};
}

WienerBfsResult wiener_bfs(const SquareCellGraph& graph) {
    const std::int32_t order = static_cast<std::int32_t>(graph.vertex_count());
    std::vector<std::int32_t> dist;
    std::vector<std::int32_t> queue;
    std::vector<unsigned long long> ordered_counts;
    ExactInt ordered_sum = 0;
    for (std::int32_t source = 0; source < order; ++source) {
        const std::int32_t reached = bfs_fill(graph, source, dist, queue);
        if (reached != order) {
            throw UnreachableVertex(
                std::to_string(order - reached) +
                " vertices unreachable from vertex " + std::to_string(source));
        }
        unsigned long long source_sum = 0;
        for (std::int32_t d : dist) {
            source_sum += static_cast<unsigned long long>(d);
            if (d > 0) {
                if (static_cast<size_t>(d) >= ordered_counts.size()) {
                    ordered_counts.resize(static_cast<size_t>(d) + 1, 0);
                }
                ordered_counts[static_cast<size_t>(d)] += 1;
            }
        }
        ordered_sum += ExactInt(static_cast<unsigned long>(source_sum));
    }
    WienerBfsResult result;
    result.wiener = exact_div(ordered_sum, 2);
    for (size_t d = 1; d < ordered_counts.size(); ++d) {
        if (ordered_counts[d] > 0) {
            // Every unordered pair was seen from both endpoints.
            result.distribution.counts[static_cast<long long>(d)] =
                ordered_counts[d] / 2;
        }
    }
    return result;
}

ExactRational mu_from_wiener(const ExactInt& wiener, const ExactInt& order) {
    if (order < 2) {
        throw OrderTooSmall("average distance needs at least 2 vertices (N = " +
                            order.get_str() + ")");
    }
    return make_rational(2 * wiener, order * (order - 1));
}

}  // namespace isc
