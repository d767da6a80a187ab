#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "isc/errors.hpp"
#include "isc/graph.hpp"
#include "isc/params.hpp"
#include "isc/theta.hpp"

#include "isc/cuts.hpp"

using isc::SquareCellGraph;

namespace {

using EdgeClass = std::vector<std::pair<std::int32_t, std::int32_t>>;

// Order-free comparison: both partitions as sorted lists of sorted classes.
std::vector<EdgeClass> canonicalized(std::vector<EdgeClass> classes) {
    for (EdgeClass& edge_class : classes) {
        std::sort(edge_class.begin(), edge_class.end());
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace

TEST_CASE("unit square has two relation classes of two edges") {
    const SquareCellGraph graph =
        isc::build_isc(isc::validate_params(1, 1, 1, 1));
    const isc::EdgePartition partition = isc::theta_star_partition(graph);
    REQUIRE(partition.classes.size() == 2);
    CHECK(partition.classes[0].size() == 2);
    CHECK(partition.classes[1].size() == 2);
    // Opposite edges of the 4-cycle are related; incident ones are not.
    CHECK(canonicalized(partition.classes) ==
          canonicalized(isc::strip_edge_partition(graph)));
}

TEST_CASE("relation classes are exactly the strips and gaps") {
    for (const auto& [p, q, m, n] : std::vector<std::array<long long, 4>>{
             {2, 2, 1, 2},
             {2, 2, 1, 4},
             {1, 1, 3, 3},
             {2, 2, 2, 4},
             {1, 3, 2, 5},
         }) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        const SquareCellGraph graph =
            isc::build_isc(isc::validate_params(p, q, m, n));
        const isc::EdgePartition partition = isc::theta_star_partition(graph);
        CHECK(canonicalized(partition.classes) ==
              canonicalized(isc::strip_edge_partition(graph)));
    }
}

TEST_CASE("hexagon H(2) class sizes match its cut edge counts") {
    const SquareCellGraph graph =
        isc::build_isc(isc::validate_params(2, 2, 1, 4));
    const isc::EdgePartition partition = isc::theta_star_partition(graph);
    REQUIRE(partition.classes.size() == 7);

    std::vector<long long> sizes;
    for (const EdgeClass& edge_class : partition.classes) {
        sizes.push_back(static_cast<long long>(edge_class.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long long>{2, 2, 3, 3, 4, 4, 5});
}

TEST_CASE("T(2,2) splits into three classes") {
    const SquareCellGraph graph =
        isc::build_isc(isc::validate_params(2, 2, 1, 2));
    CHECK(isc::theta_star_partition(graph).classes.size() == 3);
}

TEST_CASE("split_component_sizes checks for exactly two sides") {
    const SquareCellGraph graph =
        isc::build_isc(isc::validate_params(1, 1, 1, 1));
    const std::int32_t v00 = graph.vertex_id(0, 0);
    const std::int32_t v10 = graph.vertex_id(1, 0);
    const std::int32_t v01 = graph.vertex_id(0, 1);
    const std::int32_t v11 = graph.vertex_id(1, 1);

    // Removing the full horizontal strip splits rows y=0 and y=1.
    const auto [low, high] = isc::split_component_sizes(
        graph, {{std::min(v00, v01), std::max(v00, v01)},
                {std::min(v10, v11), std::max(v10, v11)}});
    CHECK(low + high == 4);
    CHECK(low == 2);

    // One edge of a cycle leaves the graph connected: not a valid cut.
    CHECK_THROWS_AS(
        isc::split_component_sizes(graph, {{std::min(v00, v10),
                                            std::max(v00, v10)}}),
        isc::NotTwoComponents);
    // Removing everything shatters it into four parts: also invalid.
    CHECK_THROWS_AS(
        isc::split_component_sizes(
            graph, {{std::min(v00, v10), std::max(v00, v10)},
                    {std::min(v01, v11), std::max(v01, v11)},
                    {std::min(v00, v01), std::max(v00, v01)},
                    {std::min(v10, v11), std::max(v10, v11)}}),
        isc::NotTwoComponents);
}
