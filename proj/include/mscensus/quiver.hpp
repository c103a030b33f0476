#pragma once

#include "mscensus/brackets.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mscensus {

using Edge = std::pair<std::size_t, std::size_t>;

// Same cofibrations and we(a) contained in we(b).
bool is_bousfield_localization(const ModelStructure& a, const ModelStructure& b);
// Same fibrations and we(a) contained in we(b).
bool is_bousfield_colocalization(const ModelStructure& a, const ModelStructure& b);

struct QuiverNode {
    std::pair<std::size_t, std::size_t> id;
    std::size_t component = 0;
    std::optional<std::size_t> distance;
    ModelFlags flags;
};

// Edges are node indices into `nodes` and hold the full strict relations.
struct BousfieldQuiver {
    std::vector<QuiverNode> nodes;
    std::vector<Edge> localizations;
    std::vector<Edge> colocalizations;
    std::size_t component_count = 0;
    std::size_t discrete_node = 0;
    // Shortest strictly alternating loc/coloc chain from the discrete node.
    std::vector<std::optional<std::size_t>> alternating_distance;

    // Whether alternating_distance agrees with the shortest-chain distance.
    [[nodiscard]] bool alternating_agrees() const;
    // Component sizes, largest first.
    [[nodiscard]] std::vector<std::size_t> component_sizes() const;
};

// Structures must share one poset and carry ids. Components number nodes by
// their first member; distances are shortest directed chains from the
// discrete structure using both edge kinds at unit cost.
BousfieldQuiver build_quiver(const std::vector<ModelStructure>& structures, unsigned jobs = 1);

struct DistanceHistogram {
    std::map<std::size_t, std::size_t> counts;
    std::size_t unreachable = 0;
    std::size_t radius = 0;
};

DistanceHistogram ms_distance_histogram(const BousfieldQuiver& q);

// Fewest covering localizations (steps with nothing strictly in between)
// leading from the all-right bracket to each catalog entry.
std::vector<std::size_t> fs_distances(const BracketCatalog& catalog);
std::map<std::size_t, std::size_t> fs_distance_histogram(const BracketCatalog& catalog);

// Ordered (a, b) catalog index pairs with R(b) contained in R(a), including a = b.
std::vector<Edge> localization_relation(const BracketCatalog& catalog);

// Minimal edge set with the same transitive closure. Throws
// precondition_error on a cycle or self-loop.
std::vector<Edge> transitive_reduction(std::size_t node_count, const std::vector<Edge>& edges);

} // namespace mscensus
