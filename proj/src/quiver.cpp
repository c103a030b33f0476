#include "mscensus/quiver.hpp"

#include "mscensus/errors.hpp"
#include "mscensus/parallel.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace mscensus {

bool is_bousfield_localization(const ModelStructure& a, const ModelStructure& b)
{
    return a.cof == b.cof && a.we.subset_of(b.we);
}

bool is_bousfield_colocalization(const ModelStructure& a, const ModelStructure& b)
{
    return a.fib == b.fib && a.we.subset_of(b.we);
}

bool BousfieldQuiver::alternating_agrees() const
{
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].distance != alternating_distance[i]) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> BousfieldQuiver::component_sizes() const
{
    std::vector<std::size_t> sizes(component_count, 0);
    for (const auto& n : nodes) {
        ++sizes[n.component];
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
    }
    return adj;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

BousfieldQuiver build_quiver(const std::vector<ModelStructure>& structures, unsigned jobs)
{
    BousfieldQuiver q;
    const std::size_t n = structures.size();
    if (n == 0) {
        return q;
    }
    const auto& poset = *structures.front().poset();
    std::optional<std::size_t> discrete;
    const auto identities = poset.identity_class();
    const auto all = poset.all_class();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ms = structures[i];
        if (ms.poset() != structures.front().poset()) {
            throw argument_error("quiver structures live on different posets");
        }
        if (!ms.ids) {
            throw argument_error("quiver structures need (phi, psi) ids");
        }
        q.nodes.push_back({*ms.ids, 0, std::nullopt, ms.flags});
        if (ms.we == identities && ms.cof == all && ms.fib == all) {
            discrete = i;
        }
    }
    if (!discrete) {
        throw internal_consistency_error("the discrete model structure is missing");
    }
    q.discrete_node = *discrete;

    struct Found {
        std::vector<Edge> loc;
        std::vector<Edge> coloc;
    };
    auto parts = parallel_chunks<Found>(n, jobs, [&](std::size_t begin, std::size_t end) {
        Found f;
        for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) {
                    continue;
                }
                if (is_bousfield_localization(structures[a], structures[b])) {
                    f.loc.emplace_back(a, b);
                }
                if (is_bousfield_colocalization(structures[a], structures[b])) {
                    f.coloc.emplace_back(a, b);
                }
            }
        }
        return f;
    });
    for (auto& p : parts) {
        q.localizations.insert(q.localizations.end(), p.loc.begin(), p.loc.end());
        q.colocalizations.insert(q.colocalizations.end(), p.coloc.begin(), p.coloc.end());
    }

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto* edges : {&q.localizations, &q.colocalizations}) {
        for (const auto& [a, b] : *edges) {
            const auto ra = find_root(parent, a);
            const auto rb = find_root(parent, b);
            if (ra != rb) {
                parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    std::vector<std::optional<std::size_t>> label(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find_root(parent, i);
        if (!label[root]) {
            label[root] = q.component_count++;
        }
        q.nodes[i].component = *label[root];
    }

    const auto loc_adj = adjacency(n, q.localizations);
    const auto coloc_adj = adjacency(n, q.colocalizations);

    std::deque<std::size_t> queue{*discrete};
    q.nodes[*discrete].distance = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (const auto* adj : {&loc_adj, &coloc_adj}) {
            for (auto v : (*adj)[u]) {
                if (!q.nodes[v].distance) {
                    q.nodes[v].distance = *q.nodes[u].distance + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    // States (node, kind of the last step); the start may continue with either.
    std::vector<std::array<std::optional<std::size_t>, 2>> state(n);
    std::deque<std::pair<std::size_t, int>> states;
    for (int kind = 0; kind < 2; ++kind) {
        state[*discrete][kind] = 0;
        states.emplace_back(*discrete, kind);
    }
    while (!states.empty()) {
        const auto [u, last] = states.front();
        states.pop_front();
        const int next = 1 - last;
        const auto& adj = next == 0 ? loc_adj : coloc_adj;
        for (auto v : adj[u]) {
            if (!state[v][next]) {
                state[v][next] = *state[u][last] + 1;
                states.emplace_back(v, next);
            }
        }
    }
    q.alternating_distance.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = state[i];
        if (s[0] && s[1]) {
            q.alternating_distance[i] = std::min(*s[0], *s[1]);
        } else if (s[0]) {
            q.alternating_distance[i] = s[0];
        } else {
            q.alternating_distance[i] = s[1];
        }
    }
    return q;
}

DistanceHistogram ms_distance_histogram(const BousfieldQuiver& q)
{
    DistanceHistogram h;
    for (const auto& node : q.nodes) {
        if (node.distance) {
            ++h.counts[*node.distance];
            h.radius = std::max(h.radius, *node.distance);
        } else {
            ++h.unreachable;
        }
    }
    return h;
}

std::vector<Edge> localization_relation(const BracketCatalog& catalog)
{
    std::vector<Edge> out;
    for (std::size_t a = 0; a < catalog.size(); ++a) {
        for (std::size_t b = 0; b < catalog.size(); ++b) {
            if (catalog[b].R.subset_of(catalog[a].R)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::vector<std::size_t> fs_distances(const BracketCatalog& catalog)
{
    const std::size_t n = catalog.size();
    std::vector<Edge> strict;
    for (const auto& [a, b] : localization_relation(catalog)) {
        if (a != b) {
            strict.emplace_back(a, b);
        }
    }
    const auto covers = adjacency(n, transitive_reduction(n, strict));
    const std::size_t start = catalog.all_right_index();
    std::vector<std::optional<std::size_t>> dist(n);
    dist[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : covers[u]) {
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!dist[i]) {
            throw internal_consistency_error("bracket not below the all-right bracket");
        }
        out[i] = *dist[i];
    }
    return out;
}

std::map<std::size_t, std::size_t> fs_distance_histogram(const BracketCatalog& catalog)
{
    std::map<std::size_t, std::size_t> out;
    for (auto d : fs_distances(catalog)) {
        ++out[d];
    }
    return out;
}

std::vector<Edge> transitive_reduction(std::size_t node_count, const std::vector<Edge>& edges)
{
    const std::size_t words = (node_count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(node_count, std::vector<std::uint64_t>(words, 0));
    std::vector<std::size_t> indegree(node_count, 0);
    for (const auto& [a, b] : edges) {
        if (a >= node_count || b >= node_count) {
            throw argument_error("edge endpoint out of range");
        }
        if (a == b) {
            throw precondition_error("self-loop in relation to reduce");
        }
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto adj = adjacency(node_count, sorted);
    for (const auto& [a, b] : sorted) {
        ++indegree[b];
    }

    std::vector<std::size_t> topo;
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < node_count; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    while (!ready.empty()) {
        const auto u = ready.front();
        ready.pop_front();
        topo.push_back(u);
        for (auto v : adj[u]) {
            if (--indegree[v] == 0) {
                ready.push_back(v);
            }
        }
    }
    if (topo.size() != node_count) {
        throw precondition_error("relation to reduce contains a cycle");
    }

    // reach[u] = nodes reachable from u by a path of length >= 1.
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const auto u = *it;
        for (auto v : adj[u]) {
            reach[u][v / 64] |= std::uint64_t{1} << (v % 64);
            for (std::size_t w = 0; w < words; ++w) {
                reach[u][w] |= reach[v][w];
            }
        }
    }
    std::vector<Edge> out;
    for (const auto& [a, b] : sorted) {
        bool implied = false;
        for (auto w : adj[a]) {
            if (w != b && ((reach[w][b / 64] >> (b % 64)) & 1u)) {
                implied = true;
                break;
            }
        }
        if (!implied) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

} // namespace mscensus
