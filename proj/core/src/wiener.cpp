#include "zdg/wiener.hpp"

#include "parallel.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

namespace {

// Single-source BFS into dist (preallocated, reset to kUnreachable here).
// Returns the number of reached vertices.
std::size_t bfs(const std::vector<std::vector<std::uint32_t>>& adj,
                std::uint32_t source, std::vector<std::int32_t>& dist,
                std::vector<std::uint32_t>& queue) {
    std::fill(dist.begin(), dist.end(), DistanceTable::kUnreachable);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        const std::uint32_t v = queue[head++];
        const std::int32_t next = dist[v] + 1;
        for (std::uint32_t w : adj[v]) {
            if (dist[w] == DistanceTable::kUnreachable) {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    return queue.size();
}

}  // namespace

DistanceTable all_pairs_distances(const ZdGraph& g) {
    const std::size_t order = g.order();
    DistanceTable table;
    table.order = order;
    table.source = g.meta;
    table.dist.assign(order * order, DistanceTable::kUnreachable);
    if (order == 0) return table;

    const auto adj = g.adjacency_lists();
    std::vector<std::int32_t> row(order);
    std::vector<std::uint32_t> queue;
    queue.reserve(order);
    for (std::uint32_t s = 0; s < order; ++s) {
        bfs(adj, s, row, queue);
        std::copy(row.begin(), row.end(), table.dist.begin() + s * order);
    }
    return table;
}

DisconnectedGraphError::DisconnectedGraphError(std::int64_t a, std::int64_t b)
    : std::runtime_error("graph is disconnected: no path between vertices " +
                         std::to_string(a) + " and " + std::to_string(b)),
      a_(a),
      b_(b) {}

std::uint64_t wiener_index(const ZdGraph& g) {
    const std::size_t order = g.order();
    if (order <= 1) return 0;

    const auto adj = g.adjacency_lists();
    std::vector<std::int32_t> dist(order);
    std::vector<std::uint32_t> queue;
    queue.reserve(order);

    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < order; ++s) {
        const std::size_t reached = bfs(adj, s, dist, queue);
        if (reached != order) {
            std::uint32_t missing = 0;
            while (dist[missing] != DistanceTable::kUnreachable) ++missing;
            throw DisconnectedGraphError(g.vertices[s], g.vertices[missing]);
        }
        for (std::uint32_t v = 0; v < order; ++v)
            total += static_cast<std::uint64_t>(dist[v]);
    }
    return total / 2;  // every unordered pair was counted from both ends
}

std::uint64_t wiener_closed_form(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("wiener_closed_form: n must be >= 2, got " +
                                    std::to_string(n));
    using u128 = unsigned __int128;
    const u128 wide_n = static_cast<u128>(n);
    const u128 value = (n % 2 == 0) ? (wide_n - 2) * (3 * wide_n - 4) / 4
                                    : (wide_n - 1) * (3 * wide_n - 7) / 4;
    if (value > static_cast<u128>(UINT64_MAX))
        throw std::overflow_error("wiener_closed_form: value exceeds 64 bits");
    return static_cast<std::uint64_t>(value);
}

std::vector<WienerRow> verify_wiener(int max_n) {
    if (max_n < 2)
        throw std::invalid_argument("verify_wiener: max_n must be >= 2");
    std::vector<WienerRow> rows(static_cast<std::size_t>(max_n) - 1);
    detail::parallel_for_index(rows.size(), [&](std::size_t i) {
        const int n = static_cast<int>(i) + 2;
        WienerRow row;
        row.n = n;
        row.bfs = wiener_index(build_compressed_prime_power(n));
        row.closed_form = wiener_closed_form(n);
        row.match = row.bfs == row.closed_form;
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace zdg
