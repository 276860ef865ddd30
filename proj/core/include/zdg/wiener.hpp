#pragma once

// Wiener index machinery: all-pairs BFS over the simple graph (loops are
// ignored), the even/odd closed forms, and the sweep comparing the two.

#include "zdg/zdgraph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zdg {

struct DistanceTable {
    static constexpr std::int32_t kUnreachable = -1;

    std::size_t order = 0;
    std::vector<std::int32_t> dist;  // row-major, order x order
    GraphMeta source;

    std::int32_t at(std::size_t i, std::size_t j) const {
        return dist[i * order + j];
    }
};

/// BFS from every vertex; unreachable pairs hold kUnreachable.
DistanceTable all_pairs_distances(const ZdGraph& g);

class DisconnectedGraphError : public std::runtime_error {
public:
    DisconnectedGraphError(std::int64_t a, std::int64_t b);
    std::int64_t first_label() const noexcept { return a_; }
    std::int64_t second_label() const noexcept { return b_; }

private:
    std::int64_t a_;
    std::int64_t b_;
};

/// Sum of d(x, y) over unordered vertex pairs. Throws
/// DisconnectedGraphError naming one unreachable pair unless the graph is
/// connected (graphs with <= 1 vertex yield 0).
std::uint64_t wiener_index(const ZdGraph& g);

/// (n-2)(3n-4)/4 for even n, (n-1)(3n-7)/4 for odd n; both divisions are
/// exact. Throws std::invalid_argument for n < 2 and std::overflow_error
/// if the value does not fit 64 bits.
std::uint64_t wiener_closed_form(std::int64_t n);

struct WienerRow {
    int n = 0;
    std::uint64_t bfs = 0;
    std::uint64_t closed_form = 0;
    bool match = false;

    friend bool operator==(const WienerRow&, const WienerRow&) = default;
};

/// BFS value vs closed form for every n in 2..max_n, ordered by n.
/// Mismatches are recorded, not thrown.
std::vector<WienerRow> verify_wiener(int max_n);

}  // namespace zdg
