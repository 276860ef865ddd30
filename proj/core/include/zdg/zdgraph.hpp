#pragma once

// Construction of the zero-divisor graph of Z_m, its compressed quotient,
// and the structural prime-power form, plus adjacency matrices and
// DOT/JSON export.

#include "zdg/modring.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdg {

enum class GraphKind { full, compressed, compressed_prime_power };

std::string_view to_string(GraphKind k);

struct GraphMeta {
    GraphKind kind = GraphKind::full;
    std::int64_t modulus = 0;  // m for graphs built from a modulus, else 0
    int exponent = 0;          // n for compressed_prime_power, else 0

    friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

// Finite undirected graph with labeled vertices. Loops (vertices whose
// square is zero) are stored apart from edges: the edge relation joins
// distinct vertices only, while the loop set feeds the matrix diagonal.
// Edges are vertex-index pairs with a < b, sorted lexicographically.
struct ZdGraph {
    GraphMeta meta;
    std::vector<std::int64_t> vertices;  // ascending labels
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> loops;    // ascending vertex indices

    std::size_t order() const noexcept { return vertices.size(); }
    bool is_loop(std::uint32_t v) const;

    /// Neighbor lists over edges only; loops never appear.
    std::vector<std::vector<std::uint32_t>> adjacency_lists() const;

    friend bool operator==(const ZdGraph&, const ZdGraph&) = default;
};

inline constexpr std::int64_t kDefaultFullGraphCap = 1'000'000;
inline constexpr std::size_t kCompressedClassCap = 10'000;

/// Gamma[Z_m]: one vertex per nonzero zero divisor, edge {x,y} iff
/// x != y and x*y = 0 (mod m), loop at x iff x^2 = 0 (mod m).
/// Throws std::length_error when m exceeds max_m (vertex count is Theta(m)).
ZdGraph build_full_graph(Modulus m, std::int64_t max_m = kDefaultFullGraphCap);

/// Gamma_E[Z_m]: one vertex per annihilator class, keyed by its divisor;
/// edge {d,e} iff d != e and m | d*e, loop at d iff m | d^2.
/// Throws std::length_error when the class count exceeds kCompressedClassCap.
ZdGraph build_compressed_graph(Modulus m);

/// Structural Gamma_E[Z_{p^n}]: vertices are the exponents 1..n-1,
/// {i,j} is an edge iff i + j >= n, i is a loop iff 2i >= n.
/// The shape is independent of the prime p.
ZdGraph build_compressed_prime_power(int n);

struct IntMatrix {
    int order = 0;
    std::vector<int> entries;  // row-major, order x order

    static IntMatrix zeros(int order);

    int& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * order + j];
    }
    int at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * order + j];
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// 0/1 adjacency matrix in the graph's stored vertex order; the diagonal
/// carries the loop set when include_loops is set, and is zero otherwise.
IntMatrix adjacency_matrix(const ZdGraph& g, bool include_loops);

enum class ExportFormat { dot, json };

/// Accepts "dot" or "json"; anything else throws std::invalid_argument.
ExportFormat parse_export_format(std::string_view name);

/// Deterministic serialization: vertices ascending, edges lexicographic,
/// loops ascending. DOT lists loops as self-edges.
std::string export_graph(const ZdGraph& g, ExportFormat format);

}  // namespace zdg
