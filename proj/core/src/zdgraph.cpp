#include "zdg/zdgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zdg {

namespace {

using u128 = unsigned __int128;

std::uint32_t index_of(const std::vector<std::int64_t>& sorted, std::int64_t label) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
    return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

std::string_view to_string(GraphKind k) {
    switch (k) {
        case GraphKind::full: return "full";
        case GraphKind::compressed: return "compressed";
        case GraphKind::compressed_prime_power: return "compressed-prime-power";
    }
    return "unknown";
}

bool ZdGraph::is_loop(std::uint32_t v) const {
    return std::binary_search(loops.begin(), loops.end(), v);
}

std::vector<std::vector<std::uint32_t>> ZdGraph::adjacency_lists() const {
    std::vector<std::vector<std::uint32_t>> adj(order());
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

ZdGraph build_full_graph(Modulus m, std::int64_t max_m) {
    if (m.value() > max_m)
        throw std::length_error("build_full_graph: m = " + std::to_string(m.value()) +
                                " exceeds the full-graph cap " + std::to_string(max_m));
    ZdGraph g;
    g.meta = {GraphKind::full, m.value(), 0};
    g.vertices = zero_divisors(m);

    // Neighbors of x are the nonzero multiples of m / gcd(x, m); keeping
    // only y > x yields each edge once, already in lexicographic order.
    for (std::uint32_t ix = 0; ix < g.vertices.size(); ++ix) {
        const std::int64_t x = g.vertices[ix];
        const std::int64_t step = m.value() / std::gcd(x, m.value());
        for (std::int64_t y = step; y < m.value(); y += step) {
            if (y > x) g.edges.emplace_back(ix, index_of(g.vertices, y));
        }
        if (mul_mod(x, x, m) == 0) g.loops.push_back(ix);
    }
    return g;
}

ZdGraph build_compressed_graph(Modulus m) {
    auto keys = proper_divisors(m);
    if (keys.size() > kCompressedClassCap)
        throw std::length_error("build_compressed_graph: m has " +
                                std::to_string(keys.size()) +
                                " annihilator classes, cap is " +
                                std::to_string(kCompressedClassCap));
    ZdGraph g;
    g.meta = {GraphKind::compressed, m.value(), 0};
    g.vertices = std::move(keys);

    const u128 mod = static_cast<u128>(m.value());
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
        const u128 di = static_cast<u128>(g.vertices[i]);
        for (std::uint32_t j = i + 1; j < g.vertices.size(); ++j) {
            if (di * static_cast<u128>(g.vertices[j]) % mod == 0)
                g.edges.emplace_back(i, j);
        }
        if (di * di % mod == 0) g.loops.push_back(i);
    }
    return g;
}

ZdGraph build_compressed_prime_power(int n) {
    if (n < 2)
        throw std::invalid_argument("build_compressed_prime_power: n must be >= 2, got " +
                                    std::to_string(n));
    ZdGraph g;
    g.meta = {GraphKind::compressed_prime_power, 0, n};
    g.vertices.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) g.vertices.push_back(i);

    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 1; j <= n - 1; ++j)
            if (i + j >= n) g.edges.emplace_back(i - 1, j - 1);
        if (2 * i >= n) g.loops.push_back(i - 1);
    }
    return g;
}

IntMatrix IntMatrix::zeros(int order) {
    return IntMatrix{order, std::vector<int>(static_cast<std::size_t>(order) * order, 0)};
}

IntMatrix adjacency_matrix(const ZdGraph& g, bool include_loops) {
    IntMatrix m = IntMatrix::zeros(static_cast<int>(g.order()));
    for (const auto& [a, b] : g.edges) {
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    }
    if (include_loops)
        for (std::uint32_t v : g.loops) m.at(v, v) = 1;
    return m;
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "dot") return ExportFormat::dot;
    if (name == "json") return ExportFormat::json;
    throw std::invalid_argument("unknown export format: " + std::string(name));
}

namespace {

std::string export_dot(const ZdGraph& g) {
    std::ostringstream out;
    out << "graph zdg {\n";
    for (std::int64_t v : g.vertices) out << "  \"" << v << "\";\n";
    for (const auto& [a, b] : g.edges)
        out << "  \"" << g.vertices[a] << "\" -- \"" << g.vertices[b] << "\";\n";
    for (std::uint32_t v : g.loops)
        out << "  \"" << g.vertices[v] << "\" -- \"" << g.vertices[v] << "\";\n";
    out << "}";
    return out.str();
}

std::string export_json(const ZdGraph& g) {
    nlohmann::ordered_json j;
    j["meta"]["kind"] = to_string(g.meta.kind);
    if (g.meta.modulus != 0) j["meta"]["m"] = std::to_string(g.meta.modulus);
    if (g.meta.exponent != 0) j["meta"]["n"] = g.meta.exponent;
    auto vertices = nlohmann::ordered_json::array();
    for (std::int64_t v : g.vertices) vertices.push_back(std::to_string(v));
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({std::to_string(g.vertices[a]), std::to_string(g.vertices[b])});
    auto loops = nlohmann::ordered_json::array();
    for (std::uint32_t v : g.loops) loops.push_back(std::to_string(g.vertices[v]));
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    j["loops"] = std::move(loops);
    return j.dump();
}

}  // namespace

std::string export_graph(const ZdGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::dot: return export_dot(g);
        case ExportFormat::json: return export_json(g);
    }
    throw std::invalid_argument("export_graph: unknown format");
}

}  // namespace zdg
