// zdg: command-line front end for zero-divisor graphs of Z_m.
//
// Subcommands: classes, graph, charpoly, wiener, triangle, verify.
// Exit codes: 0 success/pass, 1 verification mismatch, 2 usage error.

#include "zdg/modring.hpp"
#include "zdg/report.hpp"
#include "zdg/spectra.hpp"
#include "zdg/version.hpp"
#include "zdg/wiener.hpp"
#include "zdg/zdgraph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::int64_t full_graph_cap() {
    const char* env = std::getenv("ZDG_MAX_M");
    if (!env) return zdg::kDefaultFullGraphCap;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value < 2)
        throw std::invalid_argument("ZDG_MAX_M must be an integer >= 2, got \"" +
                                    std::string(env) + "\"");
    return value;
}

std::int64_t checked_prime_power(std::int64_t p, int n) {
    if (n < 1) throw std::invalid_argument("--n must be >= 1 with --p");
    unsigned __int128 m = 1;
    for (int i = 0; i < n; ++i) {
        m *= static_cast<unsigned __int128>(p);
        if (m > static_cast<unsigned __int128>(INT64_MAX))
            throw std::invalid_argument("p^n exceeds the modulus range");
    }
    return static_cast<std::int64_t>(m);
}

// Graph selector shared by `graph` and `wiener`: --m M, --n N, or --p P --n N.
struct Selector {
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> p;
    std::optional<int> n;
    bool compressed = false;
};

zdg::ZdGraph build_graph(const Selector& sel) {
    if (sel.m) {
        if (sel.p || sel.n)
            throw std::invalid_argument("--m cannot be combined with --p/--n");
        const zdg::Modulus mod(*sel.m);
        return sel.compressed ? zdg::build_compressed_graph(mod)
                              : zdg::build_full_graph(mod, full_graph_cap());
    }
    if (!sel.n)
        throw std::invalid_argument("a selector is required: --m M, --n N, or --p P --n N");
    if (sel.p) {
        if (*sel.p < 2 || !zdg::is_prime(static_cast<std::uint64_t>(*sel.p)))
            throw std::invalid_argument("--p must be a prime");
        const zdg::Modulus mod(checked_prime_power(*sel.p, *sel.n));
        return sel.compressed ? zdg::build_compressed_graph(mod)
                              : zdg::build_full_graph(mod, full_graph_cap());
    }
    // Bare --n: the structural compressed prime-power graph.
    return zdg::build_compressed_prime_power(*sel.n);
}

// The closed forms apply to compressed graphs of Z_{p^n}; resolve the
// exponent when the selector denotes one.
std::optional<int> closed_form_exponent(const Selector& sel) {
    if (sel.n && !sel.m && !sel.p) return sel.n;
    if (!sel.compressed) return std::nullopt;
    if (sel.p && sel.n) return sel.n;
    if (sel.m) {
        const auto factors = zdg::factorize(*sel.m);
        if (factors.size() == 1 && factors[0].second >= 2) return factors[0].second;
    }
    return std::nullopt;
}

int cmd_classes(std::int64_t m, const std::string& format) {
    const auto classes = zdg::ann_classes(zdg::Modulus(m));
    if (format == "csv") {
        std::cout << "key,representative,size\n";
        for (const auto& c : classes)
            std::cout << c.key << ',' << c.representative << ',' << c.size << '\n';
    } else {
        ordered_json j;
        j["m"] = std::to_string(m);
        auto arr = ordered_json::array();
        for (const auto& c : classes) {
            ordered_json jc;
            jc["key"] = std::to_string(c.key);
            jc["representative"] = std::to_string(c.representative);
            jc["size"] = std::to_string(c.size);
            arr.push_back(std::move(jc));
        }
        j["classes"] = std::move(arr);
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_graph(const Selector& sel, const std::string& format) {
    const zdg::ZdGraph g = build_graph(sel);
    std::cout << zdg::export_graph(g, zdg::parse_export_format(format)) << '\n';
    return kExitOk;
}

int cmd_charpoly(int n, const std::string& mode) {
    if (n < 2) throw std::invalid_argument("--n must be >= 2");
    if (mode == "closed-form") {
        std::cout << zdg::polynomial_json(zdg::closed_form_charpoly(n)) << '\n';
        return kExitOk;
    }
    const auto matrix =
        zdg::adjacency_matrix(zdg::build_compressed_prime_power(n), true);
    if (mode == "oracle") {
        std::cout << zdg::polynomial_json(zdg::charpoly_exact(matrix)) << '\n';
        return kExitOk;
    }
    const zdg::IntPolynomial oracle = zdg::charpoly_exact(matrix);
    const zdg::IntPolynomial closed = zdg::closed_form_charpoly(n);
    const bool match = oracle == closed;
    ordered_json j;
    j["n"] = n;
    j["match"] = match;
    j["closed_form"] = ordered_json::parse(zdg::polynomial_json(closed));
    j["oracle"] = ordered_json::parse(zdg::polynomial_json(oracle));
    std::cout << j.dump() << '\n';
    return match ? kExitOk : kExitMismatch;
}

int cmd_wiener(const Selector& sel, const std::string& mode) {
    if (mode == "bfs") {
        std::cout << zdg::wiener_index(build_graph(sel)) << '\n';
        return kExitOk;
    }
    const auto n = closed_form_exponent(sel);
    if (!n)
        throw std::invalid_argument(
            "mode \"" + mode +
            "\" needs a compressed prime-power selector: --n N, or --p P --n N / "
            "--m p^n together with --compressed");
    if (mode == "closed-form") {
        std::cout << zdg::wiener_closed_form(*n) << '\n';
        return kExitOk;
    }
    const std::uint64_t bfs = zdg::wiener_index(build_graph(sel));
    const std::uint64_t closed = zdg::wiener_closed_form(*n);
    ordered_json j;
    j["n"] = *n;
    j["bfs"] = bfs;
    j["closed_form"] = closed;
    j["match"] = bfs == closed;
    std::cout << j.dump() << '\n';
    return bfs == closed ? kExitOk : kExitMismatch;
}

int cmd_triangle(int rows, const std::string& format) {
    const auto triangle = zdg::coefficient_triangle(rows);
    if (format == "csv") {
        std::cout << zdg::triangle_csv(triangle);
    } else {
        ordered_json j;
        j["max_n"] = rows;
        auto arr = ordered_json::array();
        for (std::size_t i = 0; i < triangle.size(); ++i) {
            ordered_json jr;
            jr["n"] = static_cast<int>(i) + 2;
            auto mags = ordered_json::array();
            for (const zdg::Int& v : triangle[i]) mags.push_back(v.get_str());
            jr["magnitudes"] = std::move(mags);
            arr.push_back(std::move(jr));
        }
        j["rows"] = std::move(arr);
        std::cout << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_verify(int max_n, const std::string& out_path) {
    const zdg::VerificationReport report = zdg::make_verification_report(max_n);
    std::ofstream out(out_path);
    if (!out)
        throw std::invalid_argument("cannot open report path for writing: " + out_path);
    out << zdg::report_to_json(report) << '\n';
    out.flush();
    if (!out)
        throw std::invalid_argument("failed while writing report to: " + out_path);
    std::cout << zdg::report_summary(report);
    return report.overall_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graphs of Z_m: exact spectra and Wiener indices"};
    app.set_version_flag("--version", std::string(zdg::kVersion));
    app.require_subcommand(1);

    // classes
    auto* classes = app.add_subcommand("classes", "List the annihilator classes of Z_m");
    std::int64_t classes_m = 0;
    std::string classes_format = "json";
    classes->add_option("--m", classes_m, "modulus (>= 2)")->required();
    classes->add_option("--format", classes_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // graph
    auto* graph = app.add_subcommand("graph", "Build and export a zero-divisor graph");
    std::int64_t graph_m = 0, graph_p = 0;
    int graph_n = 0;
    bool graph_compressed = false;
    std::string graph_format = "json";
    auto* graph_m_opt = graph->add_option("--m", graph_m, "modulus selector");
    auto* graph_p_opt = graph->add_option("--p", graph_p, "prime, combined with --n");
    auto* graph_n_opt =
        graph->add_option("--n", graph_n, "prime-power exponent selector");
    graph->add_flag("--compressed", graph_compressed,
                    "compressed graph (one vertex per annihilator class)");
    graph->add_option("--format", graph_format, "output format")
        ->check(CLI::IsMember({"dot", "json"}));

    // charpoly
    auto* charpoly = app.add_subcommand(
        "charpoly", "Characteristic polynomial of the compressed graph of Z_{p^n}");
    int charpoly_n = 0;
    std::string charpoly_mode = "both";
    charpoly->add_option("--n", charpoly_n, "prime-power exponent (>= 2)")->required();
    charpoly->add_option("--mode", charpoly_mode, "computation route")
        ->check(CLI::IsMember({"closed-form", "oracle", "both"}));

    // wiener
    auto* wiener = app.add_subcommand("wiener", "Wiener index of a zero-divisor graph");
    std::int64_t wiener_m = 0, wiener_p = 0;
    int wiener_n = 0;
    bool wiener_compressed = false;
    std::string wiener_mode = "bfs";
    auto* wiener_m_opt = wiener->add_option("--m", wiener_m, "modulus selector");
    auto* wiener_p_opt = wiener->add_option("--p", wiener_p, "prime, combined with --n");
    auto* wiener_n_opt =
        wiener->add_option("--n", wiener_n, "prime-power exponent selector");
    wiener->add_flag("--compressed", wiener_compressed,
                     "compressed graph (required for closed-form modes with --m/--p)");
    wiener->add_option("--mode", wiener_mode, "computation route")
        ->check(CLI::IsMember({"bfs", "closed-form", "both"}));

    // triangle
    auto* triangle =
        app.add_subcommand("triangle", "Coefficient-magnitude triangle rows n = 2..R");
    int triangle_rows = 0;
    std::string triangle_format = "csv";
    triangle->add_option("--rows", triangle_rows, "largest n (>= 2)")->required();
    triangle->add_option("--format", triangle_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run the closed-form-vs-oracle sweeps and persist a report");
    int verify_max_n = 0;
    std::string verify_out;
    verify->add_option("--max-n", verify_max_n, "sweep bound (>= 2)")->required();
    verify->add_option("--out", verify_out, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classes) return cmd_classes(classes_m, classes_format);
        if (*graph) {
            Selector sel;
            if (graph_m_opt->count()) sel.m = graph_m;
            if (graph_p_opt->count()) sel.p = graph_p;
            if (graph_n_opt->count()) sel.n = graph_n;
            sel.compressed = graph_compressed;
            return cmd_graph(sel, graph_format);
        }
        if (*charpoly) return cmd_charpoly(charpoly_n, charpoly_mode);
        if (*wiener) {
            Selector sel;
            if (wiener_m_opt->count()) sel.m = wiener_m;
            if (wiener_p_opt->count()) sel.p = wiener_p;
            if (wiener_n_opt->count()) sel.n = wiener_n;
            sel.compressed = wiener_compressed;
            return cmd_wiener(sel, wiener_mode);
        }
        if (*triangle) return cmd_triangle(triangle_rows, triangle_format);
        if (*verify) return cmd_verify(verify_max_n, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
