#include "zdg/report.hpp"

#include "parallel.hpp"
#include "zdg/version.hpp"

#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace zdg {

using nlohmann::ordered_json;

std::vector<CharpolyRow> verify_charpoly(int max_n) {
    if (max_n < 2)
        throw std::invalid_argument("verify_charpoly: max_n must be >= 2");
    std::vector<CharpolyRow> rows(static_cast<std::size_t>(max_n) - 1);
    detail::parallel_for_index(rows.size(), [&](std::size_t i) {
        const int n = static_cast<int>(i) + 2;
        CharpolyRow row;
        row.n = n;
        row.oracle = charpoly_exact(
            adjacency_matrix(build_compressed_prime_power(n), /*include_loops=*/true));
        row.closed_form = closed_form_charpoly(n);
        row.match = row.oracle == row.closed_form;
        rows[i] = std::move(row);
    });
    return rows;
}

const std::vector<ErratumNote>& known_errata() {
    static const std::vector<ErratumNote> notes = {
        {"wiener_closed_form_denominator",
         "The even/odd Wiener closed forms are quoted elsewhere with denominator 2: "
         "(n-2)(3n-4)/2 and (n-1)(3n-7)/2. With denominator 2 neither anchor value "
         "is reproduced (n=6 gives 28 instead of 14, n=7 gives 42 instead of 21).",
         "Denominator 4 is used: (n-2)(3n-4)/4 for even n, (n-1)(3n-7)/4 for odd n. "
         "Cross-checked against the BFS oracle for every n in the sweep."},
        {"charpoly_n7_constant_term",
         "The n=7 characteristic polynomial is quoted elsewhere with constant term +1. "
         "The determinant of the order-6 loops-on adjacency matrix is -1, which fixes "
         "the constant term of det(lambda*I - M) at -1.",
         "Both the Berkowitz oracle and the closed form yield -1; the +1 variant is "
         "rejected."},
        {"charpoly_sign_pattern",
         "A quoted general sign expression -(-1)^floor((k+1)/2) for coefficient k "
         "contradicts the n=6 polynomial already at k=1.",
         "The sign of coefficient k is (-1)^floor((k+1)/2), giving the pattern "
         "-,-,+,+,-,-,...; verified coefficient-by-coefficient against the exact "
         "oracle for every swept n."}};
    return notes;
}

VerificationReport make_verification_report(int max_n) {
    VerificationReport r;
    r.version = std::string(kVersion);
    r.timestamp = utc_timestamp();
    r.charpoly = verify_charpoly(max_n);
    r.wiener = verify_wiener(max_n);
    r.errata = known_errata();
    r.overall_pass = true;
    for (const auto& row : r.charpoly) r.overall_pass = r.overall_pass && row.match;
    for (const auto& row : r.wiener) r.overall_pass = r.overall_pass && row.match;
    return r;
}

namespace {

ordered_json coeffs_to_json(const IntPolynomial& p) {
    auto arr = ordered_json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPolynomial coeffs_from_json(const ordered_json& arr) {
    std::vector<Int> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) coeffs.emplace_back(c.get_ref<const std::string&>());
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["version"] = r.version;
    j["timestamp"] = r.timestamp;
    auto charpoly = ordered_json::array();
    for (const auto& row : r.charpoly) {
        ordered_json jr;
        jr["n"] = row.n;
        jr["oracle"] = coeffs_to_json(row.oracle);
        jr["closed_form"] = coeffs_to_json(row.closed_form);
        jr["match"] = row.match;
        charpoly.push_back(std::move(jr));
    }
    j["charpoly"] = std::move(charpoly);
    auto wiener = ordered_json::array();
    for (const auto& row : r.wiener) {
        ordered_json jr;
        jr["n"] = row.n;
        jr["bfs"] = row.bfs;
        jr["closed_form"] = row.closed_form;
        jr["match"] = row.match;
        wiener.push_back(std::move(jr));
    }
    j["wiener"] = std::move(wiener);
    auto errata = ordered_json::array();
    for (const auto& note : r.errata) {
        ordered_json jn;
        jn["id"] = note.id;
        jn["description"] = note.description;
        jn["resolution"] = note.resolution;
        errata.push_back(std::move(jn));
    }
    j["errata"] = std::move(errata);
    j["overall_pass"] = r.overall_pass;
    return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
    try {
        const ordered_json j = ordered_json::parse(text);
        VerificationReport r;
        r.version = j.at("version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        for (const auto& jr : j.at("charpoly")) {
            CharpolyRow row;
            row.n = jr.at("n").get<int>();
            row.oracle = coeffs_from_json(jr.at("oracle"));
            row.closed_form = coeffs_from_json(jr.at("closed_form"));
            row.match = jr.at("match").get<bool>();
            r.charpoly.push_back(std::move(row));
        }
        for (const auto& jr : j.at("wiener")) {
            WienerRow row;
            row.n = jr.at("n").get<int>();
            row.bfs = jr.at("bfs").get<std::uint64_t>();
            row.closed_form = jr.at("closed_form").get<std::uint64_t>();
            row.match = jr.at("match").get<bool>();
            r.wiener.push_back(row);
        }
        for (const auto& jn : j.at("errata")) {
            ErratumNote note;
            note.id = jn.at("id").get<std::string>();
            note.description = jn.at("description").get<std::string>();
            note.resolution = jn.at("resolution").get<std::string>();
            r.errata.push_back(std::move(note));
        }
        r.overall_pass = j.at("overall_pass").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
}

std::string report_summary(const VerificationReport& r) {
    std::size_t charpoly_ok = 0, wiener_ok = 0;
    for (const auto& row : r.charpoly) charpoly_ok += row.match;
    for (const auto& row : r.wiener) wiener_ok += row.match;
    const int max_n =
        r.charpoly.empty() ? 0 : r.charpoly.back().n;

    std::ostringstream out;
    out << "zdg verification report " << r.version << " (" << r.timestamp << ")\n";
    out << "  charpoly  closed form vs Berkowitz oracle: " << charpoly_ok << "/"
        << r.charpoly.size() << " match (n = 2.." << max_n << ")\n";
    out << "  wiener    closed form vs BFS oracle:       " << wiener_ok << "/"
        << r.wiener.size() << " match (n = 2.." << max_n << ")\n";
    out << "  errata    documented discrepancies:        " << r.errata.size() << "\n";
    out << "  overall: " << (r.overall_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string utc_timestamp() {
    std::time_t t = 0;
    bool have_epoch = false;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0') {
            t = static_cast<std::time_t>(v);
            have_epoch = true;
        }
    }
    if (!have_epoch) t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace zdg
