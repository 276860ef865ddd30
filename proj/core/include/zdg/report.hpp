#pragma once

// Verification report: the closed-form-vs-oracle sweeps for both the
// characteristic polynomial and the Wiener index, plus the documented
// formula discrepancies, serialized as JSON.

#include "zdg/spectra.hpp"
#include "zdg/wiener.hpp"

#include <string>
#include <vector>

namespace zdg {

struct CharpolyRow {
    int n = 0;
    IntPolynomial oracle;       // Berkowitz on the order-(n-1) matrix
    IntPolynomial closed_form;  // coefficient rule
    bool match = false;

    friend bool operator==(const CharpolyRow&, const CharpolyRow&) = default;
};

// A known discrepancy between a quoted formula and the value the exact
// computation forces. Carried in every report so downstream consumers do
// not rediscover them.
struct ErratumNote {
    std::string id;
    std::string description;
    std::string resolution;

    friend bool operator==(const ErratumNote&, const ErratumNote&) = default;
};

struct VerificationReport {
    std::string version;
    std::string timestamp;  // ISO-8601 UTC
    std::vector<CharpolyRow> charpoly;
    std::vector<WienerRow> wiener;
    std::vector<ErratumNote> errata;
    bool overall_pass = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Berkowitz vs closed form for every n in 2..max_n, ordered by n.
std::vector<CharpolyRow> verify_charpoly(int max_n);

/// The fixed list of documented discrepancies.
const std::vector<ErratumNote>& known_errata();

/// Runs both sweeps up to max_n and assembles the report.
/// overall_pass is the conjunction of every row match.
VerificationReport make_verification_report(int max_n);

std::string report_to_json(const VerificationReport& r);

/// Inverse of report_to_json; throws std::invalid_argument on malformed
/// input. parse(serialize(r)) == r holds exactly.
VerificationReport report_from_json(const std::string& text);

/// Short human-readable summary, one line per section.
std::string report_summary(const VerificationReport& r);

/// Current UTC time as ISO-8601. Honors SOURCE_DATE_EPOCH when set, so
/// report output can be made byte-reproducible.
std::string utc_timestamp();

}  // namespace zdg
