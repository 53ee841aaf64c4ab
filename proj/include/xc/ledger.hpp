#pragma once

#include "xc/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace xc {

/// One verifiable identity: structured inputs plus the expected value,
/// tagged with a free-form provenance citation.
struct LedgerEntry {
    std::string id;
    std::string description;
    std::string citation;
    std::string kind;  // chow-identity | chi-identity | cohomology-vanishing |
                       // inequality | enumeration | family-invariant
    nlohmann::json inputs;
    nlohmann::json expected;
};

struct EntryResult {
    std::string id;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string citation;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json computed;
    std::uint64_t micros = 0;

    friend bool operator==(const EntryResult& a, const EntryResult& b) {
        return a.id == b.id && a.status == b.status && a.citation == b.citation &&
               a.expected == b.expected && a.computed == b.computed &&
               a.micros == b.micros;
    }
};

struct VerificationReport {
    std::uint64_t passed = 0, failed = 0, skipped = 0;
    std::vector<EntryResult> entries;  // sorted by id

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.passed == b.passed && a.failed == b.failed &&
               a.skipped == b.skipped && a.entries == b.entries;
    }
};

/// Parses {"version": 1, "entries": [...]}. Throws parse_error with the
/// offending entry's ordinal and id on malformed entries, unknown kinds or
/// duplicate ids.
std::vector<LedgerEntry> parse_ledger(std::string_view json_text);

std::vector<LedgerEntry> load_ledger_file(const std::string& path);

/// The ledger shipped with the tool, as JSON text.
const char* builtin_ledger_text();
std::vector<LedgerEntry> builtin_ledger();

/// Evaluates one entry; never throws (failures are folded into the status).
EntryResult evaluate_entry(const LedgerEntry& entry);

/// Evaluates every entry (concurrently unless parallel = false); the report
/// is sorted by id, so parallel and serial runs agree.
VerificationReport run_ledger(const std::vector<LedgerEntry>& entries, bool parallel);

/// Fixed-width table sorted by entry id, followed by a totals line.
std::string emit_report_text(const VerificationReport& r);

/// Compact JSON: {"version":1,"passed":..,"failed":..,"skipped":..,
/// "entries":[{"id","status","citation","expected","computed","micros"}]}
/// with exactly this key order. Byte-deterministic for equal reports.
std::string emit_report_json(const VerificationReport& r);

/// Inverse of emit_report_json.
VerificationReport report_from_json(std::string_view text);

/// Clears the per-entry timings (the only run-dependent report field).
void zero_timings(VerificationReport& r);

} // namespace xc
