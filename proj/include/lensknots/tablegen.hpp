#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lensknots/families.hpp"

namespace lensknots {

/// One table line: a canonical lens space and every canonical dual class the
/// non-excluded families realize for it.
struct TableRow {
    i64 p = 2;
    i64 q = 1;
    std::vector<i64> lambdas;  // strictly increasing canonical values

    friend bool operator==(const TableRow&, const TableRow&) = default;
    friend auto operator<=>(const TableRow&, const TableRow&) = default;
};

/// Set difference between two tables at (p, q, lambda) granularity.
struct DiffReport {
    std::vector<std::array<i64, 3>> missing;  // in golden, not generated
    std::vector<std::array<i64, 3>> extra;    // generated, not in golden

    bool identical() const { return missing.empty() && extra.empty(); }
};

/// One reviewed exception: a golden triple the generator is allowed to miss,
/// with the reviewer's reason.
struct AllowlistEntry {
    i64 p = 2;
    i64 q = 1;
    i64 lambda = 1;
    std::string justification;
};

/// Union of enumerate_family over all families not in `excluded`, grouped by
/// (p, q) with lambda values merged, deduplicated, and sorted; rows sorted by
/// (p, q). Families run in parallel; output is independent of thread count.
std::vector<TableRow> generate_table(i64 p_max, const std::set<FamilyId>& excluded);

/// Parse the tab-separated table format: three columns `p q lambda`, one
/// lambda per line; a line may leave p (or p and q) empty to inherit them
/// from the line above; `#` starts a comment line; blank lines are skipped.
/// A line with p filled but q empty is malformed. Entries must be canonical
/// and each row's lambdas strictly increasing; rows must not restate an
/// earlier (p, q). Throws ParseError (with 1-based line) or NonCanonical.
std::vector<TableRow> parse_golden(std::string_view text);

/// Inverse of parse_golden on canonical tables: rows sorted by (p, q), one
/// lambda per line, p and q columns left empty when inherited.
std::string serialize_table(const std::vector<TableRow>& rows);

/// Triple-level set difference, both sides taken as (p,q,lambda) sets.
DiffReport diff_tables(const std::vector<TableRow>& generated,
                       const std::vector<TableRow>& golden);

/// Render a diff in the table format under `missing:` / `extra:` headers
/// (full triples, no continuation), ending with `# missing=<n> extra=<m>`.
std::string render_diff(const DiffReport& diff);

/// Parse the four-column allowlist format `p q lambda justification`
/// (comments and blank lines as in parse_golden; the justification must be
/// non-empty). Throws ParseError or NonCanonical.
std::vector<AllowlistEntry> parse_allowlist(std::string_view text);

/// Remove allowlisted triples from `missing` (extras are never filtered).
DiffReport apply_allowlist(DiffReport diff,
                           const std::vector<AllowlistEntry>& allowlist);

}  // namespace lensknots
