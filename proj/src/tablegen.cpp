#include "lensknots/tablegen.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "lensknots/errors.hpp"
#include "lensknots/lens.hpp"

namespace lensknots {

namespace {

// --- text format helpers ----------------------------------------------------

// Splits one line at tabs. Fields may be empty; the separator count fixes the
// arity, so "a\tb" has two fields and "a\t\t" has three.
std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

i64 parse_int_field(std::string_view field, const char* what, int line) {
    i64 value = 0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last)
        throw ParseError(std::string("expected an integer for ") + what +
                             ", got \"" + std::string(field) + "\"",
                         line);
    return value;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
    int line_number = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        ++line_number;
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos
                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        fn(line_number, split_tabs(line));
    }
}

// Shared validity gates for a (p, q, lambda) triple read from text. Range
// problems are ParseError; values that name a class by a non-minimal
// representative are NonCanonical.
void check_p(i64 p, int line) {
    if (p < 2)
        throw ParseError("p must be at least 2, got " + std::to_string(p),
                         line);
}

void check_q_canonical(i64 p, i64 q, int line) {
    try {
        if (normalize(p, q) == LensSpace{p, q}) return;
    } catch (const NonUnit&) {
    }
    throw NonCanonical("line " + std::to_string(line) + ": (" +
                       std::to_string(p) + ", " + std::to_string(q) +
                       ") is not a canonical lens-space pair");
}

void check_lambda_canonical(i64 p, i64 lambda, int line) {
    try {
        if (canonical_lambda(p, lambda).value == lambda) return;
    } catch (const NonUnit&) {
    }
    throw NonCanonical("line " + std::to_string(line) + ": " +
                       std::to_string(lambda) +
                       " is not a canonical dual class mod " +
                       std::to_string(p));
}

std::set<std::array<i64, 3>> triple_set(const std::vector<TableRow>& rows) {
    std::set<std::array<i64, 3>> out;
    for (const auto& r : rows)
        for (i64 l : r.lambdas) out.insert({r.p, r.q, l});
    return out;
}

void append_triples(std::ostringstream& os,
                    const std::vector<std::array<i64, 3>>& triples) {
    for (const auto& t : triples)
        os << t[0] << '\t' << t[1] << '\t' << t[2] << '\n';
}

}  // namespace

// --- generation --------------------------------------------------------------

std::vector<TableRow> generate_table(i64 p_max,
                                     const std::set<FamilyId>& excluded) {
    if (p_max < 2)
        throw std::invalid_argument("generate_table: p_max must be at least 2");

    std::vector<FamilyId> active;
    for (FamilyId f : kAllFamilies)
        if (!excluded.count(f)) active.push_back(f);

    // One task per family; results are merged in the fixed kAllFamilies
    // order, so the output does not depend on scheduling.
    std::vector<std::future<std::vector<FamilyEmission>>> tasks;
    tasks.reserve(active.size());
    for (FamilyId f : active)
        tasks.push_back(
            std::async(std::launch::async | std::launch::deferred,
                       [f, p_max] { return enumerate_family(f, p_max); }));

    std::map<std::pair<i64, i64>, std::set<i64>> grouped;
    for (auto& task : tasks)
        for (const auto& e : task.get())
            grouped[{e.result.space.p, e.result.space.q}].insert(
                e.result.lambda.value);

    std::vector<TableRow> rows;
    rows.reserve(grouped.size());
    for (const auto& [pq, lambdas] : grouped)
        rows.push_back(TableRow{pq.first, pq.second,
                                std::vector<i64>(lambdas.begin(),
                                                 lambdas.end())});
    return rows;
}

// --- parsing -----------------------------------------------------------------

std::vector<TableRow> parse_golden(std::string_view text) {
    std::vector<TableRow> rows;
    std::set<std::pair<i64, i64>> seen;
    bool have_row = false;

    for_each_data_line(text, [&](int line, const auto& fields) {
        if (fields.size() != 3)
            throw ParseError("expected 3 tab-separated columns, got " +
                                 std::to_string(fields.size()),
                             line);
        const auto& [pf, qf, lf] = std::tie(fields[0], fields[1], fields[2]);

        i64 p = 0, q = 0;
        bool starts_row = false;
        if (!pf.empty()) {
            if (qf.empty())
                throw ParseError("a line giving p must also give q", line);
            p = parse_int_field(pf, "p", line);
            q = parse_int_field(qf, "q", line);
            starts_row = true;
        } else if (!qf.empty()) {
            if (!have_row)
                throw ParseError("q given before any row established p",
                                 line);
            p = rows.back().p;
            q = parse_int_field(qf, "q", line);
            starts_row = true;
        } else if (!have_row) {
            throw ParseError("continuation line before any complete row",
                             line);
        }

        if (starts_row) {
            check_p(p, line);
            check_q_canonical(p, q, line);
            if (!(have_row && rows.back().p == p && rows.back().q == q)) {
                if (!seen.insert({p, q}).second)
                    throw ParseError(
                        "row (" + std::to_string(p) + ", " +
                            std::to_string(q) +
                            ") restated after other rows intervened",
                        line);
                rows.push_back(TableRow{p, q, {}});
                have_row = true;
            }
        }

        TableRow& row = rows.back();
        i64 lambda = parse_int_field(lf, "lambda", line);
        check_lambda_canonical(row.p, lambda, line);
        if (!row.lambdas.empty() && row.lambdas.back() >= lambda)
            throw ParseError(
                "dual classes within a row must be strictly increasing",
                line);
        row.lambdas.push_back(lambda);
    });
    return rows;
}

std::string serialize_table(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    i64 prev_p = -1;
    for (const auto& r : rows) {
        bool first = true;
        for (i64 l : r.lambdas) {
            if (first && r.p != prev_p)
                os << r.p << '\t' << r.q << '\t' << l << '\n';
            else if (first)
                os << '\t' << r.q << '\t' << l << '\n';
            else
                os << '\t' << '\t' << l << '\n';
            first = false;
        }
        prev_p = r.p;
    }
    return os.str();
}

// --- diffs -------------------------------------------------------------------

DiffReport diff_tables(const std::vector<TableRow>& generated,
                       const std::vector<TableRow>& golden) {
    auto gen = triple_set(generated);
    auto gold = triple_set(golden);
    DiffReport d;
    std::set_difference(gold.begin(), gold.end(), gen.begin(), gen.end(),
                        std::back_inserter(d.missing));
    std::set_difference(gen.begin(), gen.end(), gold.begin(), gold.end(),
                        std::back_inserter(d.extra));
    return d;
}

std::string render_diff(const DiffReport& diff) {
    std::ostringstream os;
    os << "missing:\n";
    append_triples(os, diff.missing);
    os << "extra:\n";
    append_triples(os, diff.extra);
    os << "# missing=" << diff.missing.size() << " extra=" << diff.extra.size()
       << '\n';
    return os.str();
}

// --- allowlist ---------------------------------------------------------------

std::vector<AllowlistEntry> parse_allowlist(std::string_view text) {
    std::vector<AllowlistEntry> entries;
    for_each_data_line(text, [&](int line, const auto& fields) {
        if (fields.size() != 4)
            throw ParseError(
                "expected 4 tab-separated columns (p, q, lambda, "
                "justification), got " +
                    std::to_string(fields.size()),
                line);
        AllowlistEntry e;
        e.p = parse_int_field(fields[0], "p", line);
        e.q = parse_int_field(fields[1], "q", line);
        e.lambda = parse_int_field(fields[2], "lambda", line);
        e.justification = std::string(fields[3]);
        if (e.justification.empty())
            throw ParseError("allowlist entries need a justification", line);
        check_p(e.p, line);
        check_q_canonical(e.p, e.q, line);
        check_lambda_canonical(e.p, e.lambda, line);
        entries.push_back(std::move(e));
    });
    return entries;
}

DiffReport apply_allowlist(DiffReport diff,
                           const std::vector<AllowlistEntry>& allowlist) {
    std::set<std::array<i64, 3>> allowed;
    for (const auto& e : allowlist) allowed.insert({e.p, e.q, e.lambda});
    std::erase_if(diff.missing,
                  [&](const auto& t) { return allowed.count(t) != 0; });
    return diff;
}

}  // namespace lensknots
