#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpos/bounds.hpp"

namespace qpos::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

enum class Format { text, json, csv };

/// Thrown for malformed or invalid command-line input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(std::string_view s);
CoprimeTriple parse_triple(std::string_view s);
std::vector<std::int64_t> parse_int_list(std::string_view s);
ThetaForm parse_form(std::string_view s);

/// One row of a threshold table.
struct TableRow {
    std::int64_t a = 0, b = 0, c = 0;
    std::string A, B, D;
    std::int64_t K = 0;
    std::vector<std::int64_t> N;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableSpec {
    const char* caption;
    const char* A;
    const char* B;
    std::vector<std::array<std::int64_t, 3>> triples;
};

/// The five tables in their canonical order.
const std::vector<TableSpec>& canonical_tables();

TableRow compute_row(const FamilyParams& p);

/// Reads "a,b,c,A,B,D,K,N_1,..." lines; '#' starts a comment.
std::vector<TableRow> read_expected(const std::string& path);

/// Per-cell differences between an expected and a computed row.
std::vector<std::string> diff_rows(const TableRow& expected, const TableRow& actual);

std::string format_row_text(const TableRow& row);
std::string format_row_csv(const TableRow& row);

/// Default location of the expected-table file shipped with the sources.
std::string default_expected_path();

/// Parses argv and dispatches to a subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qpos::cli
