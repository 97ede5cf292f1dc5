#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prmkit/ghw.hpp"
#include "prmkit/oracle.hpp"

namespace prmkit {

enum class TableId { GoodParams, Q3M2, Q3M3, Q4M2, Q5M2, Q3M3Bis, Q4M2Bis, Q5M2Bis };

std::string to_string(TableId id);
std::optional<TableId> table_from_string(std::string_view s);
std::vector<TableId> all_tables();

/// One GHW cell: an exact value when lo == hi, otherwise the interval "lo-hi".
struct GhwCell {
    int d = 0;
    int r = 0;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    std::string text() const;
    bool operator==(const GhwCell&) const = default;
};

struct GhwTable {
    TableId id{};
    std::uint64_t Q = 0;
    int m = 0;
    bool refined = false;
    std::vector<GhwCell> cells;  // sorted by (d, r)
};

/// Field size, m and refinement flag of a GHW table; throws for GoodParams.
GhwTable ghw_table_shape(TableId id);

/// Rows d = 1..m(Q-1) (only d not divisible by Q-1 when refined), columns r = 2..k.
GhwTable generate_ghw_table(TableId id, GhwEngine& engine);

enum class DistanceStatus { Exact, Bound, Unknown };

struct GoodParamsRow {
    int q = 0;
    int s = 0;
    int m = 0;
    int lambda = 0;
    bool dual = false;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    /// Exact oracle value, a proven lower bound, or nothing.
    DistanceStatus status = DistanceStatus::Unknown;
    std::uint64_t d1 = 0;
    std::string method;
};

/// Subfield subcode (or its dual) of PRM_{d_lambda}(m) over GF(q^s) with its distance.
GoodParamsRow good_params_row(int q, int s, int m, int lambda, bool dual, const MinDistanceOptions& opt = {});
std::vector<GoodParamsRow> generate_good_params(const MinDistanceOptions& opt = {});

/// Embedded transcription for a table, CSV with '#' comments.
std::string_view golden_source(TableId id);

std::vector<GhwCell> parse_ghw_cells(std::string_view csv);
std::vector<GoodParamsRow> parse_good_params(std::string_view csv);

struct CheckResult {
    bool pass = true;
    std::vector<std::string> mismatches;
};

CheckResult check_ghw_table(const GhwTable& got, const std::vector<GhwCell>& golden);
/// n and k must match; an exact d1 must reach the printed bound, as must a proven lower bound.
CheckResult check_good_params(const std::vector<GoodParamsRow>& got, const std::vector<GoodParamsRow>& golden);

}  // namespace prmkit
