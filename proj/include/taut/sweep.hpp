#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taut/correlator.hpp"
#include "taut/report.hpp"

namespace taut {

/// Inclusive integer range, written "lo..hi" or "n".
struct IntRange {
    int lo = 0;
    int hi = -1;

    static IntRange parse(std::string_view text);
    [[nodiscard]] bool empty() const { return hi < lo; }
    [[nodiscard]] bool contains(int x) const { return lo <= x && x <= hi; }
    [[nodiscard]] std::string str() const;
};

/// Relation names accepted by run_sweep.
const std::vector<std::string>& sweep_relations();

/// Parameter ranges for a sweep. Unset ranges take per-relation defaults
/// (see `default_sweep`).
struct SweepConfig {
    std::optional<IntRange> genus;
    std::optional<IntRange> r;
    std::optional<IntRange> s;
    std::optional<IntRange> m;
    std::optional<IntRange> levels;
    int n1 = 2;
    int n2 = 2;
};

/// Ranges actually used for a relation once defaults are filled in.
SweepConfig default_sweep(std::string_view relation, const SweepConfig& given = {});

/// Largest parameters allowed without --force.
struct DeskBounds {
    int max_genus;
    int max_fields;
    int max_level;
};
DeskBounds desk_bounds(std::string_view relation);

/// Empty when within bounds, otherwise a description of the violation.
std::optional<std::string> exceeds_desk_bounds(std::string_view relation, const SweepConfig& resolved);

/// One report per parameter tuple in enumeration order. Throws
/// std::invalid_argument for an unknown relation or an empty sweep.
std::vector<VerificationReport> run_sweep(CorrelatorEngine& engine, std::string_view relation,
                                          const SweepConfig& config);

/// Non-decreasing level sequences of the given length drawn from the range.
std::vector<std::vector<int>> level_multisets(int length, IntRange levels);

}  // namespace taut
