#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncolor/bigint.hpp"
#include "ncolor/constraint.hpp"

namespace ncolor {

/// One (constraint, n) entry of the method-agreement matrix. Recurrence
/// and closed-form counts are absent where no such method applies.
struct MatrixCell {
    std::string constraint;
    int n = 0;
    BigInt enum_count;
    std::optional<BigInt> rec_count;
    std::optional<BigInt> formula_count;
    bool agree = true;
};

/// One (bijection instance, n) entry. round_trip_failures counts every
/// violation found: an inverse that does not return the source, a forward
/// image outside the target family, a family member the inverse-then-
/// forward pass does not reproduce, or an image set differing from the
/// enumerated family.
struct BijectionCheck {
    std::string name;
    int n = 0;
    long long domain_size = 0;
    long long image_size = 0;
    long long round_trip_failures = 0;
};

struct CheckReport {
    int max_n = 0;
    std::vector<MatrixCell> cells;
    std::vector<BijectionCheck> bijections;
    bool overall = true;
};

/// The shipped grid: single allowed colors 1..5, allowed pairs b < c <= 5,
/// allowed prefixes 1..c for c <= 4, prohibited prefixes 1..d for d <= 3,
/// prohibited {2}, four modular classes, no11 and unrestricted. Grid
/// entries are plain constraint descriptors, so extending the grid is a
/// data change.
std::vector<ColorConstraint> default_grid();

/// Parses one constraint descriptor per entry of a JSON array of strings.
std::vector<ColorConstraint> grid_from_json(const nlohmann::json& value);

/// Enumerates, runs the recurrence and the closed form (where each
/// applies) for every grid constraint and n <= max_n, records agreement,
/// and adds the per-part-count and odd-versus-no11 identity cells.
CheckReport run_matrix(int max_n, const std::vector<ColorConstraint>& grid = default_grid());

/// Exhaustive round-trip and image-coverage checks for every bijection
/// instance: prop5-minparts (c <= 5), prop5-onec (2 <= c <= 5),
/// prop7-typed (b < c <= 5), prop7-mixed (2 <= b < c <= 5), prop11
/// (d <= 3), prop12-rect, prop13-mod3 (n capped at 10 because the target
/// family lives at 3n+2), prop14-binary (m <= 4, 2 <= i <= m), prop15-odd.
CheckReport run_bijections(int max_n);

/// run_matrix and run_bijections combined into one report.
CheckReport run_check(int max_n, const std::vector<ColorConstraint>& grid = default_grid());

/// Stable-key-order JSON; counts are decimal strings so values above 64
/// bits survive.
nlohmann::ordered_json report_json(const CheckReport& report);

/// Human-readable summary table.
std::string report_summary(const CheckReport& report);

}  // namespace ncolor
