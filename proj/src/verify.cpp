#include "ncolor/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <utility>

#include "ncolor/bijections.hpp"
#include "ncolor/closed_form.hpp"
#include "ncolor/enumerate.hpp"
#include "ncolor/recurrence.hpp"

namespace ncolor {

namespace {

constexpr int kProp13Cap = 10;  // its target family lives at 3n+2

std::string instance_name(const std::string& base, const std::string& params) {
    return params.empty() ? base : base + "[" + params + "]";
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

std::vector<MatrixCell> constraint_cells(const ColorConstraint& constraint, int max_n, int cap) {
    std::vector<MatrixCell> cells;
    const std::optional<CountSequence> rec = recurrence_for(constraint, max_n);
    for (int n = 0; n <= max_n; ++n) {
        MatrixCell cell;
        cell.constraint = constraint.describe();
        cell.n = n;
        cell.enum_count = count_colored({.n = n, .constraint = constraint, .parts = {}, .cap = cap});
        if (rec) {
            cell.rec_count = rec->values[static_cast<std::size_t>(n)];
        }
        cell.formula_count = closed_form_count(constraint, n);
        cell.agree = (!cell.rec_count || *cell.rec_count == cell.enum_count) &&
                     (!cell.formula_count || *cell.formula_count == cell.enum_count);
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::vector<MatrixCell> by_parts_cells(int max_n, int cap) {
    std::vector<MatrixCell> cells;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m <= n + 1; ++m) {
            MatrixCell cell;
            cell.constraint = "all@parts=" + std::to_string(m);
            cell.n = n;
            cell.enum_count = count_colored(
                {.n = n, .constraint = ColorConstraint::unrestricted(), .parts = m, .cap = cap});
            cell.formula_count = count_by_parts(n, m);
            cell.agree = *cell.formula_count == cell.enum_count;
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

/// Odd-color counts against no-1_1 counts of n and n-1 added together.
std::vector<MatrixCell> odd_identity_cells(int max_n, int cap) {
    std::vector<MatrixCell> cells;
    const ColorConstraint odd = ColorConstraint::modular(2, {1});
    const ColorConstraint no11 = ColorConstraint::no_part_one_one();
    const CountSequence rec = seq_modular(2, {1}, max_n);
    BigInt previous_b = 0;
    for (int n = 0; n <= max_n; ++n) {
        const BigInt b = count_colored({.n = n, .constraint = no11, .parts = {}, .cap = cap});
        MatrixCell cell;
        cell.constraint = "prop15-identity";
        cell.n = n;
        cell.enum_count = count_colored({.n = n, .constraint = odd, .parts = {}, .cap = cap});
        cell.rec_count = rec.values[static_cast<std::size_t>(n)];
        cell.formula_count = b + previous_b;
        cell.agree =
            cell.enum_count == *cell.rec_count && cell.enum_count == *cell.formula_count;
        cells.push_back(std::move(cell));
        previous_b = b;
    }
    return cells;
}

// ---------------------------------------------------------------------------
// Bijection checks
// ---------------------------------------------------------------------------

using ColoredToRegular = std::function<RegularComposition(const ColoredComposition&)>;
using RegularToColored = std::function<ColoredComposition(const RegularComposition&)>;

/// Round-trips and image coverage for a map between the colored
/// compositions under `constraint` (at sum domain_n) and a regular family
/// (at sum image_n).
BijectionCheck check_map(const std::string& name, int n, int domain_n,
                         const ColorConstraint& constraint, int image_n,
                         const RegularFamily& family, const ColoredToRegular& forward,
                         const RegularToColored& inverse, int cap) {
    BijectionCheck result;
    result.name = name;
    result.n = n;
    const int family_cap = std::max(cap, image_n);
    std::vector<RegularComposition> images;
    try {
        const std::vector<ColoredComposition> domain =
            list_colored({.n = domain_n, .constraint = constraint, .parts = {}, .cap = cap});
        result.domain_size = static_cast<long long>(domain.size());
        for (const ColoredComposition& x : domain) {
            const RegularComposition y = forward(x);
            if (!family_contains(image_n, family, y) || inverse(y) != x) {
                ++result.round_trip_failures;
            }
            images.push_back(y);
        }
        std::vector<RegularComposition> members = list_regular(image_n, family, family_cap);
        result.image_size = static_cast<long long>(members.size());
        for (const RegularComposition& y : members) {
            if (forward(inverse(y)) != y) {
                ++result.round_trip_failures;
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(members.begin(), members.end());
        if (images != members) {
            ++result.round_trip_failures;
        }
    } catch (const std::exception&) {
        ++result.round_trip_failures;
    }
    return result;
}

void enumerate_mark_sets(long long positions, int count,
                         const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> marks(static_cast<std::size_t>(count));
    auto step = [&](auto&& self, int index, long long next) -> void {
        if (index == count) {
            visit(marks);
            return;
        }
        for (long long value = next; value <= positions - (count - index - 1); ++value) {
            marks[static_cast<std::size_t>(index)] = value;
            self(self, index + 1, value + 1);
        }
    };
    step(step, 0, 1);
}

BijectionCheck check_rectangles(int n, int cap) {
    BijectionCheck result;
    result.name = "prop12-rect";
    result.n = n;
    try {
        std::vector<ColoredComposition> images;
        for (int k = 0; k <= n / 2; ++k) {
            enumerate_mark_sets(n + k, 3 * k, [&](const std::vector<long long>& marks) {
                ++result.domain_size;
                const MarkedRectangle rect{n + k, marks};
                const ColoredComposition comp = rectangle_to_composition(rect);
                if (comp.sum() != n || composition_to_rectangle(comp) != rect) {
                    ++result.round_trip_failures;
                }
                images.push_back(comp);
            });
        }
        std::vector<ColoredComposition> members =
            list_colored({.n = n, .constraint = ColorConstraint::prohibited({2}), .parts = {}, .cap = cap});
        result.image_size = static_cast<long long>(members.size());
        for (const ColoredComposition& comp : members) {
            if (rectangle_to_composition(composition_to_rectangle(comp)) != comp) {
                ++result.round_trip_failures;
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(members.begin(), members.end());
        if (images != members) {
            ++result.round_trip_failures;
        }
    } catch (const std::exception&) {
        ++result.round_trip_failures;
    }
    return result;
}

BijectionCheck check_binary(int n, int m, int i, int cap) {
    BijectionCheck result;
    result.name = instance_name("prop14-binary", "m=" + std::to_string(m) + ",i=" + std::to_string(i));
    result.n = n;
    try {
        const std::vector<ColoredComposition> domain = list_colored(
            {.n = n, .constraint = ColorConstraint::modular(m, {i}), .parts = {}, .cap = cap});
        result.domain_size = static_cast<long long>(domain.size());
        std::vector<std::string> images;
        for (const ColoredComposition& x : domain) {
            const std::string bits = binary_from_modular(x, m, i);
            if (static_cast<int>(bits.size()) != n - 1 || !in_binary_family(bits, m, i) ||
                modular_from_binary(bits, m, i) != x) {
                ++result.round_trip_failures;
            }
            images.push_back(bits);
        }
        // All candidate strings of length n-1, kept when they lie in the family.
        std::vector<std::string> members;
        std::string bits(static_cast<std::size_t>(std::max(n - 1, 0)), '0');
        auto build = [&](auto&& self, int index) -> void {
            if (index == n - 1) {
                if (in_binary_family(bits, m, i)) {
                    members.push_back(bits);
                }
                return;
            }
            for (char bit : {'0', '1'}) {
                bits[static_cast<std::size_t>(index)] = bit;
                self(self, index + 1);
            }
        };
        if (n >= 2) {
            build(build, 0);
        }
        result.image_size = static_cast<long long>(members.size());
        for (const std::string& y : members) {
            if (binary_from_modular(modular_from_binary(y, m, i), m, i) != y) {
                ++result.round_trip_failures;
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(members.begin(), members.end());
        if (images != members) {
            ++result.round_trip_failures;
        }
    } catch (const std::exception&) {
        ++result.round_trip_failures;
    }
    return result;
}

BijectionCheck check_odd_union(int n, int cap) {
    BijectionCheck result;
    result.name = "prop15-odd";
    result.n = n;
    try {
        const ColorConstraint no11 = ColorConstraint::no_part_one_one();
        std::vector<std::pair<ColoredComposition, bool>> domain;
        for (const ColoredComposition& x :
             list_colored({.n = n, .constraint = no11, .parts = {}, .cap = cap})) {
            domain.emplace_back(x, false);
        }
        if (n >= 1) {
            for (const ColoredComposition& x :
                 list_colored({.n = n - 1, .constraint = no11, .parts = {}, .cap = cap})) {
                domain.emplace_back(x, true);
            }
        }
        result.domain_size = static_cast<long long>(domain.size());
        std::vector<ColoredComposition> images;
        for (const auto& [x, from_previous] : domain) {
            const ColoredComposition y = odd_from_no_one_one(x, from_previous);
            if (y.sum() != n || no_one_one_from_odd(y) != std::pair(x, from_previous)) {
                ++result.round_trip_failures;
            }
            images.push_back(y);
        }
        std::vector<ColoredComposition> members = list_colored(
            {.n = n, .constraint = ColorConstraint::modular(2, {1}), .parts = {}, .cap = cap});
        result.image_size = static_cast<long long>(members.size());
        for (const ColoredComposition& y : members) {
            const auto [x, from_previous] = no_one_one_from_odd(y);
            if (odd_from_no_one_one(x, from_previous) != y) {
                ++result.round_trip_failures;
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(members.begin(), members.end());
        if (images != members) {
            ++result.round_trip_failures;
        }
    } catch (const std::exception&) {
        ++result.round_trip_failures;
    }
    return result;
}

void finalize(CheckReport& report) {
    report.overall = true;
    for (const MatrixCell& cell : report.cells) {
        if (!cell.agree) {
            report.overall = false;
        }
    }
    for (const BijectionCheck& check : report.bijections) {
        if (check.round_trip_failures != 0 || check.domain_size != check.image_size) {
            report.overall = false;
        }
    }
}

}  // namespace

std::vector<ColorConstraint> default_grid() {
    std::vector<std::string> descriptors = {"all", "no11", "forbid=2",
                                            "mod=2:1", "mod=2:2", "mod=3:1", "mod=3:2,3"};
    for (int c = 1; c <= 5; ++c) {
        descriptors.push_back("allow=" + std::to_string(c));
    }
    for (int b = 1; b <= 5; ++b) {
        for (int c = b + 1; c <= 5; ++c) {
            descriptors.push_back("allow=" + std::to_string(b) + "," + std::to_string(c));
        }
    }
    descriptors.push_back("allow=1,2,3");
    descriptors.push_back("allow=1,2,3,4");
    for (int d = 1; d <= 3; ++d) {
        std::string list = "1";
        for (int c = 2; c <= d; ++c) {
            list += "," + std::to_string(c);
        }
        descriptors.push_back("forbid=" + list);
    }
    std::vector<ColorConstraint> grid;
    for (const std::string& text : descriptors) {
        grid.push_back(ColorConstraint::parse(text));
    }
    return grid;
}

std::vector<ColorConstraint> grid_from_json(const nlohmann::json& value) {
    if (!value.is_array()) {
        throw std::invalid_argument("grid must be a JSON array of constraint strings");
    }
    std::vector<ColorConstraint> grid;
    for (const nlohmann::json& item : value) {
        if (!item.is_string()) {
            throw std::invalid_argument("grid entries must be constraint strings");
        }
        grid.push_back(ColorConstraint::parse(item.get<std::string>()));
    }
    return grid;
}

CheckReport run_matrix(int max_n, const std::vector<ColorConstraint>& grid) {
    if (max_n < 0) {
        throw std::invalid_argument("max_n must be nonnegative");
    }
    const int cap = std::max(max_n, kDefaultEnumerationCap);
    CheckReport report;
    report.max_n = max_n;
    std::vector<std::vector<MatrixCell>> blocks(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long long g = 0; g < static_cast<long long>(grid.size()); ++g) {
        blocks[g] = constraint_cells(grid[g], max_n, cap);
    }
    for (auto& block : blocks) {
        report.cells.insert(report.cells.end(), block.begin(), block.end());
    }
    const auto parts = by_parts_cells(max_n, cap);
    report.cells.insert(report.cells.end(), parts.begin(), parts.end());
    const auto identity = odd_identity_cells(max_n, cap);
    report.cells.insert(report.cells.end(), identity.begin(), identity.end());
    finalize(report);
    return report;
}

CheckReport run_bijections(int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("max_n must be nonnegative");
    }
    const int cap = std::max(max_n + 3, kDefaultEnumerationCap);
    using Task = std::function<BijectionCheck()>;
    std::vector<Task> tasks;

    for (int c = 1; c <= 5; ++c) {
        const ColorConstraint domain = ColorConstraint::allowed({c});
        for (int n = 0; n <= max_n; ++n) {
            tasks.push_back([=] {
                return check_map(
                    instance_name("prop5-minparts", "c=" + std::to_string(c)), n, n, domain, n,
                    RegularFamily::min_parts(c),
                    [c](const ColoredComposition& x) { return strip_single_color(x, c); },
                    [c](const RegularComposition& y) { return attach_single_color(y, c); }, cap);
            });
        }
    }
    for (int c = 2; c <= 5; ++c) {
        const ColorConstraint domain = ColorConstraint::allowed({c});
        for (int n = 0; n <= max_n; ++n) {
            tasks.push_back([=] {
                return check_map(
                    instance_name("prop5-onec", "c=" + std::to_string(c)), n, n, domain, n,
                    RegularFamily::one_c(c),
                    [c](const ColoredComposition& x) { return split_single_color(x, c); },
                    [c](const RegularComposition& y) { return merge_single_color(y, c); }, cap);
            });
        }
    }
    for (int b = 1; b <= 5; ++b) {
        for (int c = b + 1; c <= 5; ++c) {
            const ColorConstraint domain = ColorConstraint::allowed({b, c});
            const std::string params = "b=" + std::to_string(b) + ",c=" + std::to_string(c);
            for (int n = 0; n <= max_n; ++n) {
                tasks.push_back([=] {
                    return check_map(
                        instance_name("prop7-typed", params), n, n, domain, n,
                        RegularFamily::typed(b, c),
                        [b, c](const ColoredComposition& x) { return strip_two_colors(x, b, c); },
                        [b, c](const RegularComposition& y) { return attach_two_colors(y, b, c); },
                        cap);
                });
                if (b >= 2) {
                    tasks.push_back([=] {
                        return check_map(
                            instance_name("prop7-mixed", params), n, n, domain, n,
                            RegularFamily::mixed(b, c),
                            [b, c](const ColoredComposition& x) {
                                return split_two_colors(x, b, c);
                            },
                            [b, c](const RegularComposition& y) {
                                return merge_two_colors(y, b, c);
                            },
                            cap);
                    });
                }
            }
        }
    }
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> prohibited;
        for (int c = 1; c <= d; ++c) {
            prohibited.push_back(c);
        }
        const ColorConstraint domain = ColorConstraint::prohibited(prohibited);
        for (int n = 1; n <= max_n; ++n) {
            tasks.push_back([=] {
                return check_map(
                    instance_name("prop11", "d=" + std::to_string(d)), n, n + d, domain, n,
                    RegularFamily::mod_2d(d),
                    [d](const ColoredComposition& x) { return shift_prohibited_prefix(x, d); },
                    [d](const RegularComposition& y) { return unshift_prohibited_prefix(y, d); },
                    cap);
            });
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        tasks.push_back([=] { return check_rectangles(n, cap); });
    }
    for (int n = 0; n <= std::min(max_n, kProp13Cap); ++n) {
        const ColorConstraint domain = ColorConstraint::prohibited({2});
        tasks.push_back([=] {
            return check_map(
                "prop13-mod3", n, n, domain, 3 * n + 2, RegularFamily::mod3(),
                [](const ColoredComposition& x) { return expand_no_color2(x); },
                [](const RegularComposition& y) { return collapse_no_color2(y); },
                std::max(cap, 3 * n + 2));
        });
    }
    for (int m = 2; m <= 4; ++m) {
        for (int i = 2; i <= m; ++i) {
            for (int n = 1; n <= max_n; ++n) {
                tasks.push_back([=] { return check_binary(n, m, i, cap); });
            }
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        tasks.push_back([=] { return check_odd_union(n, cap); });
    }

    CheckReport report;
    report.max_n = max_n;
    report.bijections.resize(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        report.bijections[t] = tasks[t]();
    }
    finalize(report);
    return report;
}

CheckReport run_check(int max_n, const std::vector<ColorConstraint>& grid) {
    CheckReport report = run_matrix(max_n, grid);
    CheckReport bijections = run_bijections(max_n);
    report.bijections = std::move(bijections.bijections);
    finalize(report);
    return report;
}

nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json out;
    out["maxN"] = report.max_n;
    out["cells"] = nlohmann::ordered_json::array();
    for (const MatrixCell& cell : report.cells) {
        nlohmann::ordered_json item;
        item["constraint"] = cell.constraint;
        item["n"] = cell.n;
        item["enum"] = cell.enum_count.str();
        item["rec"] = cell.rec_count ? nlohmann::ordered_json(cell.rec_count->str())
                                     : nlohmann::ordered_json(nullptr);
        item["formula"] = cell.formula_count ? nlohmann::ordered_json(cell.formula_count->str())
                                             : nlohmann::ordered_json(nullptr);
        item["agree"] = cell.agree;
        out["cells"].push_back(std::move(item));
    }
    out["bijections"] = nlohmann::ordered_json::array();
    for (const BijectionCheck& check : report.bijections) {
        nlohmann::ordered_json item;
        item["name"] = check.name;
        item["n"] = check.n;
        item["domainSize"] = check.domain_size;
        item["imageSize"] = check.image_size;
        item["roundTripFailures"] = check.round_trip_failures;
        out["bijections"].push_back(std::move(item));
    }
    out["overall"] = report.overall;
    return out;
}

namespace {

const std::string& item_name(const MatrixCell& cell) {
    return cell.constraint;
}
const std::string& item_name(const BijectionCheck& check) {
    return check.name;
}

// One summary row per constraint / bijection instance, in first-seen order.
template <typename Item, typename Key, typename Fold>
std::vector<std::pair<std::string, Key>> grouped(const std::vector<Item>& items, Key initial,
                                                 const Fold& fold) {
    std::vector<std::pair<std::string, Key>> rows;
    for (const Item& item : items) {
        auto row = std::find_if(rows.begin(), rows.end(),
                                [&item](const auto& r) { return r.first == item_name(item); });
        if (row == rows.end()) {
            rows.emplace_back(item_name(item), initial);
            row = rows.end() - 1;
        }
        fold(row->second, item);
    }
    return rows;
}

}  // namespace

std::string report_summary(const CheckReport& report) {
    struct CellRow {
        int max_n = -1;
        bool has_rec = false;
        bool has_formula = false;
        long long disagreements = 0;
    };
    struct BijectionRow {
        int max_n = -1;
        long long failures = 0;
    };

    std::ostringstream out;
    long long bad_cells = 0;
    for (const MatrixCell& cell : report.cells) {
        if (!cell.agree) {
            ++bad_cells;
            out << "DISAGREE " << cell.constraint << " n=" << cell.n
                << " enum=" << cell.enum_count;
            if (cell.rec_count) {
                out << " rec=" << *cell.rec_count;
            }
            if (cell.formula_count) {
                out << " formula=" << *cell.formula_count;
            }
            out << '\n';
        }
    }
    long long bad_bijections = 0;
    for (const BijectionCheck& check : report.bijections) {
        if (check.round_trip_failures != 0 || check.domain_size != check.image_size) {
            ++bad_bijections;
            out << "FAIL " << check.name << " n=" << check.n << " domain=" << check.domain_size
                << " image=" << check.image_size << " failures=" << check.round_trip_failures
                << '\n';
        }
    }

    if (!report.cells.empty()) {
        out << "constraint            n<=  methods           status\n";
        for (const auto& [name, row] : grouped(
                 report.cells, CellRow{},
                 [](CellRow& r, const MatrixCell& cell) {
                     r.max_n = std::max(r.max_n, cell.n);
                     r.has_rec = r.has_rec || cell.rec_count.has_value();
                     r.has_formula = r.has_formula || cell.formula_count.has_value();
                     r.disagreements += cell.agree ? 0 : 1;
                 })) {
            std::string methods = "enum";
            if (row.has_rec) {
                methods += "+rec";
            }
            if (row.has_formula) {
                methods += "+formula";
            }
            out << std::left << std::setw(22) << name << std::setw(5) << row.max_n
                << std::setw(18) << methods
                << (row.disagreements == 0 ? "ok" : "DISAGREE") << '\n';
        }
    }
    if (!report.bijections.empty()) {
        out << "bijection                   n<=  status\n";
        for (const auto& [name, row] :
             grouped(report.bijections, BijectionRow{},
                     [](BijectionRow& r, const BijectionCheck& check) {
                         r.max_n = std::max(r.max_n, check.n);
                         r.failures += check.round_trip_failures +
                                       (check.domain_size == check.image_size ? 0 : 1);
                     })) {
            out << std::left << std::setw(28) << name << std::setw(5) << row.max_n
                << (row.failures == 0 ? "ok" : "FAIL") << '\n';
        }
    }
    out << "matrix cells: " << report.cells.size() << " (" << bad_cells << " disagree)\n";
    out << "bijection checks: " << report.bijections.size() << " (" << bad_bijections
        << " failing)\n";
    out << "overall: " << (report.overall ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace ncolor
