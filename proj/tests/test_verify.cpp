#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ncolor/enumerate.hpp"
#include "ncolor/verify.hpp"

using namespace ncolor;

namespace {

const MatrixCell* find_cell(const CheckReport& report, const std::string& constraint, int n) {
    for (const MatrixCell& cell : report.cells) {
        if (cell.constraint == constraint && cell.n == n) {
            return &cell;
        }
    }
    return nullptr;
}

const BijectionCheck* find_check(const CheckReport& report, const std::string& name, int n) {
    for (const BijectionCheck& check : report.bijections) {
        if (check.name == name && check.n == n) {
            return &check;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("matrix pins the basic counts") {
    const CheckReport report = run_matrix(3);
    CHECK(report.overall);

    const MatrixCell* all3 = find_cell(report, "all", 3);
    REQUIRE(all3 != nullptr);
    CHECK(all3->enum_count == 8);
    REQUIRE(all3->rec_count.has_value());
    CHECK(*all3->rec_count == 8);
    CHECK_FALSE(all3->formula_count.has_value());
    CHECK(all3->agree);

    const MatrixCell* no2 = find_cell(report, "forbid=2", 3);
    REQUIRE(no2 != nullptr);
    CHECK(no2->enum_count == 5);
    CHECK(*no2->rec_count == 5);
    CHECK(*no2->formula_count == 5);

    const MatrixCell* allow3 = find_cell(report, "allow=3", 2);
    REQUIRE(allow3 != nullptr);
    CHECK(allow3->enum_count == 0);

    const MatrixCell* parts2 = find_cell(report, "all@parts=2", 3);
    REQUIRE(parts2 != nullptr);
    CHECK(parts2->enum_count == 4);
    CHECK(*parts2->formula_count == 4);

    const MatrixCell* identity = find_cell(report, "prop15-identity", 3);
    REQUIRE(identity != nullptr);
    CHECK(identity->enum_count == 5);  // odd-color compositions of 3
    CHECK(*identity->formula_count == 5);
}

TEST_CASE("matrix at n = 0 is all ones") {
    const CheckReport report = run_matrix(0);
    CHECK(report.overall);
    for (const MatrixCell& cell : report.cells) {
        if (cell.n == 0 && cell.constraint.find("parts") == std::string::npos) {
            CHECK(cell.enum_count == 1);
        }
    }
}

TEST_CASE("bijection checks pass at small n") {
    const CheckReport report = run_bijections(6);
    CHECK(report.overall);
    CHECK_FALSE(report.bijections.empty());
    for (const BijectionCheck& check : report.bijections) {
        CAPTURE(check.name);
        CAPTURE(check.n);
        CHECK(check.round_trip_failures == 0);
        CHECK(check.domain_size == check.image_size);
    }

    // Sum over k of C(3+k, 3k) = 5 rectangles at n = 3.
    const BijectionCheck* rect = find_check(report, "prop12-rect", 3);
    REQUIRE(rect != nullptr);
    CHECK(rect->domain_size == 5);

    const BijectionCheck* odd = find_check(report, "prop15-odd", 6);
    REQUIRE(odd != nullptr);
    CHECK(odd->domain_size == odd->image_size);
}

TEST_CASE("odd-union sizes at n = 9 match the two-term sum") {
    const CheckReport report = run_bijections(9);
    const BijectionCheck* odd = find_check(report, "prop15-odd", 9);
    REQUIRE(odd != nullptr);
    // b(9) + b(8) on the domain side, a(9) on the image side.
    const ColorConstraint no11 = ColorConstraint::no_part_one_one();
    const BigInt two_term = count_colored({.n = 9, .constraint = no11}) +
                            count_colored({.n = 8, .constraint = no11});
    CHECK(BigInt(odd->domain_size) == two_term);
    CHECK(BigInt(odd->image_size) ==
          count_colored({.n = 9, .constraint = ColorConstraint::modular(2, {1})}));
    CHECK(odd->domain_size == odd->image_size);
    CHECK(odd->round_trip_failures == 0);
}

TEST_CASE("reports are deterministic") {
    const CheckReport first = run_check(5);
    const CheckReport second = run_check(5);
    CHECK(report_json(first) == report_json(second));
    CHECK(report_summary(first) == report_summary(second));
}

TEST_CASE("report JSON shape") {
    const CheckReport report = run_matrix(2);
    const nlohmann::ordered_json value = report_json(report);
    CHECK(value["maxN"] == 2);
    CHECK(value["overall"] == true);
    REQUIRE(value["cells"].is_array());
    const auto& cell = value["cells"][0];
    const std::vector<std::string> keys = {"constraint", "n", "enum", "rec", "formula", "agree"};
    std::size_t index = 0;
    for (auto it = cell.begin(); it != cell.end(); ++it, ++index) {
        REQUIRE(index < keys.size());
        CHECK(it.key() == keys[index]);
    }
    CHECK(value["cells"][0]["enum"].is_string());
    REQUIRE(value["bijections"].is_array());
}

TEST_CASE("grid loading") {
    const auto grid = grid_from_json(nlohmann::json::parse(R"(["allow=2", "forbid=1"])"));
    REQUIRE(grid.size() == 2);
    CHECK(grid[0] == ColorConstraint::allowed({2}));
    CHECK(grid[1] == ColorConstraint::prohibited({1}));

    CHECK_THROWS_AS(grid_from_json(nlohmann::json::parse(R"({"a":1})")), std::invalid_argument);
    CHECK_THROWS_AS(grid_from_json(nlohmann::json::parse(R"([42])")), std::invalid_argument);
    CHECK_THROWS_AS(grid_from_json(nlohmann::json::parse(R"(["nope"])")), ParseError);
}

TEST_CASE("default grid covers the ten constraint shapes") {
    const auto grid = default_grid();
    const std::vector<std::string> expected = {
        "all",      "no11",        "forbid=2",  "mod=2:1",      "mod=2:2",
        "mod=3:1",  "mod=3:2,3",   "allow=2",   "allow=1,2",    "allow=4,5",
        "allow=1,2,3,4", "forbid=1", "forbid=1,2,3",
    };
    for (const std::string& descriptor : expected) {
        const bool present =
            std::any_of(grid.begin(), grid.end(), [&descriptor](const ColorConstraint& k) {
                return k.describe() == descriptor;
            });
        CAPTURE(descriptor);
        CHECK(present);
    }
}

TEST_CASE("a custom grid flows through run_matrix") {
    const CheckReport report = run_matrix(4, {ColorConstraint::allowed({2})});
    CHECK(report.overall);
    const MatrixCell* cell = find_cell(report, "allow=2", 4);
    REQUIRE(cell != nullptr);
    CHECK(cell->enum_count == 2);
    CHECK(*cell->formula_count == 2);
}
