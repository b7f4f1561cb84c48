#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncolor/composition.hpp"
#include "ncolor/constraint.hpp"
#include "test_util.hpp"

using namespace ncolor;
using test::cc;
using test::rc;
using test::rc_tagged;

namespace {

ColoredComposition random_composition(std::mt19937& rng, int max_n) {
    std::uniform_int_distribution<int> pick_n(0, max_n);
    int remaining = pick_n(rng);
    std::vector<ColoredPart> parts;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick_size(1, remaining);
        const int size = pick_size(rng);
        std::uniform_int_distribution<int> pick_color(1, size);
        parts.push_back({size, pick_color(rng)});
        remaining -= size;
    }
    return ColoredComposition(std::move(parts));
}

}  // namespace

TEST_CASE("part validation") {
    CHECK(validate(ColoredPart{3, 2}));
    CHECK(validate(ColoredPart{1, 1}));
    CHECK_FALSE(validate(ColoredPart{2, 3}));
    CHECK_FALSE(validate(ColoredPart{2, 0}));
}

TEST_CASE("composition construction") {
    const ColoredComposition comp = cc({{5, 3}, {3, 3}, {4, 3}});
    CHECK(comp.sum() == 12);
    CHECK(comp.part_count() == 3);
    CHECK_FALSE(comp.empty());

    const ColoredComposition empty;
    CHECK(empty.sum() == 0);
    CHECK(empty.empty());

    CHECK_THROWS_AS(cc({{2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(cc({{0, 1}}), std::invalid_argument);
}

TEST_CASE("composition ordering is lexicographic by (size, color)") {
    CHECK(cc({{1, 1}, {2, 2}}) < cc({{2, 1}, {1, 1}}));
    CHECK(cc({{3, 1}}) < cc({{3, 2}}));
    CHECK(cc({{1, 1}}) < cc({{1, 1}, {1, 1}}));  // prefix first
}

TEST_CASE("satisfies") {
    const ColorConstraint forbid2 = ColorConstraint::prohibited({2});
    CHECK_FALSE(satisfies(cc({{2, 2}, {1, 1}}), forbid2));
    CHECK(satisfies(cc({{5, 3}, {3, 3}, {4, 3}}), ColorConstraint::allowed({3})));

    const ColoredComposition empty;
    CHECK(satisfies(empty, forbid2));
    CHECK(satisfies(empty, ColorConstraint::allowed({4})));
    CHECK(satisfies(empty, ColorConstraint::modular(3, {2})));
    CHECK(satisfies(empty, ColorConstraint::no_part_one_one()));

    const ColorConstraint no11 = ColorConstraint::no_part_one_one();
    CHECK_FALSE(satisfies(cc({{1, 1}}), no11));
    CHECK(satisfies(cc({{2, 1}}), no11));
    CHECK(satisfies(cc({{2, 2}, {3, 1}}), no11));

    // Residue m stands for multiples of m.
    const ColorConstraint even = ColorConstraint::modular(2, {2});
    CHECK(satisfies(cc({{4, 2}, {4, 4}}), even));
    CHECK_FALSE(satisfies(cc({{3, 3}}), even));
}

TEST_CASE("allowed-set satisfaction implies prohibited-set violation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick_color(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const ColoredComposition comp = random_composition(rng, 10);
        const std::vector<int> set = {pick_color(rng), pick_color(rng)};
        if (satisfies(comp, ColorConstraint::allowed(set)) && !comp.empty()) {
            CHECK_FALSE(satisfies(comp, ColorConstraint::prohibited(set)));
        }
    }
}

TEST_CASE("modulus one with residue one allows everything") {
    std::mt19937 rng(11);
    const ColorConstraint all = ColorConstraint::modular(1, {1});
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(satisfies(random_composition(rng, 12), all));
    }
}

TEST_CASE("format and parse") {
    CHECK(format_composition(cc({{5, 3}, {3, 3}, {4, 3}})) == "5_3 3_3 4_3");
    CHECK(format_composition(ColoredComposition{}).empty());

    const ColoredComposition parsed = parse_composition("5_3 3_3 4_3");
    CHECK(parsed.sum() == 12);
    CHECK(parsed.part_count() == 3);

    CHECK(parse_composition("").empty());
    CHECK(parse_composition("  ").empty());
    CHECK(parse_composition("(5_3, 3_3, 4_3)") == parsed);
    CHECK(parse_composition("5_3,3_3,4_3") == parsed);

    CHECK_THROWS_AS(parse_composition("2_3"), std::invalid_argument);
}

TEST_CASE("parse reports the offending position") {
    try {
        parse_composition("5_3 x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    try {
        parse_composition("5_");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_composition("(5_3"), ParseError);
    CHECK_THROWS_AS(parse_composition("5_3)"), ParseError);
    CHECK_THROWS_AS(parse_composition("5_3 7"), ParseError);
}

TEST_CASE("parse-format round trip") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const ColoredComposition comp = random_composition(rng, 14);
        const std::string text = format_composition(comp);
        CHECK(parse_composition(text) == comp);
        CHECK(format_composition(parse_composition(text)) == text);
    }
}

TEST_CASE("parser survives arbitrary input") {
    std::mt19937 rng(41);
    const std::string alphabet = "0123456789_ ,()'x\t-";
    std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> pick_len(0, 24);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        for (int i = pick_len(rng); i > 0; --i) {
            text += alphabet[pick_char(rng)];
        }
        try {
            const ColoredComposition comp = parse_composition(text);
            CHECK(parse_composition(format_composition(comp)) == comp);
        } catch (const ParseError&) {
        } catch (const std::invalid_argument&) {
        }
        try {
            const RegularComposition comp = parse_regular(text);
            CHECK(parse_regular(format_regular(comp)) == comp);
        } catch (const ParseError&) {
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("oversized numbers are rejected, not materialized") {
    CHECK_THROWS_AS(parse_composition("2000000000_1"), ParseError);
    CHECK_THROWS_AS(parse_regular("99999999"), ParseError);
}

TEST_CASE("tiling rendering") {
    CHECK(render_tiling(cc({{3, 2}})) == "|·●·|");
    CHECK(render_tiling(cc({{2, 1}, {1, 1}})) == "|●·|●|");
    CHECK(render_tiling(ColoredComposition{}) == "||");
}

TEST_CASE("composition JSON") {
    const ColoredComposition comp = cc({{5, 3}, {3, 3}, {4, 3}});
    const nlohmann::json value = composition_json(comp);
    CHECK(value["n"] == 12);
    CHECK(value["parts"].size() == 3);
    CHECK(value["parts"][0]["size"] == 5);
    CHECK(value["parts"][0]["color"] == 3);
    CHECK(composition_from_json(value) == comp);

    CHECK_THROWS_AS(composition_from_json(nlohmann::json::parse(R"({"n":3,"parts":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        composition_from_json(nlohmann::json::parse(R"({"parts":[{"size":2,"color":3}]})")),
        std::invalid_argument);
}

TEST_CASE("regular composition text") {
    CHECK(format_regular(rc({3, 1, 1, 3, 3, 1})) == "3 1 1 3 3 1");
    CHECK(format_regular(rc_tagged({4, 3}, {1, 2})) == "4 3'");

    const RegularComposition typed = parse_regular("4 3'");
    CHECK(typed.parts == std::vector<long long>{4, 3});
    CHECK(typed.tags == std::vector<int>{1, 2});

    const RegularComposition plain = parse_regular("3, 1, 1");
    CHECK(plain.parts == std::vector<long long>{3, 1, 1});
    CHECK(plain.tags.empty());

    CHECK(parse_regular("").empty());
    CHECK_THROWS_AS(parse_regular("3 x"), ParseError);
    CHECK_THROWS_AS(parse_regular("0 1"), std::invalid_argument);
}

TEST_CASE("regular composition ordering interleaves parts and tags") {
    CHECK(rc_tagged({2, 3}, {1, 1}) < rc_tagged({2, 2}, {2, 2}));
    CHECK(rc_tagged({2, 2}, {1, 2}) < rc_tagged({2, 2}, {2, 1}));
    CHECK(rc({2}) < rc({2, 1}));
}

TEST_CASE("regular composition validation") {
    RegularComposition bad = rc({2, 1});
    bad.tags = {1};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad.tags = {1, 3};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("constraint grammar") {
    CHECK(ColorConstraint::parse("all") == ColorConstraint::unrestricted());
    CHECK(ColorConstraint::parse("no11") == ColorConstraint::no_part_one_one());
    CHECK(ColorConstraint::parse("allow=3,1") == ColorConstraint::allowed({1, 3}));
    CHECK(ColorConstraint::parse("forbid=2") == ColorConstraint::prohibited({2}));
    CHECK(ColorConstraint::parse("mod=2:1") == ColorConstraint::modular(2, {1}));
    CHECK(ColorConstraint::parse("mod=3:2,3") == ColorConstraint::modular(3, {2, 3}));

    for (const char* text : {"all", "no11", "allow=1,3", "forbid=1,2", "mod=3:2,3"}) {
        CHECK(ColorConstraint::parse(text).describe() == text);
    }

    CHECK_THROWS_AS(ColorConstraint::parse("anything"), ParseError);
    CHECK_THROWS_AS(ColorConstraint::parse("allow="), ParseError);
    CHECK_THROWS_AS(ColorConstraint::parse("allow=1,"), ParseError);
    CHECK_THROWS_AS(ColorConstraint::parse("mod=2"), ParseError);
    CHECK_THROWS_AS(ColorConstraint::parse("mod=2:3"), std::invalid_argument);
    CHECK_THROWS_AS(ColorConstraint::allowed({}), std::invalid_argument);
    CHECK_THROWS_AS(ColorConstraint::modular(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ColorConstraint::prohibited({0}), std::invalid_argument);
}

TEST_CASE("constraint accessors") {
    const ColorConstraint k = ColorConstraint::allowed({4, 2, 4});
    CHECK(k.colors() == std::vector<int>{2, 4});  // normalized
    CHECK(k.min_color() == 2);
    CHECK(k.max_color() == 4);
    CHECK_THROWS_AS(ColorConstraint::unrestricted().min_color(), std::logic_error);
}
