#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ncolor/bijections.hpp"
#include "ncolor/enumerate.hpp"
#include "test_util.hpp"

using namespace ncolor;
using test::cc;
using test::rc;
using test::rc_tagged;

TEST_CASE("single-color strip and attach") {
    CHECK(strip_single_color(cc({{5, 3}, {3, 3}, {4, 3}}), 3) == rc({5, 3, 4}));
    CHECK(strip_single_color(ColoredComposition{}, 3).empty());
    CHECK(attach_single_color(rc({3}), 3) == cc({{3, 3}}));
    CHECK(attach_single_color(rc({5, 3, 4}), 3) == cc({{5, 3}, {3, 3}, {4, 3}}));

    CHECK_THROWS_AS(strip_single_color(cc({{3, 2}}), 3), DomainError);
    CHECK_THROWS_AS(attach_single_color(rc({2}), 3), DomainError);
    CHECK_FALSE(in_min_parts_family(rc({3, 2}), 3));
    CHECK(in_min_parts_family(rc({3, 7}), 3));
}

TEST_CASE("single-color block splitting reproduces the worked n=12 example") {
    const ColoredComposition colored = cc({{5, 3}, {3, 3}, {4, 3}});
    const RegularComposition split = split_single_color(colored, 3);
    CHECK(format_regular(split) == "3 1 1 3 3 1");
    CHECK(merge_single_color(split, 3) == colored);

    CHECK(split_single_color(cc({{4, 4}}), 4) == rc({4}));
    CHECK(split_single_color(ColoredComposition{}, 3).empty());
    CHECK_THROWS_AS(split_single_color(cc({{3, 3}}), 1), std::invalid_argument);
    CHECK_THROWS_AS(merge_single_color(rc({1, 3}), 3), DomainError);   // first part not c
    CHECK_THROWS_AS(merge_single_color(rc({3, 2}), 3), DomainError);   // 2 outside {1, c}
}

TEST_CASE("two-color typed strip keeps the originating color as a tag") {
    const ColoredComposition colored = cc({{4, 2}, {3, 3}});
    const RegularComposition typed = strip_two_colors(colored, 2, 3);
    CHECK(typed == rc_tagged({4, 3}, {1, 2}));
    CHECK(format_regular(typed) == "4 3'");
    CHECK(attach_two_colors(typed, 2, 3) == colored);

    // b = 1 is fine for the typed map.
    CHECK(strip_two_colors(cc({{2, 1}, {3, 3}}), 1, 3) == rc_tagged({2, 3}, {1, 2}));

    CHECK_THROWS_AS(strip_two_colors(cc({{4, 4}}), 2, 3), DomainError);
    CHECK_THROWS_AS(attach_two_colors(rc_tagged({2, 3}, {2, 2}), 2, 3), DomainError);
    CHECK_THROWS_AS(attach_two_colors(rc({4, 3}), 2, 3), DomainError);  // untyped input
    CHECK_FALSE(in_typed_family(rc_tagged({1, 3}, {1, 1}), 2, 3));
}

TEST_CASE("two-color block splitting") {
    CHECK(split_two_colors(cc({{3, 2}}), 2, 3) == rc({2, 1}));
    CHECK(split_two_colors(cc({{3, 3}}), 2, 3) == rc({3}));
    CHECK(merge_two_colors(rc({2, 1}), 2, 3) == cc({{3, 2}}));
    CHECK(merge_two_colors(rc({3}), 2, 3) == cc({{3, 3}}));

    CHECK_THROWS_AS(split_two_colors(cc({{3, 1}}), 1, 3), std::invalid_argument);  // needs b >= 2
    CHECK_THROWS_AS(merge_two_colors(rc({1, 2}), 2, 3), DomainError);  // first part must be b or c
    CHECK_THROWS_AS(merge_two_colors(rc({2, 4}), 2, 3), DomainError);
}

TEST_CASE("prohibited-prefix shift reproduces the complete d=1 bijection") {
    const std::vector<std::pair<ColoredComposition, RegularComposition>> pairs = {
        {cc({{4, 4}}), rc({3})},
        {cc({{4, 3}}), rc({2, 1})},
        {cc({{4, 2}}), rc({1, 1, 1})},
        {cc({{2, 2}, {2, 2}}), rc({1, 2})},
    };
    for (const auto& [colored, regular] : pairs) {
        CHECK(shift_prohibited_prefix(colored, 1) == regular);
        CHECK(unshift_prohibited_prefix(regular, 1) == colored);
    }
}

TEST_CASE("prohibited-prefix shift at d=2") {
    // Mechanical application of the map to the n = 16 example input.
    const ColoredComposition colored = cc({{5, 3}, {3, 3}, {4, 4}, {6, 4}});
    const RegularComposition image = shift_prohibited_prefix(colored, 2);
    CHECK(image == rc({1, 1, 1, 1, 2, 2, 2, 2, 2, 1, 1}));
    CHECK(image.sum() == 16);
    CHECK(in_mod2d_family(image, 2));
    CHECK(unshift_prohibited_prefix(image, 2) == colored);
}

TEST_CASE("prohibited-prefix domain checks") {
    CHECK_THROWS_AS(shift_prohibited_prefix(cc({{1, 1}}), 1), DomainError);
    CHECK_THROWS_AS(shift_prohibited_prefix(ColoredComposition{}, 2), DomainError);
    CHECK_THROWS_AS(unshift_prohibited_prefix(rc({4}), 2), DomainError);  // residue 4 with d=2
    CHECK_THROWS_AS(unshift_prohibited_prefix(RegularComposition{}, 1), DomainError);
    CHECK_THROWS_AS(unshift_prohibited_prefix(rc({1, 2, 3, 3}), 3), DomainError);  // even run
}

TEST_CASE("prohibited-prefix shift round-trips exhaustively for small n") {
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> prohibited;
        for (int c = 1; c <= d; ++c) {
            prohibited.push_back(c);
        }
        for (int n = 1; n <= 8; ++n) {
            std::vector<RegularComposition> images;
            for (const ColoredComposition& comp : list_colored(
                     {.n = n + d, .constraint = ColorConstraint::prohibited(prohibited)})) {
                const RegularComposition image = shift_prohibited_prefix(comp, d);
                CHECK(image.sum() == n);
                CHECK(unshift_prohibited_prefix(image, d) == comp);
                images.push_back(image);
            }
            std::vector<RegularComposition> family =
                list_regular(n, RegularFamily::mod_2d(d));
            for (const RegularComposition& member : family) {
                CHECK(shift_prohibited_prefix(unshift_prohibited_prefix(member, d), d) == member);
            }
            std::sort(images.begin(), images.end());
            CHECK(images == family);
        }
    }
}

TEST_CASE("prohibited-prefix shift holds beyond the acceptance range") {
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 14}, {3, 14}}) {
        std::vector<int> prohibited;
        for (int c = 1; c <= d; ++c) {
            prohibited.push_back(c);
        }
        std::vector<RegularComposition> images;
        for (const ColoredComposition& comp : list_colored(
                 {.n = n + d, .constraint = ColorConstraint::prohibited(prohibited)})) {
            const RegularComposition image = shift_prohibited_prefix(comp, d);
            CHECK(unshift_prohibited_prefix(image, d) == comp);
            images.push_back(image);
        }
        std::vector<RegularComposition> family = list_regular(n, RegularFamily::mod_2d(d));
        std::sort(images.begin(), images.end());
        CHECK(images == family);
    }
}

TEST_CASE("marked rectangle decoding matches the 1x20 example") {
    const MarkedRectangle rect{20, {1, 2, 5, 7, 9, 10, 12, 13, 15, 16, 18, 20}};
    const ColoredComposition comp = rectangle_to_composition(rect);
    CHECK(format_composition(comp) == "4_1 1_1 3_3 1_1 3_1 4_3");
    CHECK(comp.sum() == 16);
    CHECK(composition_to_rectangle(comp) == rect);
}

TEST_CASE("marked rectangle edges") {
    CHECK(rectangle_to_composition(MarkedRectangle{1, {}}) == cc({{1, 1}}));
    CHECK(rectangle_to_composition(MarkedRectangle{0, {}}).empty());
    CHECK(composition_to_rectangle(ColoredComposition{}) == MarkedRectangle{0, {}});

    CHECK_THROWS_AS(rectangle_to_composition(MarkedRectangle{5, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(rectangle_to_composition(MarkedRectangle{5, {1, 2, 7}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rectangle_to_composition(MarkedRectangle{5, {2, 2, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(composition_to_rectangle(cc({{3, 2}})), DomainError);
}

TEST_CASE("open-word merging matches the standalone example") {
    // (3·, ·2·, 4·, ·3, ·1·, ·5) combines to (5, 7, 6).
    const OpenWord word = {
        {3, false, true}, {2, true, true},  {4, false, true},
        {3, true, false}, {1, true, true},  {5, true, false},
    };
    CHECK(merge_open_word(word) == rc({5, 7, 6}));
}

TEST_CASE("no-color-2 expansion matches the worked example") {
    const ColoredComposition colored = cc({{2, 1}, {1, 1}, {1, 1}, {3, 3}, {4, 4}, {1, 1}});
    const RegularComposition image = expand_no_color2(colored);
    CHECK(format_regular(image) == "2 2 2 8 5 2 2 8 2 5");
    CHECK(image.sum() == 3 * 12 + 2);
    CHECK(collapse_no_color2(image) == colored);

    // Intermediate word for the first part: left-open 2, then 2, then 3k-4.
    const OpenWord word = open_word_no_color2(colored);
    REQUIRE(word.size() >= 3);
    CHECK(word[0] == OpenPart{2, true, false});
    CHECK(word[1] == OpenPart{2, false, false});
    CHECK(word[2] == OpenPart{2, false, false});
    CHECK(word.back() == OpenPart{2, true, false});
}

TEST_CASE("no-color-2 expansion edges") {
    CHECK(expand_no_color2(cc({{1, 1}})) == rc({5}));
    CHECK(expand_no_color2(ColoredComposition{}) == rc({2}));
    CHECK(collapse_no_color2(rc({2})).empty());

    CHECK_THROWS_AS(expand_no_color2(cc({{2, 2}})), DomainError);
    CHECK_THROWS_AS(collapse_no_color2(rc({3, 2})), DomainError);   // 3 is not 2 mod 3
    CHECK_THROWS_AS(collapse_no_color2(rc({2, 2})), DomainError);   // part count 2 mod 3
    CHECK_FALSE(in_mod3_family(rc({2, 3})));
}

TEST_CASE("modular-to-binary matches the even-color example") {
    const ColoredComposition colored = cc({{5, 4}, {3, 2}, {4, 4}});
    CHECK(binary_from_modular(colored, 2, 2) == "11100100111");
    CHECK(modular_from_binary("11100100111", 2, 2) == colored);
}

TEST_CASE("modular-to-binary edges") {
    CHECK(binary_from_modular(cc({{2, 2}}), 2, 2) == "1");
    CHECK(binary_from_modular(cc({{3, 3}}), 3, 3) == "11");
    CHECK(modular_from_binary("1", 2, 2) == cc({{2, 2}}));

    CHECK_THROWS_AS(binary_from_modular(ColoredComposition{}, 2, 2), DomainError);
    CHECK_THROWS_AS(binary_from_modular(cc({{3, 3}}), 2, 2), DomainError);
    CHECK_THROWS_AS(modular_from_binary("", 2, 2), DomainError);
    CHECK_THROWS_AS(modular_from_binary("011", 2, 2), DomainError);
    CHECK_THROWS_AS(modular_from_binary("11", 2, 2), DomainError);  // run of two 1s, want odd
    CHECK_THROWS_AS(modular_from_binary("1a0", 2, 2), DomainError);
    CHECK_THROWS_AS(modular_from_binary("10", 2, 1), std::invalid_argument);  // i must be >= 2

    CHECK(in_binary_family("11100100111", 2, 2));
    CHECK_FALSE(in_binary_family("11", 2, 2));
    CHECK_FALSE(in_binary_family("01", 2, 2));
}

TEST_CASE("odd-color union matches the n=9 example") {
    const ColoredComposition source = cc({{4, 4}, {2, 1}, {2, 2}});
    const ColoredComposition image = odd_from_no_one_one(source, true);
    CHECK(format_composition(image) == "1_1 3_3 2_1 1_1 1_1 1_1");
    const auto [back, from_previous] = no_one_one_from_odd(image);
    CHECK(back == source);
    CHECK(from_previous);
}

TEST_CASE("odd-color union edges") {
    CHECK(odd_from_no_one_one(cc({{2, 1}}), false) == cc({{2, 1}}));
    CHECK(odd_from_no_one_one(ColoredComposition{}, false).empty());
    CHECK(odd_from_no_one_one(ColoredComposition{}, true) == cc({{1, 1}}));

    const auto [empty_back, shifted] = no_one_one_from_odd(cc({{1, 1}}));
    CHECK(empty_back.empty());
    CHECK(shifted);

    CHECK_THROWS_AS(odd_from_no_one_one(cc({{1, 1}}), false), DomainError);
    CHECK_THROWS_AS(no_one_one_from_odd(cc({{2, 2}})), DomainError);
}

TEST_CASE("odd-color union round-trips exhaustively for small n") {
    for (int n = 0; n <= 8; ++n) {
        const ColorConstraint no11 = ColorConstraint::no_part_one_one();
        std::vector<ColoredComposition> images;
        auto run = [&images](const ColoredComposition& source, bool from_previous) {
            const ColoredComposition image = odd_from_no_one_one(source, from_previous);
            CHECK(no_one_one_from_odd(image) == std::pair(source, from_previous));
            images.push_back(image);
        };
        for (const ColoredComposition& comp : list_colored({.n = n, .constraint = no11})) {
            run(comp, false);
        }
        if (n >= 1) {
            for (const ColoredComposition& comp : list_colored({.n = n - 1, .constraint = no11})) {
                run(comp, true);
            }
        }
        std::vector<ColoredComposition> family =
            list_colored({.n = n, .constraint = ColorConstraint::modular(2, {1})});
        std::sort(images.begin(), images.end());
        CHECK(images == family);
    }
}
