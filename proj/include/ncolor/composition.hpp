#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ncolor {

/// Text does not match the composition or constraint grammar.
/// `position()` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// One tile: `size` squares with the spot in square `color`.
struct ColoredPart {
    int size = 1;
    int color = 1;

    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// True iff 1 <= color <= size.
bool validate(const ColoredPart& part) noexcept;

/// Ordered sequence of colored parts. The empty composition is valid and
/// has sum 0. Immutable after construction; ordering is lexicographic by
/// (size, color) pairs, with prefixes first.
class ColoredComposition {
public:
    ColoredComposition() = default;

    /// Throws std::invalid_argument if any part fails validate().
    explicit ColoredComposition(std::vector<ColoredPart> parts);

    const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
    long long sum() const noexcept { return sum_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t part_count() const noexcept { return parts_.size(); }

    friend bool operator==(const ColoredComposition& a, const ColoredComposition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const ColoredComposition& a, const ColoredComposition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<ColoredPart> parts_;
    long long sum_ = 0;
};

/// Uncolored composition. `tags`, when nonempty, aligns one-to-one with
/// `parts` and distinguishes two types of a part (1 = first type,
/// 2 = second type); an empty tag vector means the family is untyped.
struct RegularComposition {
    std::vector<long long> parts;
    std::vector<int> tags;

    long long sum() const noexcept;
    bool empty() const noexcept { return parts.empty(); }

    friend bool operator==(const RegularComposition& a, const RegularComposition& b) {
        return (a <=> b) == 0;
    }
    // Lexicographic by (part, tag) pairs so sorted order matches the
    // enumeration order of typed families.
    friend std::strong_ordering operator<=>(const RegularComposition& a,
                                            const RegularComposition& b);
};

/// Throws std::invalid_argument unless all parts are >= 1 and tags, when
/// present, align with parts and lie in {1, 2}.
void validate(const RegularComposition& comp);

/// Canonical text, e.g. "5_3 3_3 4_3"; the empty composition formats as "".
std::string format_composition(const ColoredComposition& comp);

/// Parses the canonical form; commas between parts and a surrounding pair
/// of parentheses are also accepted, so "(5_3, 3_3, 4_3)" parses too.
/// Throws ParseError on syntax errors and std::invalid_argument when a
/// part's color exceeds its size.
ColoredComposition parse_composition(std::string_view text);

/// "3 1 1 3 3 1"; a type-2 tag is rendered as a trailing apostrophe ("4'").
std::string format_regular(const RegularComposition& comp);

/// Parses format_regular output; commas are accepted as separators.
RegularComposition parse_regular(std::string_view text);

/// One-line spotted tiling: tiles delimited by '|', the spot square drawn
/// as U+25CF and empty squares as U+00B7. The empty composition is "||".
std::string render_tiling(const ColoredComposition& comp);

/// {"n": 12, "parts": [{"size": 5, "color": 3}, ...]}
nlohmann::json composition_json(const ColoredComposition& comp);

/// Inverse of composition_json; throws std::invalid_argument on shape or
/// invariant violations (including an "n" that contradicts the parts).
ColoredComposition composition_from_json(const nlohmann::json& value);

}  // namespace ncolor
