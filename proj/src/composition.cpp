#include "ncolor/composition.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ncolor {

namespace {

// Parsed numbers are capped so downstream size arithmetic cannot overflow
// and so a single absurd token cannot demand gigabytes from the maps that
// expand parts square by square.
constexpr long long kMaxNumber = 1'000'000;

bool is_sep(char ch) {
    return ch == ' ' || ch == '\t' || ch == ',';
}

void skip_separators(std::string_view text, std::size_t& i) {
    while (i < text.size() && is_sep(text[i])) {
        ++i;
    }
}

long long parse_number(std::string_view text, std::size_t& i, const char* what) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(std::string("expected ") + what, i);
    }
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxNumber) {
            throw ParseError(std::string(what) + " too large", i);
        }
        ++i;
    }
    return value;
}

std::string part_text(const ColoredPart& part) {
    return std::to_string(part.size) + "_" + std::to_string(part.color);
}

}  // namespace

bool validate(const ColoredPart& part) noexcept {
    return part.size >= 1 && part.color >= 1 && part.color <= part.size;
}

ColoredComposition::ColoredComposition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    for (const ColoredPart& part : parts_) {
        if (part.size < 1) {
            throw std::invalid_argument("part " + part_text(part) + ": size must be positive");
        }
        if (!validate(part)) {
            throw std::invalid_argument("part " + part_text(part) +
                                        ": color must lie between 1 and the size");
        }
        sum_ += part.size;
    }
}

long long RegularComposition::sum() const noexcept {
    long long total = 0;
    for (long long part : parts) {
        total += part;
    }
    return total;
}

std::strong_ordering operator<=>(const RegularComposition& a, const RegularComposition& b) {
    const std::size_t common = std::min(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (auto cmp = a.parts[i] <=> b.parts[i]; cmp != 0) {
            return cmp;
        }
        const int tag_a = i < a.tags.size() ? a.tags[i] : 0;
        const int tag_b = i < b.tags.size() ? b.tags[i] : 0;
        if (auto cmp = tag_a <=> tag_b; cmp != 0) {
            return cmp;
        }
    }
    return a.parts.size() <=> b.parts.size();
}

void validate(const RegularComposition& comp) {
    for (long long part : comp.parts) {
        if (part < 1) {
            throw std::invalid_argument("regular composition parts must be positive");
        }
    }
    if (!comp.tags.empty()) {
        if (comp.tags.size() != comp.parts.size()) {
            throw std::invalid_argument("tags must align one-to-one with parts");
        }
        for (int tag : comp.tags) {
            if (tag != 1 && tag != 2) {
                throw std::invalid_argument("tags must be 1 or 2");
            }
        }
    }
}

std::string format_composition(const ColoredComposition& comp) {
    std::string out;
    for (const ColoredPart& part : comp.parts()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += part_text(part);
    }
    return out;
}

ColoredComposition parse_composition(std::string_view text) {
    std::size_t i = 0;
    skip_separators(text, i);
    bool parenthesized = false;
    if (i < text.size() && text[i] == '(') {
        parenthesized = true;
        ++i;
    }
    std::vector<ColoredPart> parts;
    while (true) {
        skip_separators(text, i);
        if (i >= text.size() || text[i] == ')') {
            break;
        }
        const long long size = parse_number(text, i, "part size");
        if (i >= text.size() || text[i] != '_') {
            throw ParseError("expected '_' between size and color", i);
        }
        ++i;
        const long long color = parse_number(text, i, "part color");
        if (i < text.size() && !is_sep(text[i]) && text[i] != ')') {
            throw ParseError("unexpected character after part", i);
        }
        parts.push_back({static_cast<int>(size), static_cast<int>(color)});
    }
    if (parenthesized) {
        if (i >= text.size() || text[i] != ')') {
            throw ParseError("expected ')'", i);
        }
        ++i;
        skip_separators(text, i);
    }
    if (i != text.size()) {
        throw ParseError("unexpected trailing text", i);
    }
    return ColoredComposition(std::move(parts));
}

std::string format_regular(const RegularComposition& comp) {
    std::string out;
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(comp.parts[i]);
        if (i < comp.tags.size() && comp.tags[i] == 2) {
            out += '\'';
        }
    }
    return out;
}

RegularComposition parse_regular(std::string_view text) {
    std::size_t i = 0;
    RegularComposition comp;
    bool any_tag = false;
    while (true) {
        skip_separators(text, i);
        if (i >= text.size()) {
            break;
        }
        comp.parts.push_back(parse_number(text, i, "part"));
        int tag = 1;
        if (i < text.size() && text[i] == '\'') {
            tag = 2;
            any_tag = true;
            ++i;
        }
        comp.tags.push_back(tag);
        if (i < text.size() && !is_sep(text[i])) {
            throw ParseError("unexpected character after part", i);
        }
    }
    if (!any_tag) {
        comp.tags.clear();
    }
    validate(comp);
    return comp;
}

std::string render_tiling(const ColoredComposition& comp) {
    static constexpr const char* kSpot = "●";
    static constexpr const char* kEmpty = "·";
    std::string out = "|";
    if (comp.empty()) {
        return "||";
    }
    for (const ColoredPart& part : comp.parts()) {
        for (int square = 1; square <= part.size; ++square) {
            out += (square == part.color) ? kSpot : kEmpty;
        }
        out += '|';
    }
    return out;
}

nlohmann::json composition_json(const ColoredComposition& comp) {
    nlohmann::json parts = nlohmann::json::array();
    for (const ColoredPart& part : comp.parts()) {
        parts.push_back({{"size", part.size}, {"color", part.color}});
    }
    return {{"n", comp.sum()}, {"parts", std::move(parts)}};
}

ColoredComposition composition_from_json(const nlohmann::json& value) {
    if (!value.is_object() || !value.contains("parts") || !value["parts"].is_array()) {
        throw std::invalid_argument("composition JSON must be {\"n\": .., \"parts\": [..]}");
    }
    std::vector<ColoredPart> parts;
    for (const nlohmann::json& item : value["parts"]) {
        if (!item.is_object() || !item.contains("size") || !item.contains("color")) {
            throw std::invalid_argument("each part must be {\"size\": .., \"color\": ..}");
        }
        parts.push_back({item["size"].get<int>(), item["color"].get<int>()});
    }
    ColoredComposition comp{std::move(parts)};
    if (value.contains("n") && value["n"].get<long long>() != comp.sum()) {
        throw std::invalid_argument("\"n\" does not match the sum of the parts");
    }
    return comp;
}

}  // namespace ncolor
