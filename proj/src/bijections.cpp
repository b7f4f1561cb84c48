#include "ncolor/bijections.hpp"

#include <algorithm>

namespace ncolor {

namespace {

void require(bool condition, const char* predicate) {
    if (!condition) {
        throw DomainError(predicate);
    }
}

void require_untyped(const RegularComposition& comp) {
    require(comp.tags.empty(), "composition must be untyped");
}

void require_colors(const ColoredComposition& comp, int b, int c, const char* predicate) {
    for (const ColoredPart& part : comp.parts()) {
        require(part.color == b || part.color == c, predicate);
    }
}

}  // namespace

void validate(const MarkedRectangle& rect) {
    if (rect.length < 0) {
        throw std::invalid_argument("rectangle length must be nonnegative");
    }
    if (rect.marks.size() % 3 != 0) {
        throw std::invalid_argument("mark count must be a multiple of 3");
    }
    long long previous = 0;
    for (long long mark : rect.marks) {
        if (mark <= previous) {
            throw std::invalid_argument("marks must be strictly ascending and positive");
        }
        if (mark > rect.length) {
            throw std::invalid_argument("marks must lie within the rectangle");
        }
        previous = mark;
    }
}

// ---------------------------------------------------------------------------
// prop5-minparts
// ---------------------------------------------------------------------------

RegularComposition strip_single_color(const ColoredComposition& comp, int c) {
    require_colors(comp, c, c, "every part must carry the single allowed color");
    RegularComposition out;
    for (const ColoredPart& part : comp.parts()) {
        out.parts.push_back(part.size);
    }
    return out;
}

ColoredComposition attach_single_color(const RegularComposition& comp, int c) {
    require_untyped(comp);
    require(in_min_parts_family(comp, c), "every part must be at least c");
    std::vector<ColoredPart> parts;
    for (long long part : comp.parts) {
        parts.push_back({static_cast<int>(part), c});
    }
    return ColoredComposition(std::move(parts));
}

bool in_min_parts_family(const RegularComposition& comp, int c) {
    if (!comp.tags.empty()) {
        return false;
    }
    return std::all_of(comp.parts.begin(), comp.parts.end(),
                       [c](long long part) { return part >= c; });
}

// ---------------------------------------------------------------------------
// prop5-onec
// ---------------------------------------------------------------------------

RegularComposition split_single_color(const ColoredComposition& comp, int c) {
    if (c < 2) {
        throw std::invalid_argument("the block-splitting map needs c >= 2");
    }
    require_colors(comp, c, c, "every part must carry the single allowed color");
    RegularComposition out;
    for (const ColoredPart& part : comp.parts()) {
        out.parts.push_back(c);
        for (int square = c; square < part.size; ++square) {
            out.parts.push_back(1);
        }
    }
    return out;
}

ColoredComposition merge_single_color(const RegularComposition& comp, int c) {
    if (c < 2) {
        throw std::invalid_argument("the block-merging map needs c >= 2");
    }
    require_untyped(comp);
    require(in_one_c_family(comp, c), "parts must lie in {1, c} with first part c");
    std::vector<ColoredPart> parts;
    for (long long part : comp.parts) {
        if (part == c) {
            parts.push_back({c, c});
        } else {
            ++parts.back().size;  // a 1 extends the open tile's tail
        }
    }
    return ColoredComposition(std::move(parts));
}

bool in_one_c_family(const RegularComposition& comp, int c) {
    if (!comp.tags.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        const long long part = comp.parts[i];
        if (part != 1 && part != c) {
            return false;
        }
        if (i == 0 && part != c) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// prop7-typed
// ---------------------------------------------------------------------------

RegularComposition strip_two_colors(const ColoredComposition& comp, int b, int c) {
    if (b < 1 || b >= c) {
        throw std::invalid_argument("colors must satisfy 1 <= b < c");
    }
    require_colors(comp, b, c, "every part must carry color b or c");
    RegularComposition out;
    for (const ColoredPart& part : comp.parts()) {
        out.parts.push_back(part.size);
        out.tags.push_back(part.color == b ? 1 : 2);
    }
    return out;
}

ColoredComposition attach_two_colors(const RegularComposition& comp, int b, int c) {
    if (b < 1 || b >= c) {
        throw std::invalid_argument("colors must satisfy 1 <= b < c");
    }
    require(in_typed_family(comp, b, c),
            "parts must be at least b, tagged, with type 2 only from size c up");
    std::vector<ColoredPart> parts;
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        parts.push_back({static_cast<int>(comp.parts[i]), comp.tags[i] == 1 ? b : c});
    }
    return ColoredComposition(std::move(parts));
}

bool in_typed_family(const RegularComposition& comp, int b, int c) {
    if (comp.tags.size() != comp.parts.size()) {
        return false;
    }
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        const long long part = comp.parts[i];
        const int tag = comp.tags[i];
        if (part < b || (tag != 1 && tag != 2) || (tag == 2 && part < c)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// prop7-mixed
// ---------------------------------------------------------------------------

RegularComposition split_two_colors(const ColoredComposition& comp, int b, int c) {
    if (b < 2 || b >= c) {
        throw std::invalid_argument("the block-splitting map needs 2 <= b < c");
    }
    require_colors(comp, b, c, "every part must carry color b or c");
    RegularComposition out;
    for (const ColoredPart& part : comp.parts()) {
        out.parts.push_back(part.color);
        for (int square = part.color; square < part.size; ++square) {
            out.parts.push_back(1);
        }
    }
    return out;
}

ColoredComposition merge_two_colors(const RegularComposition& comp, int b, int c) {
    if (b < 2 || b >= c) {
        throw std::invalid_argument("the block-merging map needs 2 <= b < c");
    }
    require_untyped(comp);
    require(in_mixed_family(comp, b, c), "parts must lie in {1, b, c} with first part b or c");
    std::vector<ColoredPart> parts;
    for (long long part : comp.parts) {
        if (part == 1) {
            ++parts.back().size;
        } else {
            parts.push_back({static_cast<int>(part), static_cast<int>(part)});
        }
    }
    return ColoredComposition(std::move(parts));
}

bool in_mixed_family(const RegularComposition& comp, int b, int c) {
    if (!comp.tags.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        const long long part = comp.parts[i];
        if (part != 1 && part != b && part != c) {
            return false;
        }
        if (i == 0 && part == 1) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// prop11
// ---------------------------------------------------------------------------

RegularComposition shift_prohibited_prefix(const ColoredComposition& comp, int d) {
    if (d < 1) {
        throw std::invalid_argument("d must be at least 1");
    }
    require(!comp.empty(), "composition must be nonempty");
    for (const ColoredPart& part : comp.parts()) {
        require(part.color >= d + 1, "every color must exceed d");
    }
    RegularComposition out;
    bool first = true;
    for (const ColoredPart& part : comp.parts()) {
        // The first tile loses its d leading empty squares.
        const long long size = first ? part.size - d : part.size;
        const long long color = first ? part.color - d : part.color;
        first = false;
        out.parts.push_back(color);
        for (long long square = color; square < size; ++square) {
            out.parts.push_back(1);
        }
    }
    if (d == 1) {
        // Here tail squares and appended parts d would both be 1s, so the
        // replacement step is skipped and the image is all compositions.
        return out;
    }
    RegularComposition folded;
    for (long long part : out.parts) {
        long long residue = part % (2LL * d);
        if (residue == 0) {
            residue = 2LL * d;
        }
        if (residue > d) {
            folded.parts.push_back(part - d);
            folded.parts.push_back(d);
        } else {
            folded.parts.push_back(part);
        }
    }
    return folded;
}

ColoredComposition unshift_prohibited_prefix(const RegularComposition& comp, int d) {
    if (d < 1) {
        throw std::invalid_argument("d must be at least 1");
    }
    require(!comp.empty(), "composition must be nonempty");
    require_untyped(comp);
    require(in_mod2d_family(comp, d),
            "parts must be 1..d mod 2d with small parts first or followed by an odd run of d");
    std::vector<long long> parts = comp.parts;
    if (d >= 2) {
        // Right to left, each part d rejoins the part it was split from;
        // a merged part exceeds d, so it is never merged again.
        for (std::size_t i = parts.size(); i-- > 1;) {
            if (parts[i] == d) {
                parts[i - 1] += d;
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }
    parts[0] += d;
    std::vector<ColoredPart> tiles;
    for (long long part : parts) {
        if (part == 1 && !tiles.empty() && tiles.back().color > 1) {
            ++tiles.back().size;  // tail square
        } else {
            require(part > d, "block values must exceed d after rejoining");
            tiles.push_back({static_cast<int>(part), static_cast<int>(part)});
        }
    }
    return ColoredComposition(std::move(tiles));
}

bool in_mod2d_family(const RegularComposition& comp, int d) {
    if (!comp.tags.empty()) {
        return false;
    }
    if (d == 1) {
        return true;
    }
    for (long long part : comp.parts) {
        long long residue = part % (2LL * d);
        if (residue == 0) {
            residue = 2LL * d;
        }
        if (residue > d) {
            return false;
        }
    }
    // A part in 2..d-1 must be first or followed by an odd run of parts d.
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        if (comp.parts[i] < 2 || comp.parts[i] > d - 1 || i == 0) {
            continue;
        }
        std::size_t run = 0;
        for (std::size_t j = i + 1; j < comp.parts.size() && comp.parts[j] == d; ++j) {
            ++run;
        }
        if (run % 2 == 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// prop12-rect
// ---------------------------------------------------------------------------

ColoredComposition rectangle_to_composition(const MarkedRectangle& rect) {
    validate(rect);
    std::vector<ColoredPart> parts;
    long long pos = 1;
    for (std::size_t i = 0; i + 2 < rect.marks.size(); i += 3) {
        const long long first = rect.marks[i];
        const long long spot = rect.marks[i + 1];
        const long long last = rect.marks[i + 2];
        for (; pos < first; ++pos) {
            parts.push_back({1, 1});
        }
        const long long size = last - first;  // one square of the triple is removed
        const long long color = (spot == first + 1) ? 1 : spot - first + 1;
        parts.push_back({static_cast<int>(size), static_cast<int>(color)});
        pos = last + 1;
    }
    for (; pos <= rect.length; ++pos) {
        parts.push_back({1, 1});
    }
    return ColoredComposition(std::move(parts));
}

MarkedRectangle composition_to_rectangle(const ColoredComposition& comp) {
    for (const ColoredPart& part : comp.parts()) {
        require(part.color != 2, "color 2 must not appear");
    }
    MarkedRectangle rect;
    long long pos = 1;
    for (const ColoredPart& part : comp.parts()) {
        if (part.size == 1) {
            ++pos;
            continue;
        }
        // Grown by one square: before the spot for color 1 (making the
        // spot land on square 2), after the tail otherwise.
        const long long spot = (part.color == 1) ? pos + 1 : pos + part.color - 1;
        rect.marks.push_back(pos);
        rect.marks.push_back(spot);
        rect.marks.push_back(pos + part.size);
        pos += part.size + 1;
    }
    rect.length = pos - 1;
    return rect;
}

// ---------------------------------------------------------------------------
// prop13-mod3
// ---------------------------------------------------------------------------

OpenWord open_word_no_color2(const ColoredComposition& comp) {
    for (const ColoredPart& part : comp.parts()) {
        require(part.color != 2, "color 2 must not appear");
    }
    OpenWord word;
    for (const ColoredPart& part : comp.parts()) {
        const long long size = part.size;
        const long long color = part.color;
        if (size == 1) {
            word.push_back({3, true, true});
        } else if (color == 1) {
            word.push_back({2, true, false});
            word.push_back({2, false, false});
            word.push_back({3 * size - 4, false, false});
        } else {
            word.push_back({2, true, false});
            word.push_back({3 * color - 4, false, false});
            word.push_back({3 * size - 3 * color + 2, false, false});
        }
    }
    word.push_back({2, true, false});
    return word;
}

RegularComposition merge_open_word(const OpenWord& word) {
    OpenWord merged;
    for (const OpenPart& item : word) {
        if (!merged.empty() && merged.back().right_open && item.left_open) {
            merged.back().value += item.value;
            merged.back().right_open = item.right_open;
        } else {
            merged.push_back(item);
        }
    }
    RegularComposition out;
    for (const OpenPart& item : merged) {
        out.parts.push_back(item.value);
    }
    return out;
}

RegularComposition expand_no_color2(const ColoredComposition& comp) {
    return merge_open_word(open_word_no_color2(comp));
}

ColoredComposition collapse_no_color2(const RegularComposition& comp) {
    require_untyped(comp);
    require(in_mod3_family(comp), "every part must be 2 mod 3");
    require(comp.parts.size() % 3 == 1, "part count must be 1 mod 3");
    const std::size_t groups = comp.parts.size() / 3;
    std::vector<ColoredPart> parts;
    for (std::size_t g = 0; g <= groups; ++g) {
        const long long head = comp.parts[3 * g];
        for (long long ones = (head - 2) / 3; ones > 0; --ones) {
            parts.push_back({1, 1});
        }
        if (g == groups) {
            break;  // the trailing 2 of the last head is simply dropped
        }
        const long long x = comp.parts[3 * g + 1];
        const long long y = comp.parts[3 * g + 2];
        const long long size = (2 + x + y) / 3;
        const long long color = (x == 2) ? 1 : (x + 4) / 3;
        parts.push_back({static_cast<int>(size), static_cast<int>(color)});
    }
    return ColoredComposition(std::move(parts));
}

bool in_mod3_family(const RegularComposition& comp) {
    if (!comp.tags.empty()) {
        return false;
    }
    return std::all_of(comp.parts.begin(), comp.parts.end(),
                       [](long long part) { return part % 3 == 2; });
}

// ---------------------------------------------------------------------------
// prop14-binary
// ---------------------------------------------------------------------------

namespace {

void check_modular_params(int m, int i) {
    if (m < 2 || i < 2 || i > m) {
        throw std::invalid_argument("parameters must satisfy m >= 2 and 2 <= i <= m");
    }
}

}  // namespace

std::string binary_from_modular(const ColoredComposition& comp, int m, int i) {
    check_modular_params(m, i);
    require(!comp.empty(), "composition must be nonempty");
    for (const ColoredPart& part : comp.parts()) {
        require(part.color % m == i % m, "every color must be congruent to i mod m");
    }
    std::string bits;
    for (const ColoredPart& part : comp.parts()) {
        bits.append(static_cast<std::size_t>(part.color - 1), '1');
        bits.append(static_cast<std::size_t>(part.size - part.color + 1), '0');
    }
    bits.pop_back();  // the tiling always ends in a 0
    return bits;
}

ColoredComposition modular_from_binary(std::string_view bits, int m, int i) {
    check_modular_params(m, i);
    for (char bit : bits) {
        require(bit == '0' || bit == '1', "string must be binary");
    }
    require(!bits.empty() && bits.front() == '1', "string must start with 1");
    std::string padded(bits);
    padded.push_back('0');
    std::vector<ColoredPart> parts;
    std::size_t pos = 0;
    while (pos < padded.size()) {
        std::size_t ones = 0;
        while (pos < padded.size() && padded[pos] == '1') {
            ++ones;
            ++pos;
        }
        require(ones % static_cast<std::size_t>(m) == static_cast<std::size_t>(i - 1),
                "every run of 1s must have length congruent to i-1 mod m");
        std::size_t zeros = 0;
        while (pos < padded.size() && padded[pos] == '0') {
            ++zeros;
            ++pos;
        }
        parts.push_back({static_cast<int>(ones + zeros), static_cast<int>(ones + 1)});
    }
    return ColoredComposition(std::move(parts));
}

bool in_binary_family(std::string_view bits, int m, int i) {
    check_modular_params(m, i);
    if (bits.empty() || bits.front() != '1') {
        return false;
    }
    std::size_t pos = 0;
    while (pos < bits.size()) {
        if (bits[pos] == '0') {
            ++pos;
            continue;
        }
        std::size_t ones = 0;
        while (pos < bits.size() && bits[pos] == '1') {
            ++ones;
            ++pos;
        }
        if (ones % static_cast<std::size_t>(m) != static_cast<std::size_t>(i - 1)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// prop15-odd
// ---------------------------------------------------------------------------

ColoredComposition odd_from_no_one_one(const ColoredComposition& comp, bool from_previous) {
    for (const ColoredPart& part : comp.parts()) {
        require(!(part.size == 1 && part.color == 1), "the part 1_1 must not appear");
    }
    std::vector<ColoredPart> source = comp.parts();
    if (from_previous) {
        source.push_back({1, 1});
    }
    std::vector<ColoredPart> parts;
    for (const ColoredPart& part : source) {
        if (part.color % 2 == 0) {
            parts.push_back({1, 1});
            parts.push_back({part.size - 1, part.color - 1});
        } else {
            parts.push_back(part);
        }
    }
    return ColoredComposition(std::move(parts));
}

std::pair<ColoredComposition, bool> no_one_one_from_odd(const ColoredComposition& comp) {
    for (const ColoredPart& part : comp.parts()) {
        require(part.color % 2 == 1, "every color must be odd");
    }
    std::vector<ColoredPart> parts;
    bool from_previous = false;
    const auto& source = comp.parts();
    for (std::size_t i = 0; i < source.size();) {
        if (source[i].size == 1 && source[i].color == 1) {
            if (i + 1 == source.size()) {
                from_previous = true;  // terminal 1_1 came from the shifted set
                ++i;
            } else {
                parts.push_back({source[i + 1].size + 1, source[i + 1].color + 1});
                i += 2;
            }
        } else {
            parts.push_back(source[i]);
            ++i;
        }
    }
    return {ColoredComposition(std::move(parts)), from_previous};
}

}  // namespace ncolor
