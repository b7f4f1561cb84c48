#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncolor/composition.hpp"

namespace ncolor {

/// A map input lies outside its declared domain or image; the message
/// names the violated predicate.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1 x length strip with marked squares; the mark count is a multiple of 3
/// and each consecutive mark triple encodes one part of size >= 2.
struct MarkedRectangle {
    long long length = 0;
    std::vector<long long> marks;  // strictly ascending, each in 1..length

    friend auto operator<=>(const MarkedRectangle&, const MarkedRectangle&) = default;
};

/// Throws std::invalid_argument unless marks are strictly ascending, lie
/// in 1..length, and number a multiple of 3.
void validate(const MarkedRectangle& rect);

/// Intermediate word whose items may merge across open ends: an item whose
/// right end is open absorbs a following item whose left end is open.
struct OpenPart {
    long long value = 0;
    bool left_open = false;
    bool right_open = false;

    friend bool operator==(const OpenPart&, const OpenPart&) = default;
};
using OpenWord = std::vector<OpenPart>;

// ---------------------------------------------------------------------------
// prop5-minparts: compositions with only color c  <->  parts >= c
// ---------------------------------------------------------------------------

/// Drops the colors; the image has all parts >= c.
RegularComposition strip_single_color(const ColoredComposition& comp, int c);
/// Re-attaches color c to every part.
ColoredComposition attach_single_color(const RegularComposition& comp, int c);
bool in_min_parts_family(const RegularComposition& comp, int c);

// ---------------------------------------------------------------------------
// prop5-onec: compositions with only color c (c >= 2)
//             <->  parts in {1, c} with first part c
// ---------------------------------------------------------------------------

/// Emits each tile's leading block as a part c and each tail square as a 1.
RegularComposition split_single_color(const ColoredComposition& comp, int c);
/// Merges each c with its following run of 1s into one part colored c.
ColoredComposition merge_single_color(const RegularComposition& comp, int c);
bool in_one_c_family(const RegularComposition& comp, int c);

// ---------------------------------------------------------------------------
// prop7-typed: compositions with colors b < c
//              <->  parts >= b, parts >= c carrying one of two type tags
// ---------------------------------------------------------------------------

/// Drops the colors and tags every part with its originating color
/// (tag 1 = b, tag 2 = c).
RegularComposition strip_two_colors(const ColoredComposition& comp, int b, int c);
ColoredComposition attach_two_colors(const RegularComposition& comp, int b, int c);
bool in_typed_family(const RegularComposition& comp, int b, int c);

// ---------------------------------------------------------------------------
// prop7-mixed: compositions with colors b < c (b >= 2)
//              <->  parts in {1, b, c} with first part b or c
// ---------------------------------------------------------------------------

/// Emits each tile's leading block as a part b or c and tail squares as 1s.
RegularComposition split_two_colors(const ColoredComposition& comp, int b, int c);
ColoredComposition merge_two_colors(const RegularComposition& comp, int b, int c);
bool in_mixed_family(const RegularComposition& comp, int b, int c);

// ---------------------------------------------------------------------------
// prop11: compositions of n+d with colors 1..d prohibited
//         <->  compositions of n with parts ≡ 1..d (mod 2d), where a part
//              in 2..d-1 is first or followed by an odd run of parts d.
//         For d = 1 the image is all compositions of n.
// ---------------------------------------------------------------------------

/// Drops the d leading empty squares, splits every tile into its block
/// value plus tail 1s, then (d >= 2 only) replaces each part with residue
/// in d+1..2d (mod 2d, 0 read as 2d) by that part minus d followed by d.
RegularComposition shift_prohibited_prefix(const ColoredComposition& comp, int d);
/// Right-to-left, folds each part equal to d into its left neighbor (once,
/// merged parts are not rescanned; skipped entirely for d = 1), adds d to
/// the leftmost part, then merges 1-runs back into colored tiles.
ColoredComposition unshift_prohibited_prefix(const RegularComposition& comp, int d);
bool in_mod2d_family(const RegularComposition& comp, int d);

// ---------------------------------------------------------------------------
// prop12-rect: marked rectangles of length n+k with 3k marks
//              <->  compositions of n prohibiting color 2 with k parts >= 2
// ---------------------------------------------------------------------------

/// Each mark triple (a, b, e) becomes a tile of size e-a with color
/// b-a+1, read as color 1 when b = a+1; unmarked squares outside the
/// triples become parts 1_1.
ColoredComposition rectangle_to_composition(const MarkedRectangle& rect);
/// Grows every part of size >= 2 by one square (before the spot for color
/// 1, after the tail otherwise) and marks its first, spotted and last
/// squares.
MarkedRectangle composition_to_rectangle(const ColoredComposition& comp);

// ---------------------------------------------------------------------------
// prop13-mod3: compositions of n prohibiting color 2
//              <->  compositions of 3n+2 with parts ≡ 2 (mod 3)
// ---------------------------------------------------------------------------

/// Steps before the merge: 1_1 becomes an open 3; a size-k color-1 part
/// becomes (left-open 2, 2, 3k-4); a size-k color-c part with c >= 3
/// becomes (left-open 2, 3c-4, 3k-3c+2); a final left-open 2 is appended.
OpenWord open_word_no_color2(const ColoredComposition& comp);
/// Merge pass: absorbs every left-open item into an open-ended
/// predecessor; leftover openness simply closes.
RegularComposition merge_open_word(const OpenWord& word);
/// open_word_no_color2 followed by merge_open_word.
RegularComposition expand_no_color2(const ColoredComposition& comp);
ColoredComposition collapse_no_color2(const RegularComposition& comp);
bool in_mod3_family(const RegularComposition& comp);

// ---------------------------------------------------------------------------
// prop14-binary: compositions of n with colors ≡ i (mod m), 2 <= i <= m
//                <->  binary strings of length n-1 that start with 1 and
//                     whose 1-runs have length ≡ i-1 (mod m)
// ---------------------------------------------------------------------------

/// Each tile maps to color-1 ones followed by size-color+1 zeros; one
/// trailing zero is then removed. The composition must be nonempty.
std::string binary_from_modular(const ColoredComposition& comp, int m, int i);
/// Appends a zero and decodes each maximal 1-run + 0-run as one tile.
ColoredComposition modular_from_binary(std::string_view bits, int m, int i);
bool in_binary_family(std::string_view bits, int m, int i);

// ---------------------------------------------------------------------------
// prop15-odd: compositions without the part 1_1, of n or of n-1,
//             <->  compositions of n with odd colors only
// ---------------------------------------------------------------------------

/// Appends 1_1 first when the source counts toward n-1, then rewrites
/// every even-colored part of size k as 1_1 followed by the part k-1 with
/// the next lower (odd) color.
ColoredComposition odd_from_no_one_one(const ColoredComposition& comp, bool from_previous);
/// Left to right, a 1_1 with a successor merges into that successor with
/// the next higher (even) color; a terminal 1_1 is removed and reported
/// through the returned flag.
std::pair<ColoredComposition, bool> no_one_one_from_odd(const ColoredComposition& comp);

}  // namespace ncolor
