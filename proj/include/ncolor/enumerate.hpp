#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/composition.hpp"
#include "ncolor/constraint.hpp"

namespace ncolor {

/// Enumeration refuses sums above the cap; callers that only need counts
/// should switch to the recurrence or closed form well before this.
inline constexpr int kDefaultEnumerationCap = 22;

class CapExceededError : public std::runtime_error {
public:
    CapExceededError(int n, int cap)
        : std::runtime_error("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                             std::to_string(cap) + "; use the recurrence or closed form"),
          n_(n),
          cap_(cap) {}

    int n() const noexcept { return n_; }
    int cap() const noexcept { return cap_; }

private:
    int n_;
    int cap_;
};

struct EnumerationRequest {
    int n = 0;
    ColorConstraint constraint;
    /// When set, only compositions with exactly this many parts.
    std::optional<int> parts;
    int cap = kDefaultEnumerationCap;
};

namespace detail {

/// Recursive descent over (first part size, color); visits each valid
/// composition exactly once in lexicographic order by (size, color) pairs.
/// The single walker backs generation and counting alike so the oracle has
/// one auditable code path. `parts_left` < 0 means no part-count filter.
template <typename Visitor>
void walk_colored(int remaining, int parts_left, const ColorConstraint& constraint,
                  std::vector<ColoredPart>& prefix, Visitor&& visit) {
    if (remaining == 0) {
        if (parts_left <= 0) {
            visit(std::span<const ColoredPart>(prefix));
        }
        return;
    }
    if (parts_left == 0 || (parts_left > 0 && remaining < parts_left)) {
        return;
    }
    const int next_left = parts_left > 0 ? parts_left - 1 : -1;
    for (int size = 1; size <= remaining; ++size) {
        for (int color = 1; color <= size; ++color) {
            if (!constraint.permits(size, color)) {
                continue;
            }
            prefix.push_back({size, color});
            walk_colored(remaining - size, next_left, constraint, prefix, visit);
            prefix.pop_back();
        }
    }
}

}  // namespace detail

/// Visits every composition of req.n satisfying the constraint, each
/// exactly once, in lexicographic order. Throws CapExceededError when
/// req.n > req.cap and std::invalid_argument for negative inputs.
void enumerate_colored(const EnumerationRequest& req,
                       const std::function<void(const ColoredComposition&)>& visit);

std::vector<ColoredComposition> list_colored(const EnumerationRequest& req);

/// Stream length of enumerate_colored, computed by the same serial walk
/// without materializing compositions. This is the reference count every
/// other method is tested against.
BigInt count_colored(const EnumerationRequest& req);

/// Same count, walking first-two-part prefixes in parallel (OpenMP when
/// enabled). Exactly equals count_colored.
BigInt count_colored_parallel(const EnumerationRequest& req);

/// a(0..horizon) by exhaustive counting.
CountSequence seq_enumerated(const ColorConstraint& constraint, int horizon,
                             int cap = kDefaultEnumerationCap);

/// Families of regular compositions that appear as bijection targets.
struct RegularFamily {
    enum class Kind {
        MinParts,    ///< parts >= c
        OneC,        ///< parts in {1, c}, first part c (c >= 2)
        Typed,       ///< parts >= b, every part tagged, tag 2 only for parts >= c
        Mixed,       ///< parts in {1, b, c}, first part b or c (2 <= b < c)
        Mod2d,       ///< parts ≡ 1..d (mod 2d) plus the small-part follower rule;
                     ///< for d = 1 the family is all compositions
        Mod3,        ///< parts ≡ 2 (mod 3)
        TaggedOnes,  ///< compositions of n-1 with every part 1, two types per part
    };

    Kind kind = Kind::MinParts;
    int c = 0;
    int b = 0;
    int d = 0;

    static RegularFamily min_parts(int c);
    static RegularFamily one_c(int c);
    static RegularFamily typed(int b, int c);
    static RegularFamily mixed(int b, int c);
    static RegularFamily mod_2d(int d);
    static RegularFamily mod3();
    static RegularFamily tagged_ones();

    std::string describe() const;
};

/// Visits every family member with sum n (sum n-1 for TaggedOnes) exactly
/// once, in lexicographic order by (part, tag) pairs.
void enumerate_regular(int n, const RegularFamily& family,
                       const std::function<void(const RegularComposition&)>& visit,
                       int cap = kDefaultEnumerationCap);

std::vector<RegularComposition> list_regular(int n, const RegularFamily& family,
                                             int cap = kDefaultEnumerationCap);

BigInt count_regular(int n, const RegularFamily& family, int cap = kDefaultEnumerationCap);

/// Membership test for a candidate composition (sum checked against n).
bool family_contains(int n, const RegularFamily& family, const RegularComposition& comp);

}  // namespace ncolor
