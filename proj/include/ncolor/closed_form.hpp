#pragma once

#include <optional>

#include "ncolor/bigint.hpp"
#include "ncolor/constraint.hpp"

namespace ncolor {

/// Exact Pascal triangle up to a fixed bound. C(n, k) is 0 outside
/// 0 <= k <= n; immutable after construction, so safe to share.
class BinomialTable {
public:
    explicit BinomialTable(int bound);

    /// Throws std::logic_error when n exceeds the bound.
    const BigInt& at(long long n, long long k) const;

    int bound() const noexcept { return bound_; }

private:
    int bound_;
    std::vector<std::vector<BigInt>> rows_;
};

// Every formula returns 1 at n = 0 (the empty composition), although the
// sums below start at one part.

/// Only color c allowed:  sum_m C(n - (c-1)m - 1, m - 1).
BigInt count_single_color(int c, int n);

/// Only colors b < c allowed:
///   sum_m sum_i C(i+m-1, m-1) * C(m, (n-bm-i)/(c-b)),
/// terms contributing only when c-b divides n-bm-i exactly (the divisibility
/// test stands in for the "binomial of a noninteger is 0" convention).
BigInt count_two_colors(int b, int c, int n);

/// Colors 1..c allowed. c = 1 short-circuits to 2^(n-1); otherwise the
/// nested-sum formula with
///   G_2(n2, i2) = C(i2, n2)
///   G_j(nj, ij) = sum_{i' <= ij} C(ij, ij - i') * G_{j-1}(nj - (j-1)(ij - i'), i').
BigInt count_allow_prefix(int c, int n);

/// Unrestricted compositions of n with exactly m parts: C(n+m-1, 2m-1).
BigInt count_by_parts(int n, int m);

/// Colors 1..d prohibited:  sum_{m <= n/(d+1)} C(n - (d-1)m - 1, 2m - 1).
BigInt count_prohibit_prefix(int d, int n);

/// Color 2 prohibited:  sum_{k <= n/2} C(n+k, 3k).
BigInt count_no_color2(int n);

/// Dispatches to the closed form that covers `constraint`, when one does:
/// a single allowed color, two allowed colors, allowed prefix 1..c,
/// prohibited prefix 1..d, or prohibited {2}.
std::optional<BigInt> closed_form_count(const ColorConstraint& constraint, int n);

/// a(0..horizon) through closed_form_count's dispatch, sharing one
/// binomial table across the whole horizon.
std::optional<CountSequence> closed_form_sequence(const ColorConstraint& constraint, int horizon);

}  // namespace ncolor
