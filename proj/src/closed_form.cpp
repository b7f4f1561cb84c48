#include "ncolor/closed_form.hpp"

#include <stdexcept>

namespace ncolor {

BinomialTable::BinomialTable(int bound) : bound_(bound) {
    if (bound < 0) {
        throw std::invalid_argument("binomial bound must be nonnegative");
    }
    rows_.resize(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(n)] = 1;
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows_[n - 1][static_cast<std::size_t>(k) - 1] + rows_[n - 1][static_cast<std::size_t>(k)];
        }
    }
}

const BigInt& BinomialTable::at(long long n, long long k) const {
    static const BigInt kZero{0};
    if (k < 0 || n < 0 || k > n) {
        return kZero;
    }
    if (n > bound_) {
        throw std::logic_error("binomial table bound exceeded");
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// The sums below assume n >= 1; each caller maps n = 0 to 1 (the empty
// composition falls outside the one-part-and-up summation ranges).

BigInt single_color_sum(const BinomialTable& binom, int c, int n) {
    BigInt total = 0;
    for (int m = 1; m <= n; ++m) {
        total += binom.at(n - static_cast<long long>(c - 1) * m - 1, m - 1);
    }
    return total;
}

BigInt two_color_sum(const BinomialTable& binom, int b, int c, int n) {
    BigInt total = 0;
    for (int m = 1; m <= n; ++m) {
        for (int i = 0; i <= n - b * m; ++i) {
            const int rest = n - b * m - i;
            if (rest % (c - b) != 0) {
                continue;  // binomial of a noninteger is 0
            }
            total += binom.at(i + m - 1, m - 1) * binom.at(m, rest / (c - b));
        }
    }
    return total;
}

// Ways to place nj leading empty squares onto ij tiles of color at most j.
BigInt prefix_blocks(const BinomialTable& binom, int j, long long nj, long long ij) {
    if (nj < 0) {
        return 0;
    }
    if (j == 2) {
        return binom.at(ij, nj);
    }
    BigInt total = 0;
    for (long long lower = 0; lower <= ij; ++lower) {
        total += binom.at(ij, ij - lower) *
                 prefix_blocks(binom, j - 1, nj - static_cast<long long>(j - 1) * (ij - lower), lower);
    }
    return total;
}

BigInt allow_prefix_sum(const BinomialTable& binom, int c, int n) {
    if (c == 1) {
        return BigInt(1) << (n - 1);
    }
    BigInt total = 0;
    for (int parts = 1; parts <= n; ++parts) {
        for (int tails = 0; tails <= n - parts; ++tails) {
            const BigInt& tail_ways = binom.at(tails + parts - 1, parts - 1);
            if (tail_ways == 0) {
                continue;
            }
            total += tail_ways * prefix_blocks(binom, c, n - parts - tails, parts);
        }
    }
    return total;
}

BigInt prohibit_prefix_sum(const BinomialTable& binom, int d, int n) {
    BigInt total = 0;
    for (int m = 1; m <= n / (d + 1); ++m) {
        total += binom.at(n - static_cast<long long>(d - 1) * m - 1, 2 * m - 1);
    }
    return total;
}

BigInt no_color2_sum(const BinomialTable& binom, int n) {
    BigInt total = 0;
    for (int k = 0; k <= n / 2; ++k) {
        total += binom.at(n + k, 3LL * k);
    }
    return total;
}

void check_n(int n) {
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
}

}  // namespace

BigInt count_single_color(int c, int n) {
    if (c < 1) {
        throw std::invalid_argument("color must be positive");
    }
    check_n(n);
    if (n == 0) {
        return 1;
    }
    return single_color_sum(BinomialTable(n), c, n);
}

BigInt count_two_colors(int b, int c, int n) {
    if (b < 1 || b >= c) {
        throw std::invalid_argument("colors must satisfy 1 <= b < c");
    }
    check_n(n);
    if (n == 0) {
        return 1;
    }
    return two_color_sum(BinomialTable(n), b, c, n);
}

BigInt count_allow_prefix(int c, int n) {
    if (c < 1) {
        throw std::invalid_argument("color bound must be positive");
    }
    check_n(n);
    if (n == 0) {
        return 1;
    }
    return allow_prefix_sum(BinomialTable(n), c, n);
}

BigInt count_by_parts(int n, int m) {
    if (n < 0 || m < 0) {
        throw std::invalid_argument("n and m must be nonnegative");
    }
    const BinomialTable binom(n + m);
    return binom.at(n + static_cast<long long>(m) - 1, 2 * static_cast<long long>(m) - 1);
}

BigInt count_prohibit_prefix(int d, int n) {
    if (d < 1) {
        throw std::invalid_argument("prohibited prefix bound must be positive");
    }
    check_n(n);
    if (n == 0) {
        return 1;
    }
    return prohibit_prefix_sum(BinomialTable(n), d, n);
}

BigInt count_no_color2(int n) {
    check_n(n);
    return no_color2_sum(BinomialTable(n + n / 2), n);
}

namespace {

enum class Form { None, Single, Two, AllowPrefix, ProhibitPrefix, NoColor2 };

Form form_for(const ColorConstraint& constraint) {
    switch (constraint.kind()) {
        case ColorConstraint::Kind::AllowedSet: {
            const auto& colors = constraint.colors();
            if (colors.size() == 1) {
                return Form::Single;
            }
            if (colors.size() == 2) {
                return Form::Two;
            }
            if (colors.front() == 1 && colors.back() == static_cast<int>(colors.size())) {
                return Form::AllowPrefix;
            }
            return Form::None;
        }
        case ColorConstraint::Kind::ProhibitedSet: {
            const auto& colors = constraint.colors();
            if (colors.size() == 1 && colors[0] == 2) {
                return Form::NoColor2;
            }
            if (colors.front() == 1 && colors.back() == static_cast<int>(colors.size())) {
                return Form::ProhibitPrefix;
            }
            return Form::None;
        }
        default:
            return Form::None;
    }
}

BigInt evaluate(Form form, const ColorConstraint& constraint, const BinomialTable& binom, int n) {
    if (n == 0) {
        return 1;
    }
    switch (form) {
        case Form::Single:
            return single_color_sum(binom, constraint.colors()[0], n);
        case Form::Two:
            return two_color_sum(binom, constraint.colors()[0], constraint.colors()[1], n);
        case Form::AllowPrefix:
            return allow_prefix_sum(binom, constraint.max_color(), n);
        case Form::ProhibitPrefix:
            return prohibit_prefix_sum(binom, constraint.max_color(), n);
        case Form::NoColor2:
            return no_color2_sum(binom, n);
        case Form::None:
            break;
    }
    throw std::logic_error("no closed form to evaluate");
}

}  // namespace

std::optional<BigInt> closed_form_count(const ColorConstraint& constraint, int n) {
    const Form form = form_for(constraint);
    if (form == Form::None) {
        return std::nullopt;
    }
    check_n(n);
    const BinomialTable binom(n + n / 2);
    return evaluate(form, constraint, binom, n);
}

std::optional<CountSequence> closed_form_sequence(const ColorConstraint& constraint, int horizon) {
    const Form form = form_for(constraint);
    if (form == Form::None) {
        return std::nullopt;
    }
    check_n(horizon);
    const BinomialTable binom(horizon + horizon / 2);
    CountSequence seq;
    seq.method = CountSequence::Method::ClosedForm;
    seq.constraint = constraint;
    seq.values.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int n = 0; n <= horizon; ++n) {
        seq.values.push_back(evaluate(form, constraint, binom, n));
    }
    return seq;
}

}  // namespace ncolor
