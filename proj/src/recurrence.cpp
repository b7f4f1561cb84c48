#include "ncolor/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncolor {

namespace {

/// Bottom-up table with the shared convention a(n) = 0 for n <= -1; every
/// engine reads history through at() so the convention cannot drift.
class SeqTable {
public:
    explicit SeqTable(int horizon) : values_(static_cast<std::size_t>(horizon) + 1) {}

    const BigInt& at(int n) const { return n < 0 ? kZero : values_[static_cast<std::size_t>(n)]; }

    void set(int n, BigInt value) {
        if (value < 0) {
            throw std::logic_error("recurrence produced a negative count at n = " +
                                   std::to_string(n) + "; initial-value conventions violated");
        }
        values_[static_cast<std::size_t>(n)] = std::move(value);
    }

    std::vector<BigInt> take() { return std::move(values_); }

private:
    static const BigInt kZero;
    std::vector<BigInt> values_;
};

const BigInt SeqTable::kZero{0};

std::vector<int> sorted_colors(std::vector<int> colors, const char* what) {
    if (colors.empty()) {
        throw std::invalid_argument(std::string(what) + " must be nonempty");
    }
    for (int c : colors) {
        if (c < 1) {
            throw std::invalid_argument(std::string(what) + " entries must be positive");
        }
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

void check_horizon(int horizon) {
    if (horizon < 0) {
        throw std::invalid_argument("horizon must be nonnegative");
    }
}

/// Fills table[0..limit] for a finite allowed color set.
void fill_allowed(SeqTable& table, const std::vector<int>& colors, int limit) {
    const int c_min = colors.front();
    table.set(0, 1);
    for (int n = 1; n <= limit; ++n) {
        if (n < c_min) {
            table.set(n, 0);
        } else if (n == c_min) {
            table.set(n, 1);
        } else {
            BigInt value = table.at(n - 1);
            for (int c : colors) {
                value += table.at(n - c);
            }
            table.set(n, std::move(value));
        }
    }
}

/// Initial segment for a prohibited set: below the recurrence's start the
/// prohibition is equivalent to allowing the complementary colors below
/// that bound. `limit` is the last index to fill.
void fill_prohibited_initial(SeqTable& table, const std::vector<int>& prohibited, int limit) {
    std::vector<int> complement;
    for (int c = 1; c <= limit; ++c) {
        if (!std::binary_search(prohibited.begin(), prohibited.end(), c)) {
            complement.push_back(c);
        }
    }
    if (complement.empty()) {
        table.set(0, 1);
        for (int n = 1; n <= limit; ++n) {
            table.set(n, 0);
        }
    } else {
        fill_allowed(table, complement, limit);
    }
}

}  // namespace

CountSequence seq_allowed(std::vector<int> colors, int horizon) {
    check_horizon(horizon);
    colors = sorted_colors(std::move(colors), "allowed color set");
    SeqTable table(horizon);
    fill_allowed(table, colors, horizon);
    CountSequence seq;
    seq.values = table.take();
    seq.method = CountSequence::Method::Recurrence;
    seq.constraint = ColorConstraint::allowed(colors);
    return seq;
}

CountSequence seq_prohibited(std::vector<int> colors, int horizon) {
    check_horizon(horizon);
    colors = sorted_colors(std::move(colors), "prohibited color set");
    // The subtracted a(n-2) term pairs compositions of n-2 with an enlarged
    // last part, which the empty composition lacks; so the recurrence is
    // only valid from n = 3 even when the largest prohibited color is 1.
    const int start = std::max(colors.back() + 1, 3);
    SeqTable table(horizon);
    fill_prohibited_initial(table, colors, std::min(start - 1, horizon));
    for (int n = start; n <= horizon; ++n) {
        BigInt value = 3 * table.at(n - 1) - table.at(n - 2);
        for (int d : colors) {
            value += table.at(n - d - 1) - table.at(n - d);
        }
        table.set(n, std::move(value));
    }
    CountSequence seq;
    seq.values = table.take();
    seq.method = CountSequence::Method::Recurrence;
    seq.constraint = ColorConstraint::prohibited(colors);
    return seq;
}

CountSequence seq_modular(int modulus, std::vector<int> residues, int horizon) {
    check_horizon(horizon);
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be at least 1");
    }
    residues = sorted_colors(std::move(residues), "residue set");
    if (residues.back() > modulus) {
        throw std::invalid_argument("residues must lie in 1..modulus");
    }
    std::vector<int> initial_colors = residues;
    if (residues.front() == 1) {
        // Color m+1 belongs to residue class 1 and is reachable below the
        // recurrence's start, so the initial segment must admit it.
        initial_colors.push_back(modulus + 1);
    }
    SeqTable table(horizon);
    fill_allowed(table, initial_colors, std::min(modulus + 1, horizon));
    for (int n = modulus + 2; n <= horizon; ++n) {
        BigInt value = table.at(n - 1) + table.at(n - modulus) - table.at(n - modulus - 1);
        for (int r : residues) {
            value += table.at(n - r);
        }
        table.set(n, std::move(value));
    }
    CountSequence seq;
    seq.values = table.take();
    seq.method = CountSequence::Method::Recurrence;
    seq.constraint = ColorConstraint::modular(modulus, residues);
    return seq;
}

std::optional<CountSequence> recurrence_for(const ColorConstraint& constraint, int horizon) {
    switch (constraint.kind()) {
        case ColorConstraint::Kind::AllowedSet:
            return seq_allowed(constraint.colors(), horizon);
        case ColorConstraint::Kind::ProhibitedSet:
            return seq_prohibited(constraint.colors(), horizon);
        case ColorConstraint::Kind::Modular:
            return seq_modular(constraint.modulus(), constraint.colors(), horizon);
        case ColorConstraint::Kind::Unrestricted:
            return seq_modular(1, {1}, horizon);
        case ColorConstraint::Kind::NoPartOneOne:
            return std::nullopt;
    }
    return std::nullopt;
}

CountSequence seq_prohibited_run(int first, int extra, int horizon) {
    check_horizon(horizon);
    if (first < 1 || extra < 0) {
        throw std::invalid_argument("run must satisfy first >= 1 and extra >= 0");
    }
    std::vector<int> colors;
    for (int c = first; c <= first + extra; ++c) {
        colors.push_back(c);
    }
    const int start = std::max(colors.back() + 1, 3);
    SeqTable table(horizon);
    fill_prohibited_initial(table, colors, std::min(start - 1, horizon));
    for (int n = start; n <= horizon; ++n) {
        BigInt value =
            3 * table.at(n - 1) - table.at(n - 2) - table.at(n - first) + table.at(n - first - extra - 1);
        table.set(n, std::move(value));
    }
    CountSequence seq;
    seq.values = table.take();
    seq.method = CountSequence::Method::Recurrence;
    seq.constraint = ColorConstraint::prohibited(colors);
    return seq;
}

}  // namespace ncolor
