#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/composition.hpp"

namespace ncolor {

/// Which colors parts may carry. Immutable value type; the five kinds are
/// the only color restrictions the library models (arbitrary predicates
/// stay in test code).
class ColorConstraint {
public:
    enum class Kind {
        Unrestricted,
        AllowedSet,     ///< color must lie in a finite set
        ProhibitedSet,  ///< color must avoid a finite set
        Modular,        ///< color mod m (0 read as m) must lie in a residue set
        NoPartOneOne,   ///< exactly the part 1_1 is prohibited
    };

    /// Default-constructed constraints are unrestricted.
    ColorConstraint() = default;

    static ColorConstraint unrestricted();
    /// Nonempty positive colors; duplicates removed, stored ascending.
    static ColorConstraint allowed(std::vector<int> colors);
    static ColorConstraint prohibited(std::vector<int> colors);
    /// modulus >= 1; residues nonempty, each in 1..modulus. Residue m
    /// stands for the class of multiples of m.
    static ColorConstraint modular(int modulus, std::vector<int> residues);
    static ColorConstraint no_part_one_one();

    /// Mini-grammar: `all | allow=LIST | forbid=LIST | mod=M:LIST | no11`
    /// with LIST a comma-separated list of positive integers.
    static ColorConstraint parse(std::string_view text);

    /// Canonical descriptor, the inverse of parse() (lists normalized).
    std::string describe() const;

    Kind kind() const noexcept { return kind_; }
    /// The allowed/prohibited colors or the modular residues, ascending.
    const std::vector<int>& colors() const noexcept { return colors_; }
    /// Modular kind only.
    int modulus() const noexcept { return modulus_; }
    /// Smallest / largest member of colors(); throws std::logic_error for
    /// kinds without a color set.
    int min_color() const;
    int max_color() const;

    /// May a part of `size` carry `color`?
    bool permits(int size, int color) const noexcept;
    bool satisfied_by(const ColoredComposition& comp) const noexcept;

    friend bool operator==(const ColorConstraint&, const ColorConstraint&) = default;

private:
    Kind kind_ = Kind::Unrestricted;
    std::vector<int> colors_;
    int modulus_ = 0;
};

inline bool satisfies(const ColoredComposition& comp, const ColorConstraint& constraint) {
    return constraint.satisfied_by(comp);
}

/// a(0..N) for one constraint, tagged with the producing method.
struct CountSequence {
    enum class Method { Enumerate, Recurrence, ClosedForm };

    std::vector<BigInt> values;
    Method method = Method::Recurrence;
    ColorConstraint constraint;
};

}  // namespace ncolor
