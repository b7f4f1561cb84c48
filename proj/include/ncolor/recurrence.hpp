#pragma once

#include <optional>
#include <vector>

#include "ncolor/bigint.hpp"
#include "ncolor/constraint.hpp"

namespace ncolor {

/// Counting sequence for a finite set of allowed colors:
///   a(n) = a(n-1) + sum_i a(n-c_i)
/// with a(0) = 1, a(n) = 0 for 0 < n < min(colors), and a(min(colors)) = 1
/// prescribed (the recurrence itself only applies above the smallest
/// color; at n = min there would be a double count when 1 is allowed).
/// Throws std::invalid_argument on an empty color set.
CountSequence seq_allowed(std::vector<int> colors, int horizon);

/// Counting sequence for a finite set of prohibited colors:
///   a(n) = 3a(n-1) - a(n-2) + sum_i (-a(n-d_i) + a(n-d_i-1))
/// Initial values through max(d_max, 2) come from seq_allowed on the
/// complementary colors below that bound; the extension to n = 2 is needed
/// because the recurrence's a(n-2) term has no partner for the empty
/// composition, which only matters when d_max = 1.
CountSequence seq_prohibited(std::vector<int> colors, int horizon);

/// Counting sequence for allowed colors congruent to the given residues
/// modulo m (residue m standing for multiples of m):
///   a(n) = a(n-1) + a(n-m) - a(n-m-1) + sum_i a(n-r_i)   for n >= m+2
/// with a(0..m+1) from seq_allowed on the residues themselves, plus the
/// color m+1 when residue 1 is present.
CountSequence seq_modular(int modulus, std::vector<int> residues, int horizon);

/// Prohibited run first..first+extra via the telescoped form
///   a(n) = 3a(n-1) - a(n-2) - a(n-first) + a(n-first-extra-1)
/// Implemented separately from seq_prohibited and tested equal to it.
CountSequence seq_prohibited_run(int first, int extra, int horizon);

/// Routes a constraint to the engine that evaluates it; the unrestricted
/// case runs as all residues mod 1. No-part-1_1 has no recurrence here,
/// so it yields nothing.
std::optional<CountSequence> recurrence_for(const ColorConstraint& constraint, int horizon);

}  // namespace ncolor
