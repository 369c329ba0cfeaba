#pragma once

#include <optional>
#include <span>

#include "gbp/census.hpp"

namespace gbp {

// Result of the k-tree filter on one candidate tuple: the root value when
// every pair sum stays inside its level window, or the terminal symbol
// (nullopt) when any pair sum leaves it.
using WagnerValue = std::optional<Residue>;

// Runs the binary-tree pair merge on a tuple of 2^n canonical residues.
// Requires a dyadic ring with m >= n; at m = n the root window is D_0 = {0}.
WagnerValue wagner_value(std::span<const Residue> x, const RingContext& ring);

// Number of index vectors whose tree value is zero, computed by level-wise
// windowed convolution of per-subtree counts (never by tuple enumeration).
u128 count_wagner(const Instance& inst);

SolutionList list_wagner_solutions(const Instance& inst, std::size_t cap);

}  // namespace gbp
