#pragma once

#include <cstddef>
#include <vector>

#include "gbp/checked.hpp"
#include "gbp/instance.hpp"

namespace gbp {

// Exact census of the solution counts V_b: for each residue b, the number of
// index vectors picking one row per column whose entry sum is b mod M.
// Counts sum to L^N.
struct Census {
    RingContext ring;
    std::vector<u128> counts;  // indexed in window order, index 0 <-> window_min()
    u128 total = 0;            // L^N

    u128 at(Residue b) const { return counts[static_cast<std::size_t>(b.value - ring.window_min())]; }
    u128 zero_count() const { return at(Residue{0}); }
};

// Per-column residue counts convolved over Z_M; O(N * M^2) exact integer work.
Census census(const Instance& inst);

u128 count_zero(const Instance& inst);

struct SolutionList {
    std::vector<std::vector<int>> solutions;  // 1-based row indices, lexicographic
    bool truncated = false;
};

// Up to `cap` zero-sum index vectors in lexicographic order; truncated reports
// whether more solutions exist beyond the cap.
SolutionList list_zero_solutions(const Instance& inst, std::size_t cap);

}  // namespace gbp
