#include "gbp/census.hpp"

#include <algorithm>

namespace gbp {

namespace {

// L^N with the structured overflow guard; every intermediate count is bounded
// by this total, so the guard makes the convolutions below overflow-free.
u128 guarded_total(const Instance& inst) {
    try {
        return checked_pow_u128(static_cast<std::uint64_t>(inst.rows),
                                static_cast<unsigned>(inst.cols));
    } catch (const std::overflow_error&) {
        throw std::overflow_error("census overflow: L^N exceeds the 128-bit count type");
    }
}

std::vector<u128> column_counts(const Instance& inst, int j) {
    std::vector<u128> counts(static_cast<std::size_t>(inst.ring.modulus()), 0);
    for (int i = 0; i < inst.rows; ++i)
        counts[static_cast<std::size_t>(inst.entry(i, j).value - inst.ring.window_min())] += 1;
    return counts;
}

}  // namespace

Census census(const Instance& inst) {
    const RingContext& ring = inst.ring;
    const std::int64_t M = ring.modulus();
    Census result{ring, {}, guarded_total(inst)};

    std::vector<u128> acc = column_counts(inst, 0);
    for (int j = 1; j < inst.cols; ++j) {
        std::vector<u128> col = column_counts(inst, j);
        std::vector<u128> next(static_cast<std::size_t>(M), 0);
        for (std::int64_t r = 0; r < M; ++r) {
            if (acc[r] == 0) continue;
            Residue rv{ring.window_min() + r};
            for (std::int64_t s = 0; s < M; ++s) {
                if (col[s] == 0) continue;
                Residue sv{ring.window_min() + s};
                std::int64_t idx = ring.add(rv, sv).value - ring.window_min();
                next[static_cast<std::size_t>(idx)] += acc[r] * col[s];
            }
        }
        acc = std::move(next);
    }
    result.counts = std::move(acc);
    return result;
}

u128 count_zero(const Instance& inst) { return census(inst).zero_count(); }

namespace {

void zero_solution_dfs(const Instance& inst, int col, Residue partial, std::vector<int>& prefix,
                       std::size_t cap, SolutionList& out, bool& done) {
    if (done) return;
    if (col == inst.cols - 1) {
        Residue needed = inst.ring.negate(partial);
        for (int i = 0; i < inst.rows && !done; ++i) {
            if (inst.entry(i, col) == needed) {
                if (out.solutions.size() == cap) {
                    out.truncated = true;
                    done = true;
                    return;
                }
                prefix.push_back(i + 1);
                out.solutions.push_back(prefix);
                prefix.pop_back();
            }
        }
        return;
    }
    for (int i = 0; i < inst.rows && !done; ++i) {
        prefix.push_back(i + 1);
        zero_solution_dfs(inst, col + 1, inst.ring.add(partial, inst.entry(i, col)), prefix, cap,
                          out, done);
        prefix.pop_back();
    }
}

}  // namespace

SolutionList list_zero_solutions(const Instance& inst, std::size_t cap) {
    SolutionList out;
    std::vector<int> prefix;
    bool done = false;
    zero_solution_dfs(inst, 0, Residue{0}, prefix, cap, out, done);
    return out;
}

}  // namespace gbp
