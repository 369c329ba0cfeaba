#include "gbp/wagner.hpp"

#include <bit>
#include <vector>

namespace gbp {

namespace {

// n = log2(N); rejects non-powers of two and rings that cannot host n levels.
int tree_depth(std::size_t n_leaves, const RingContext& ring) {
    if (!ring.is_dyadic())
        throw std::invalid_argument("tree algorithm requires a dyadic modulus M = 2^m + 1");
    if (n_leaves < 2 || !std::has_single_bit(n_leaves))
        throw std::invalid_argument("tuple length must be a power of two >= 2");
    int n = std::countr_zero(n_leaves);
    if (n > *ring.dyadic_exponent())
        throw std::invalid_argument("tree depth n exceeds the window exponent m");
    return n;
}

}  // namespace

WagnerValue wagner_value(std::span<const Residue> x, const RingContext& ring) {
    int n = tree_depth(x.size(), ring);
    std::vector<WagnerValue> level(x.begin(), x.end());
    for (int h = 1; h <= n; ++h) {
        std::vector<WagnerValue> next(level.size() / 2);
        for (std::size_t j = 0; j < next.size(); ++j) {
            const WagnerValue& a = level[2 * j];
            const WagnerValue& b = level[2 * j + 1];
            if (!a || !b) continue;  // terminal symbol propagates
            Residue s = ring.add(*a, *b);
            if (ring.in_window(s, h)) next[j] = s;
        }
        level = std::move(next);
    }
    return level[0];
}

namespace {

// Count table over the level-h window, indexed by value + window_bound(h).
using LevelCounts = std::vector<u128>;

LevelCounts leaf_counts(const Instance& inst, int j) {
    const RingContext& ring = inst.ring;
    LevelCounts counts(static_cast<std::size_t>(2 * ring.window_bound(0) + 1), 0);
    for (int i = 0; i < inst.rows; ++i)
        counts[static_cast<std::size_t>(inst.entry(i, j).value + ring.window_bound(0))] += 1;
    return counts;
}

// Pair merge: convolve child counts mod M, keep keys inside D_{m-h}.
LevelCounts merge_counts(const LevelCounts& left, const LevelCounts& right, int h,
                         const RingContext& ring) {
    const std::int64_t in_bound = ring.window_bound(h - 1);
    const std::int64_t out_bound = ring.window_bound(h);
    LevelCounts out(static_cast<std::size_t>(2 * out_bound + 1), 0);
    for (std::int64_t a = -in_bound; a <= in_bound; ++a) {
        u128 ca = left[static_cast<std::size_t>(a + in_bound)];
        if (ca == 0) continue;
        for (std::int64_t b = -in_bound; b <= in_bound; ++b) {
            u128 cb = right[static_cast<std::size_t>(b + in_bound)];
            if (cb == 0) continue;
            Residue s = ring.add(Residue{a}, Residue{b});
            if (s.value >= -out_bound && s.value <= out_bound)
                out[static_cast<std::size_t>(s.value + out_bound)] += ca * cb;
        }
    }
    return out;
}

u128 guarded_total(const Instance& inst) {
    try {
        return checked_pow_u128(static_cast<std::uint64_t>(inst.rows),
                                static_cast<unsigned>(inst.cols));
    } catch (const std::overflow_error&) {
        throw std::overflow_error("count overflow: L^N exceeds the 128-bit count type");
    }
}

}  // namespace

u128 count_wagner(const Instance& inst) {
    int n = tree_depth(static_cast<std::size_t>(inst.cols), inst.ring);
    guarded_total(inst);

    std::vector<LevelCounts> tables;
    tables.reserve(static_cast<std::size_t>(inst.cols));
    for (int j = 0; j < inst.cols; ++j) tables.push_back(leaf_counts(inst, j));

    for (int h = 1; h <= n; ++h) {
        std::vector<LevelCounts> next;
        next.reserve(tables.size() / 2);
        for (std::size_t j = 0; j < tables.size() / 2; ++j)
            next.push_back(merge_counts(tables[2 * j], tables[2 * j + 1], h, inst.ring));
        tables = std::move(next);
    }
    return tables[0][static_cast<std::size_t>(inst.ring.window_bound(n))];
}

SolutionList list_wagner_solutions(const Instance& inst, std::size_t cap) {
    tree_depth(static_cast<std::size_t>(inst.cols), inst.ring);
    guarded_total(inst);

    SolutionList out;
    std::vector<int> indices(static_cast<std::size_t>(inst.cols), 0);
    std::vector<Residue> tuple(static_cast<std::size_t>(inst.cols));
    while (true) {
        for (int j = 0; j < inst.cols; ++j) tuple[static_cast<std::size_t>(j)] = inst.entry(indices[static_cast<std::size_t>(j)], j);
        WagnerValue v = wagner_value(tuple, inst.ring);
        if (v && v->value == 0) {
            if (out.solutions.size() == cap) {
                out.truncated = true;
                return out;
            }
            std::vector<int> one_based(indices.size());
            for (std::size_t j = 0; j < indices.size(); ++j) one_based[j] = indices[j] + 1;
            out.solutions.push_back(std::move(one_based));
        }
        // lexicographic odometer
        int j = inst.cols - 1;
        while (j >= 0 && ++indices[static_cast<std::size_t>(j)] == inst.rows) {
            indices[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

}  // namespace gbp
