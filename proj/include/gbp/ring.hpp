#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace gbp {

// A residue in the symmetric window of its ring. Values are canonical by
// construction; obtain them through RingContext.
struct Residue {
    std::int64_t value = 0;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

// The ring Z_M in symmetric representation. For M = 2^m + 1 the window is
// D_m = {-2^(m-1), ..., 2^(m-1)}; a general modulus uses the M consecutive
// integers ending at floor(M/2). The level windows D_{m-h} of the tree
// algorithm are defined for dyadic rings only.
class RingContext {
public:
    explicit RingContext(std::int64_t modulus) : modulus_(modulus) {
        if (modulus < 2) throw std::invalid_argument("ring modulus must be >= 2");
        if (modulus > (std::int64_t{1} << 62))
            throw std::invalid_argument("ring modulus must fit below 2^62");
        std::uint64_t t = static_cast<std::uint64_t>(modulus - 1);
        if (modulus >= 3 && (t & (t - 1)) == 0)
            dyadic_m_ = std::countr_zero(t);
    }

    // M = 2^m + 1
    static RingContext dyadic(int m) {
        if (m < 1 || m > 61) throw std::invalid_argument("dyadic exponent m must be in [1, 61]");
        return RingContext((std::int64_t{1} << m) + 1);
    }

    std::int64_t modulus() const { return modulus_; }
    std::optional<int> dyadic_exponent() const { return dyadic_m_; }
    bool is_dyadic() const { return dyadic_m_.has_value(); }

    std::int64_t window_max() const { return modulus_ / 2; }
    std::int64_t window_min() const { return window_max() - modulus_ + 1; }

    Residue canonical(std::int64_t x) const {
        std::int64_t r = x % modulus_;
        if (r < 0) r += modulus_;
        if (r > window_max()) r -= modulus_;
        return Residue{r};
    }

    Residue add(Residue a, Residue b) const { return canonical(a.value + b.value); }
    Residue negate(Residue a) const { return canonical(-a.value); }

    // Bound of the level-h window: D_{m-h} = {-bound, ..., bound}, with
    // D_0 = {0} at h = m.
    std::int64_t window_bound(int h) const {
        int m = require_dyadic();
        if (h < 0 || h > m) throw std::invalid_argument("window level h must be in [0, m]");
        return h == m ? 0 : std::int64_t{1} << (m - h - 1);
    }

    bool in_window(Residue a, int h) const {
        std::int64_t bound = window_bound(h);
        return a.value >= -bound && a.value <= bound;
    }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    int require_dyadic() const {
        if (!dyadic_m_)
            throw std::invalid_argument("operation requires a dyadic modulus M = 2^m + 1");
        return *dyadic_m_;
    }

    std::int64_t modulus_;
    std::optional<int> dyadic_m_;
};

}  // namespace gbp
