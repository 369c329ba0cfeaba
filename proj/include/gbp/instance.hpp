#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbp/ring.hpp"

namespace gbp {

// An L x N matrix of residues; rows are the candidate entries per column.
// Immutable after construction, safe to share across threads.
struct Instance {
    RingContext ring;
    int rows = 0;  // L
    int cols = 0;  // N
    std::vector<Residue> entries;  // row-major, entry(i, j) = entries[i * cols + j]
    std::optional<std::uint64_t> seed;

    Residue entry(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Deterministic uniform instance: a single std::mt19937_64 stream seeded with
// `seed` fills entries in row-major order. Each draw rejection-samples on the
// smallest power-of-two envelope of M, so entries are exactly uniform.
Instance sample_instance(int rows, int cols, const RingContext& ring, std::uint64_t seed);

class InstanceFormatError : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, DimensionMismatch, EntryOutOfWindow };
    InstanceFormatError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Text format: {"M":..., "L":..., "N":..., "seed":..., "entries":[...]} with
// row-major entries as signed decimal integers in the symmetric window.
void store_instance(const Instance& inst, std::ostream& out);
void store_instance(const Instance& inst, const std::string& path);
Instance load_instance(std::istream& in);
Instance load_instance(const std::string& path);

}  // namespace gbp
