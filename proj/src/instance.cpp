#include "gbp/instance.hpp"

#include <bit>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace gbp {

namespace {

void check_dimensions(int rows, int cols) {
    if (rows < 2) throw std::invalid_argument("instance needs at least 2 rows (L >= 2)");
    if (cols < 2) throw std::invalid_argument("instance needs at least 2 columns (N >= 2)");
}

}  // namespace

Instance sample_instance(int rows, int cols, const RingContext& ring, std::uint64_t seed) {
    check_dimensions(rows, cols);
    std::mt19937_64 engine(seed);
    const std::uint64_t modulus = static_cast<std::uint64_t>(ring.modulus());
    const int bits = std::bit_width(modulus - 1);
    const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;

    Instance inst{ring, rows, cols, {}, seed};
    inst.entries.reserve(static_cast<std::size_t>(rows) * cols);
    for (std::size_t i = 0; i < static_cast<std::size_t>(rows) * cols; ++i) {
        std::uint64_t v;
        do {
            v = engine() & mask;
        } while (v >= modulus);
        inst.entries.push_back(ring.canonical(static_cast<std::int64_t>(v)));
    }
    return inst;
}

void store_instance(const Instance& inst, std::ostream& out) {
    nlohmann::ordered_json j;
    j["M"] = inst.ring.modulus();
    j["L"] = inst.rows;
    j["N"] = inst.cols;
    if (inst.seed)
        j["seed"] = *inst.seed;
    else
        j["seed"] = nullptr;
    std::vector<std::int64_t> flat;
    flat.reserve(inst.entries.size());
    for (Residue r : inst.entries) flat.push_back(r.value);
    j["entries"] = flat;
    out << j.dump(2) << '\n';
}

void store_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    store_instance(inst, out);
}

Instance load_instance(std::istream& in) {
    using Kind = InstanceFormatError::Kind;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InstanceFormatError(Kind::MalformedHeader,
                                  std::string("malformed instance file: ") + e.what());
    }

    if (!j.is_object() || !j.contains("M") || !j.contains("L") || !j.contains("N") ||
        !j.contains("entries") || !j["M"].is_number_integer() || !j["L"].is_number_integer() ||
        !j["N"].is_number_integer() || !j["entries"].is_array())
        throw InstanceFormatError(Kind::MalformedHeader,
                                  "malformed instance file: missing or mistyped header field");

    std::int64_t modulus = j["M"].get<std::int64_t>();
    int rows = j["L"].get<int>();
    int cols = j["N"].get<int>();
    if (modulus < 2 || rows < 2 || cols < 2)
        throw InstanceFormatError(Kind::MalformedHeader,
                                  "malformed instance file: header values out of range");

    RingContext ring(modulus);
    Instance inst{ring, rows, cols, {}, std::nullopt};
    if (j.contains("seed") && !j["seed"].is_null()) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw InstanceFormatError(Kind::MalformedHeader,
                                      "malformed instance file: seed must be an integer");
        inst.seed = j["seed"].get<std::uint64_t>();
    }

    const auto& entries = j["entries"];
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw InstanceFormatError(
            Kind::DimensionMismatch,
            "dimension mismatch: header says " + std::to_string(rows) + "x" + std::to_string(cols) +
                " but file holds " + std::to_string(entries.size()) + " entries");

    inst.entries.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_number_integer())
            throw InstanceFormatError(Kind::MalformedHeader,
                                      "malformed instance file: non-integer entry");
        std::int64_t v = e.get<std::int64_t>();
        if (v < ring.window_min() || v > ring.window_max())
            throw InstanceFormatError(Kind::EntryOutOfWindow,
                                      "entry " + std::to_string(v) +
                                          " outside the symmetric window of M=" +
                                          std::to_string(modulus));
        inst.entries.push_back(Residue{v});
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load_instance(in);
}

}  // namespace gbp
