#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// "num/den" for non-integers, plain decimal otherwise.
inline std::string to_fraction_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses a non-negative integer given as plain decimal digits, "1eK", or "10^K".
inline BigInt parse_big_integer(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (all_digits(text)) return BigInt(text);
    std::size_t pos;
    if ((pos = text.find("e")) != std::string::npos || (pos = text.find("^")) != std::string::npos) {
        std::string head = text.substr(0, pos);
        std::string tail = text.substr(pos + 1);
        bool caret = text[pos] == '^';
        if ((caret ? head == "10" : head == "1") && all_digits(tail) && tail.size() <= 4)
            return big_pow(BigInt(10), static_cast<unsigned>(std::stoul(tail)));
    }
    throw std::invalid_argument("cannot parse integer literal: " + text);
}

}  // namespace gbp
