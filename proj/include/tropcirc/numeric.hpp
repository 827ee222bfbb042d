#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcirc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vectors and one-line permutation data are small nonnegative
// integers throughout; int keeps comparisons cheap.
using ExpVec = std::vector<int>;

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical rational formatting: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer literal: '" + s + "'");
    }
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return Rational(num, den);
}

// Split "a,b,c" into trimmed fields; "" yields no fields.
inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto field = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto l = field.find_first_not_of(" \t");
        auto r = field.find_last_not_of(" \t");
        out.push_back(l == std::string::npos ? std::string() : field.substr(l, r - l + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& f : split_csv(s)) {
        if (f.empty()) throw std::invalid_argument("empty field in list: '" + s + "'");
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(f, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + f + "' in list: '" + s + "'");
        }
        if (pos != f.size()) throw std::invalid_argument("bad integer '" + f + "' in list: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

// Deterministic 64-bit generator (splitmix64). Sampled checks must
// reproduce bit-for-bit across platforms, so we avoid distribution
// classes whose output is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Rational rational(int max_num, int max_den) {
        std::int64_t num = static_cast<std::int64_t>(below(2 * max_num + 1)) - max_num;
        std::int64_t den = static_cast<std::int64_t>(below(max_den)) + 1;
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace tropcirc
