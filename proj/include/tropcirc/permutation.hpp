#pragma once

#include "tropcirc/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropcirc {

// A word is a sequence of simple-transposition indices (or of
// compatible-sequence values); validity is checked by the operations.
using Word = std::vector<int>;

// Permutation of [m] in one-line notation, 1-based values.
class Permutation {
public:
    Permutation() : oneline_{1} {}

    explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
        if (oneline_.empty()) throw std::invalid_argument("permutation cannot be empty");
        std::vector<bool> seen(oneline_.size() + 1, false);
        for (int v : oneline_) {
            if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[v])
                throw std::invalid_argument("not a permutation of 1..m");
            seen[v] = true;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> v(m);
        for (int i = 0; i < m; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    static Permutation parse(const std::string& s) { return Permutation(parse_int_list(s)); }

    int degree() const { return static_cast<int>(oneline_.size()); }
    const std::vector<int>& oneline() const { return oneline_; }

    // Image of i, 1-based.
    int operator()(int i) const {
        if (i < 1 || i > degree()) throw std::invalid_argument("permutation argument out of range");
        return oneline_[i - 1];
    }

    Permutation inverse() const {
        std::vector<int> inv(oneline_.size());
        for (int i = 1; i <= degree(); ++i) inv[oneline_[i - 1] - 1] = i;
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if (oneline_[i - 1] != i) return false;
        return true;
    }

    // Coxeter length = number of inversions.
    int length() const {
        int count = 0;
        for (int i = 0; i < degree(); ++i)
            for (int j = i + 1; j < degree(); ++j)
                if (oneline_[i] > oneline_[j]) ++count;
        return count;
    }

    // Right multiplication by s_i swaps positions i, i+1 (1-based).
    Permutation times_transposition(int i) const {
        if (i < 1 || i + 1 > degree()) throw std::invalid_argument("transposition index out of range");
        std::vector<int> v = oneline_;
        std::swap(v[i - 1], v[i]);
        return Permutation(std::move(v));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < oneline_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(oneline_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.oneline_ < b.oneline_;
    }

private:
    std::vector<int> oneline_;
};

// Product s_{a_1} s_{a_2} ... s_{a_l} in S_m, applied left to right.
inline Permutation word_to_permutation(const Word& word, int m) {
    if (m < 1) throw std::invalid_argument("symmetric group degree must be positive");
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    for (int a : word) {
        if (a < 1 || a >= m) throw std::invalid_argument("word letter out of range for S_m");
        std::swap(v[a - 1], v[a]);
    }
    return Permutation(std::move(v));
}

// Rothe diagram D(w) = {(i,j) : j < w(i), i < w^{-1}(j)}, row-major order.
inline std::vector<std::pair<int, int>> rothe_diagram(const Permutation& w) {
    Permutation winv = w.inverse();
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= w.degree(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (i < winv(j)) cells.emplace_back(i, j);
    return cells;
}

// Column counts of D(w); this is the code of w^{-1}. Sums to length(w).
inline std::vector<int> inverse_code(const Permutation& w) {
    std::vector<int> code(w.degree(), 0);
    for (auto [i, j] : rothe_diagram(w)) {
        (void)i;
        ++code[j - 1];
    }
    return code;
}

namespace detail {

// Strips right descents in place; the stripped letters, reversed, form a
// reduced word. Visits every reduced word exactly once.
inline void reduced_words_rec(std::vector<int>& v, Word& suffix, std::vector<Word>& out) {
    bool any = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) {
            any = true;
            std::swap(v[i], v[i + 1]);
            suffix.push_back(static_cast<int>(i + 1));
            reduced_words_rec(v, suffix, out);
            suffix.pop_back();
            std::swap(v[i], v[i + 1]);
        }
    }
    if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace detail

// All reduced words of w, sorted lexicographically.
inline std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<Word> out;
    std::vector<int> v = w.oneline();
    Word suffix;
    suffix.reserve(w.length());
    detail::reduced_words_rec(v, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

template <typename Fn>
void compatible_rec(const Word& a, int n, std::size_t pos, Word& b, Fn&& visit) {
    if (pos == a.size()) {
        visit(const_cast<const Word&>(b));
        return;
    }
    int lo = 1;
    if (pos > 0) {
        lo = b[pos - 1];
        if (a[pos - 1] < a[pos]) ++lo;  // ascent forces strict increase
    }
    for (int v = lo; v <= n; ++v) {
        b.push_back(v);
        compatible_rec(a, n, pos + 1, b, visit);
        b.pop_back();
    }
}

}  // namespace detail

// Visit every b with 1 <= b_1 <= ... <= b_l <= n and b_i < b_{i+1} whenever
// a_i < a_{i+1}, in lexicographic order. The bound b_l <= n truncates the
// Stanley power series to n variables.
template <typename Fn>
void for_each_compatible_sequence(const Word& a, int n, Fn&& visit) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    Word b;
    b.reserve(a.size());
    detail::compatible_rec(a, n, 0, b, visit);
}

inline std::vector<Word> compatible_sequences(const Word& a, int n) {
    std::vector<Word> out;
    for_each_compatible_sequence(a, n, [&](const Word& b) { out.push_back(b); });
    return out;
}

}  // namespace tropcirc
