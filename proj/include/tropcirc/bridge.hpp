#pragma once

#include "tropcirc/partition.hpp"
#include "tropcirc/permutation.hpp"
#include "tropcirc/polynomial.hpp"
#include "tropcirc/symmetric.hpp"
#include "tropcirc/tableau.hpp"
#include "tropcirc/tropical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcirc {

// Conjugate of the descending sort of the code of w^{-1}; the
// dominance-maximal shape in the Schur expansion of the Stanley polynomial.
inline Partition beta_max(const Permutation& w) {
    std::vector<int> code = inverse_code(w);
    std::sort(code.begin(), code.end(), std::greater<int>());
    return sorted_to_partition(code).conjugate();
}

// Second, independent route to the same partition: push each column of the
// Rothe diagram north and left-justify, then read off row lengths. Column
// heights are counted as inversions of w^{-1} by start position, with no
// diagram enumeration and no conjugate() call.
inline Partition beta_max_by_column_push(const Permutation& w) {
    Permutation v = w.inverse();
    const int m = v.degree();
    std::vector<int> heights(m, 0);
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
            if (v(k) < v(j)) ++heights[j - 1];
    std::sort(heights.begin(), heights.end(), std::greater<int>());
    std::vector<int> row_lengths;
    for (int i = 1; !heights.empty() && heights[0] >= i; ++i) {
        int len = 0;
        while (len < m && heights[len] >= i) ++len;
        row_lengths.push_back(len);
    }
    return Partition(std::move(row_lengths));
}

// Filling that labels northwest-southeast diagonals consecutively, starting
// with 1 on the northeastmost diagonal of the ambient rectangle — in closed
// form, cell (i,j) gets lambda_1 - (j - i). Labels count every diagonal,
// including ones the shape misses. Not semistandard; it is the word carrier.
inline SkewTableau diagonal_filling(const SkewShape& shape) {
    SkewTableau t{shape, {}};
    const int lambda1 = shape.outer().first();
    for (auto [i, j] : shape.cells()) t.entries.push_back(lambda1 - (j - i));
    return t;
}

inline Word reading_word(const SkewTableau& filling) { return filling.reading_word(); }

// The permutation whose reduced word is the reading word of the diagonal
// filling, taken in the smallest symmetric group containing every letter.
inline Permutation w_from_skew(const SkewShape& shape) {
    Word word = reading_word(diagonal_filling(shape));
    int m = 1;
    for (int a : word) m = std::max(m, a + 1);
    return word_to_permutation(word, m);
}

// Inverse construction: compact the Rothe diagram of w (drop empty rows and
// columns), reflect across a vertical line, and read the result as a skew
// shape. Errors when the diagram does not assemble into one, which detects
// permutations outside the image of w_from_skew.
inline SkewShape skew_from_rothe(const Permutation& w) {
    const auto cells = rothe_diagram(w);
    if (cells.empty()) return SkewShape(Partition(std::vector<int>{}), Partition(std::vector<int>{}));

    std::map<int, int> row_rank, col_rank;
    for (auto [i, j] : cells) {
        row_rank.emplace(i, 0);
        col_rank.emplace(j, 0);
    }
    int r = 0;
    for (auto& [row, rank] : row_rank) rank = ++r;
    int c = 0;
    for (auto& [col, rank] : col_rank) rank = ++c;

    const int num_rows = r, num_cols = c;
    std::vector<int> lo(num_rows, num_cols + 1), hi(num_rows, 0), count(num_rows, 0);
    for (auto [i, j] : cells) {
        int ri = row_rank[i] - 1;
        int rj = num_cols + 1 - col_rank[j];  // reflection
        lo[ri] = std::min(lo[ri], rj);
        hi[ri] = std::max(hi[ri], rj);
        ++count[ri];
    }

    std::vector<int> outer(num_rows), inner(num_rows);
    for (int i = 0; i < num_rows; ++i) {
        if (count[i] != hi[i] - lo[i] + 1)
            throw std::invalid_argument("not a skew (vexillary-type) diagram");
        outer[i] = hi[i];
        inner[i] = lo[i] - 1;
    }
    for (int i = 0; i + 1 < num_rows; ++i)
        if (outer[i] < outer[i + 1] || inner[i] < inner[i + 1])
            throw std::invalid_argument("not a skew (vexillary-type) diagram");
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

// BJS identity: the Stanley polynomial of w_{lambda/mu} is the skew Schur
// polynomial, exactly, coefficient for coefficient.
inline bool verify_bjs(const SkewShape& shape, int n) {
    return stanley_poly(w_from_skew(shape), n) == skew_schur(shape, n);
}

// Schur expansion of F_w is nonnegative, supported weakly below beta_max(w)
// in dominance order, and hits beta_max itself.
inline bool verify_stanley_dominance(const Permutation& w, int n) {
    const int m = std::max(n, static_cast<int>(w.length()));
    SchurExpansion expansion = schur_expand(stanley_poly(w, m));
    Partition beta = beta_max(w);
    if (expansion.coeff(beta) == 0) return false;
    for (const auto& [lambda, c] : expansion.coefficients) {
        if (c < 0) return false;
        if (!dominance_leq(lambda, beta)) return false;
    }
    return true;
}

struct TheoremReport {
    SkewShape shape;
    int n;
    Partition beta;
    bool beta1_equals_lambda1 = false;
    bool trop_equal_axiomatic = false;
    bool dominating_partition_is_beta = false;

    bool all_passed() const {
        return beta1_equals_lambda1 && trop_equal_axiomatic && dominating_partition_is_beta;
    }
};

// Full pipeline for one skew shape: beta via the permutation route, first
// parts compared on the compacted shape (empty rows/columns of the diagram
// carry no boxes and no content), support-level tropical equality with
// s_beta, and the dominance characterization.
inline TheoremReport verify_theorem_main(const SkewShape& shape, int n) {
    ExactPolynomial skew = skew_schur(shape, n);
    if (skew.is_zero())
        throw std::invalid_argument("skew schur polynomial is zero in this many variables");
    TheoremReport report{shape, n, beta_max(w_from_skew(shape))};
    report.beta1_equals_lambda1 = report.beta.first() == shape.compact().outer().first();
    report.trop_equal_axiomatic = trop_equal(tropicalize(skew),
                                             tropicalize(schur(report.beta, n)),
                                             EqualityMode::axiomatic);
    std::optional<Partition> dom = dominating_partition(skew);
    report.dominating_partition_is_beta = dom.has_value() && *dom == report.beta;
    return report;
}

}  // namespace tropcirc
