#pragma once

#include "tropcirc/numeric.hpp"
#include "tropcirc/partition.hpp"
#include "tropcirc/permutation.hpp"

#include <utility>
#include <vector>

namespace tropcirc {

// A filling of a skew shape; entries are stored in row-major cell order.
// Semistandardness (rows weakly increasing, columns strictly increasing)
// is a property checked on demand, not a construction invariant, because
// the diagonal filling used for reading words is not semistandard.
struct SkewTableau {
    SkewShape shape;
    std::vector<int> entries;

    // x^T exponent vector: entry multiplicities over [n].
    ExpVec weight(int n) const {
        ExpVec w(n, 0);
        for (int e : entries) ++w[e - 1];
        return w;
    }

    // Left-to-right, top-to-bottom; identical to the stored order.
    Word reading_word() const { return entries; }

    bool is_semistandard() const {
        auto cs = shape.cells();
        for (std::size_t a = 0; a < cs.size(); ++a) {
            for (std::size_t b = a + 1; b < cs.size(); ++b) {
                if (cs[a].first == cs[b].first && cs[a].second + 1 == cs[b].second &&
                    entries[a] > entries[b])
                    return false;
                if (cs[a].second == cs[b].second && cs[a].first + 1 == cs[b].first &&
                    entries[a] >= entries[b])
                    return false;
            }
        }
        return true;
    }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

namespace detail {

struct CellLinks {
    int left = -1;   // row-major index of the cell directly left, if any
    int up = -1;     // row-major index of the cell directly above, if any
    int below = 0;   // cells below in the same column
};

inline std::vector<CellLinks> cell_links(const SkewShape& shape) {
    auto cs = shape.cells();
    std::vector<CellLinks> links(cs.size());
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = 0; b < cs.size(); ++b) {
            if (cs[b].first == cs[a].first && cs[b].second + 1 == cs[a].second)
                links[a].left = static_cast<int>(b);
            if (cs[b].second == cs[a].second && cs[b].first + 1 == cs[a].first)
                links[a].up = static_cast<int>(b);
            if (cs[b].second == cs[a].second && cs[b].first > cs[a].first) ++links[a].below;
        }
    }
    return links;
}

template <typename Fn>
void ssyt_rec(const std::vector<CellLinks>& links, int n, std::size_t pos,
              std::vector<int>& entries, Fn&& visit) {
    if (pos == links.size()) {
        visit(const_cast<const std::vector<int>&>(entries));
        return;
    }
    const CellLinks& c = links[pos];
    int lo = 1;
    if (c.left >= 0) lo = entries[c.left];
    if (c.up >= 0 && entries[c.up] + 1 > lo) lo = entries[c.up] + 1;
    int hi = n - c.below;  // room for a strictly increasing column tail
    for (int v = lo; v <= hi; ++v) {
        entries.push_back(v);
        ssyt_rec(links, n, pos + 1, entries, visit);
        entries.pop_back();
    }
}

}  // namespace detail

// Visit the entries of every semistandard filling of the shape with values
// in [n], in lexicographic order of the row reading word.
template <typename Fn>
void for_each_ssyt(const SkewShape& shape, int n, Fn&& visit) {
    if (n < 1) throw std::invalid_argument("entry bound must be positive");
    auto links = detail::cell_links(shape);
    std::vector<int> entries;
    entries.reserve(links.size());
    detail::ssyt_rec(links, n, 0, entries, visit);
}

inline std::vector<SkewTableau> ssyt_enumerate(const SkewShape& shape, int n) {
    std::vector<SkewTableau> out;
    for_each_ssyt(shape, n, [&](const std::vector<int>& entries) {
        out.push_back(SkewTableau{shape, entries});
    });
    return out;
}

// f^lambda, the number of standard Young tableaux of shape lambda, by the
// hook-length formula.
inline Int hook_length_count(const Partition& lambda) {
    Int numer = 1;
    for (long long k = 2; k <= lambda.size(); ++k) numer *= k;
    Int hooks = 1;
    Partition conj = lambda.conjugate();
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (conj.part(j - 1) - static_cast<int>(i) - 1) + 1;
    return numer / hooks;
}

}  // namespace tropcirc
