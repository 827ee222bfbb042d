#pragma once

#include "tropcirc/numeric.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropcirc {

// Integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros stored. Construction accepts and strips trailing zeros.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must weakly decrease");
        }
    }

    static Partition parse(const std::string& s) { return Partition(parse_int_list(s)); }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // Part i (0-based), 0 beyond the last stored part.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int first() const { return part(0); }

    long long size() const {
        long long total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    Partition conjugate() const {
        std::vector<int> conj(first(), 0);
        for (int col = 1; col <= first(); ++col)
            conj[col - 1] = static_cast<int>(std::count_if(
                parts_.begin(), parts_.end(), [col](int p) { return p >= col; }));
        return Partition(std::move(conj));
    }

    bool contains(const Partition& mu) const {
        if (mu.rows() > rows()) return false;
        for (std::size_t i = 0; i < mu.rows(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    // Exponent vector padded with zeros to n entries; requires rows() <= n.
    ExpVec padded(std::size_t n) const {
        if (rows() > n) throw std::invalid_argument("partition has more parts than requested length");
        ExpVec v(parts_.begin(), parts_.end());
        v.resize(n, 0);
        return v;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Dominance order on Par(d): every prefix sum of mu is at most the matching
// prefix sum of lambda. Defined only for equal sizes.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance order requires partitions of equal size");
    long long mu_sum = 0, lambda_sum = 0;
    std::size_t k = std::max(mu.rows(), lambda.rows());
    for (std::size_t i = 0; i < k; ++i) {
        mu_sum += mu.part(i);
        lambda_sum += lambda.part(i);
        if (mu_sum > lambda_sum) return false;
    }
    return true;
}

// Sort a vector of nonnegative integers into a partition.
inline Partition sorted_to_partition(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    return Partition(std::move(values));
}

namespace detail {

inline void partitions_in_box_rec(const Partition& box, std::size_t row, int prev,
                                  std::vector<int>& acc, std::vector<Partition>& out) {
    out.push_back(Partition(acc));
    if (row >= box.rows()) return;
    for (int v = std::min(prev, box.part(row)); v >= 1; --v) {
        acc.push_back(v);
        partitions_in_box_rec(box, row + 1, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// Every partition lambda with lambda_i <= box_i (including the empty one),
// sorted lexicographically for reproducible sweeps.
inline std::vector<Partition> partitions_in_box(const Partition& box) {
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_in_box_rec(box, 0, box.first(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Skew shape lambda/mu. Cells are 1-indexed (row, column) in matrix
// orientation: row i occupies columns mu_i+1 .. lambda_i.
class SkewShape {
public:
    SkewShape() = default;

    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("inner partition not contained in outer");
    }

    explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    long long size() const { return outer_.size() - inner_.size(); }
    bool empty() const { return size() == 0; }

    bool has_cell(int row, int col) const {
        if (row < 1 || row > static_cast<int>(outer_.rows())) return false;
        return inner_.part(row - 1) < col && col <= outer_.part(row - 1);
    }

    // Cells in row-major order.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= static_cast<int>(outer_.rows()); ++i)
            for (int j = inner_.part(i - 1) + 1; j <= outer_.part(i - 1); ++j)
                out.emplace_back(i, j);
        return out;
    }

    // Number of cells in column j.
    int column_height(int j) const {
        int h = 0;
        for (std::size_t i = 0; i < outer_.rows(); ++i)
            if (inner_.part(i) < j && j <= outer_.part(i)) ++h;
        return h;
    }

    int max_column_height() const {
        int best = 0;
        for (int j = 1; j <= outer_.first(); ++j) best = std::max(best, column_height(j));
        return best;
    }

    std::vector<int> column_heights() const {
        std::vector<int> out;
        for (int j = 1; j <= outer_.first(); ++j) out.push_back(column_height(j));
        return out;
    }

    // Remove empty rows and empty columns. The result has the same cell set
    // up to coordinate shifts, hence the same tableau generating function.
    SkewShape compact() const {
        std::vector<int> col_shift(outer_.first() + 1, 0);
        int dropped = 0;
        for (int j = 1; j <= outer_.first(); ++j) {
            if (column_height(j) == 0) ++dropped;
            col_shift[j] = dropped;
        }
        std::vector<int> new_outer, new_inner;
        for (std::size_t i = 0; i < outer_.rows(); ++i) {
            if (outer_.part(i) == inner_.part(i)) continue;  // empty row
            new_outer.push_back(outer_.part(i) - col_shift[outer_.part(i)]);
            new_inner.push_back(inner_.part(i) - col_shift[inner_.part(i)]);
        }
        return SkewShape(Partition(std::move(new_outer)), Partition(std::move(new_inner)));
    }

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace tropcirc
