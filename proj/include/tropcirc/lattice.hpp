#pragma once

#include "tropcirc/errors.hpp"
#include "tropcirc/numeric.hpp"
#include "tropcirc/partition.hpp"
#include "tropcirc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcirc {

constexpr std::size_t kDefaultPointCap = 200000;

// Finite set of integer lattice points, all of one dimension.
struct LatticePointSet {
    int dim = 0;
    std::set<ExpVec> points;

    bool contains(const ExpVec& p) const { return points.count(p) != 0; }
    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    void insert(ExpVec p) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("lattice point has wrong dimension");
        points.insert(std::move(p));
    }

    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

// Point with exact rational coordinates. No floating point anywhere in the
// polytope computations.
struct RationalPoint {
    std::vector<Rational> coords;

    int dim() const { return static_cast<int>(coords.size()); }

    static RationalPoint parse(const std::string& s) {
        RationalPoint p;
        for (const auto& f : split_csv(s)) p.coords.push_back(parse_rational(f));
        return p;
    }

    static RationalPoint from_lattice(const ExpVec& v) {
        RationalPoint p;
        p.coords.assign(v.begin(), v.end());
        return p;
    }
};

// Exact phase-1 simplex: does {w >= 0 : A w = b} have a solution?
// Bland's rule guarantees termination; artificial columns never re-enter,
// which is sound for a pure feasibility answer. Sizes here are tiny (rows
// <= dimension + 2), so a dense rational tableau is the whole story.
inline bool nonnegative_solution_exists(std::vector<std::vector<Rational>> a,
                                        std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("system row count mismatch");
    const std::size_t k = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw std::invalid_argument("ragged coefficient matrix");
    if (m == 0) return true;

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }

    // Tableau columns: k originals then m artificials; basis starts as the
    // artificials. Objective: minimize the artificial sum.
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(k + m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) t[i][j] = a[i][j];
        t[i][k + i] = 1;
    }

    // Reduced costs for original columns: 0 - sum of rows; objective value
    // starts at sum of b.
    std::vector<Rational> reduced(k, Rational(0));
    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i) {
        objective += b[i];
        for (std::size_t j = 0; j < k; ++j) reduced[j] -= t[i][j];
    }

    while (true) {
        std::size_t enter = k;
        for (std::size_t j = 0; j < k; ++j) {
            if (reduced[j] < 0) {
                enter = j;
                break;  // Bland: smallest eligible index
            }
        }
        if (enter == k) break;

        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > 0) {
                Rational ratio = b[i] / t[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) return false;  // unbounded improvement cannot happen; defensive

        Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        b[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational factor = t[i][enter];
            for (std::size_t j = 0; j < k + m; ++j) t[i][j] -= factor * t[leave][j];
            b[i] -= factor * b[leave];
        }
        Rational rfactor = reduced[enter];
        for (std::size_t j = 0; j < k; ++j) reduced[j] -= rfactor * t[leave][j];
        objective += rfactor * b[leave];
        basis[leave] = enter;
    }
    return objective == 0;
}

// Membership in the permutahedron P_lambda: nonnegative entries, total
// |lambda|, and descending prefix sums bounded by those of lambda.
inline bool rado_member(const ExpVec& p, const Partition& lambda) {
    const int n = static_cast<int>(p.size());
    if (static_cast<int>(lambda.rows()) > n)
        throw std::invalid_argument("partition needs more parts than the ambient dimension");
    long long total = 0;
    for (int v : p) {
        if (v < 0) return false;
        total += v;
    }
    if (total != lambda.size()) return false;
    ExpVec sorted = p;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    long long p_sum = 0, l_sum = 0;
    for (int i = 0; i < n; ++i) {
        p_sum += sorted[i];
        l_sum += lambda.part(i);
        if (p_sum > l_sum) return false;
    }
    return true;
}

namespace detail {

template <typename Fn>
void compositions_rec(int n, int pos, int remaining, int max_entry, ExpVec& acc, Fn&& visit) {
    if (pos == n) {
        if (remaining == 0) visit(const_cast<const ExpVec&>(acc));
        return;
    }
    long long later_capacity = static_cast<long long>(max_entry) * (n - pos - 1);
    for (int v = 0; v <= std::min(max_entry, remaining); ++v) {
        if (remaining - v > later_capacity) continue;
        acc.push_back(v);
        compositions_rec(n, pos + 1, remaining - v, max_entry, acc, visit);
        acc.pop_back();
    }
}

}  // namespace detail

// All lattice points of P_lambda in Z^n, by box enumeration filtered
// through the Rado test.
inline LatticePointSet permutahedron_points(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (static_cast<int>(lambda.rows()) > n)
        throw std::invalid_argument("partition needs more parts than the ambient dimension");
    LatticePointSet out{n, {}};
    if (lambda.size() > static_cast<long long>(lambda.first()) * n) return out;
    ExpVec acc;
    acc.reserve(n);
    detail::compositions_rec(n, 0, static_cast<int>(lambda.size()), lambda.first(), acc,
                             [&](const ExpVec& p) {
                                 if (rado_member(p, lambda)) out.points.insert(p);
                             });
    return out;
}

// Exact convex-hull membership: p is in conv(S) iff nonnegative weights
// summing to 1 reproduce p.
inline bool hull_membership(const RationalPoint& p, const LatticePointSet& s) {
    if (s.empty()) throw std::invalid_argument("hull of an empty point set");
    if (p.dim() != s.dim) throw std::invalid_argument("point/set dimension mismatch");
    const std::size_t cols = s.size();
    std::vector<std::vector<Rational>> a(s.dim + 1, std::vector<Rational>(cols));
    std::vector<Rational> b(s.dim + 1);
    std::size_t j = 0;
    for (const auto& q : s.points) {
        for (int i = 0; i < s.dim; ++i) a[i][j] = q[i];
        a[s.dim][j] = 1;
        ++j;
    }
    for (int i = 0; i < s.dim; ++i) b[i] = p.coords[i];
    b[s.dim] = 1;
    return nonnegative_solution_exists(std::move(a), std::move(b));
}

// All integer points of conv(S): enumerate the bounding box and keep the
// points that pass exact hull membership. Points of S itself short-circuit.
inline LatticePointSet hull_lattice_points(const LatticePointSet& s,
                                           std::size_t cap = kDefaultPointCap) {
    if (s.empty()) throw std::invalid_argument("hull of an empty point set");
    ExpVec lo = *s.points.begin(), hi = lo;
    for (const auto& q : s.points) {
        for (int i = 0; i < s.dim; ++i) {
            lo[i] = std::min(lo[i], q[i]);
            hi[i] = std::max(hi[i], q[i]);
        }
    }
    std::size_t box = 1;
    for (int i = 0; i < s.dim; ++i) {
        std::size_t width = static_cast<std::size_t>(hi[i] - lo[i]) + 1;
        if (box > cap / width + 1) box = cap + 1;  // saturate without overflow
        else box *= width;
        if (box > cap)
            throw resource_limit_error("bounding box exceeds point cap of " + std::to_string(cap));
    }

    LatticePointSet out{s.dim, {}};
    ExpVec p = lo;
    while (true) {
        if (s.contains(p) || hull_membership(RationalPoint::from_lattice(p), s))
            out.points.insert(p);
        int i = s.dim - 1;
        while (i >= 0 && p[i] == hi[i]) {
            p[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++p[i];
    }
    return out;
}

inline LatticePointSet support(const ExactPolynomial& f) {
    LatticePointSet out{f.nvars(), {}};
    for (const auto& [exp, c] : f.terms()) out.points.insert(exp);
    return out;
}

// Saturated Newton polytope: every lattice point of the Newton polytope
// carries a nonzero coefficient.
inline bool snp_check(const ExactPolynomial& f, std::size_t cap = kDefaultPointCap) {
    if (f.is_zero()) throw std::invalid_argument("Newton polytope of the zero polynomial");
    LatticePointSet supp = support(f);
    return hull_lattice_points(supp, cap) == supp;
}

// Pointwise sum set {a + b}.
inline LatticePointSet minkowski_points(const LatticePointSet& a, const LatticePointSet& b) {
    if (a.dim != b.dim) throw std::invalid_argument("Minkowski sum dimension mismatch");
    LatticePointSet out{a.dim, {}};
    for (const auto& pa : a.points) {
        for (const auto& pb : b.points) {
            ExpVec sum(a.dim);
            for (int i = 0; i < a.dim; ++i) sum[i] = pa[i] + pb[i];
            out.points.insert(std::move(sum));
        }
    }
    return out;
}

}  // namespace tropcirc
