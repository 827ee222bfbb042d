#pragma once

#include "tropcirc/partition.hpp"
#include "tropcirc/permutation.hpp"
#include "tropcirc/polynomial.hpp"
#include "tropcirc/tableau.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tropcirc {

// Generating function of semistandard fillings of the shape with entries
// in [n]. Zero when some column needs more than n distinct entries.
inline ExactPolynomial skew_schur(const SkewShape& shape, int n) {
    ExactPolynomial p(n);
    for_each_ssyt(shape, n, [&](const std::vector<int>& entries) {
        ExpVec w(n, 0);
        for (int e : entries) ++w[e - 1];
        p.add_term(w, 1);
    });
    return p;
}

inline ExactPolynomial schur(const Partition& lambda, int n) {
    return skew_schur(SkewShape(lambda), n);
}

// e_k(x_1..x_n): sum of all squarefree degree-k monomials. e_0 = 1 and
// e_k = 0 for k > n.
inline ExactPolynomial elementary(int k, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    if (k < 0) throw std::invalid_argument("elementary degree must be nonnegative");
    ExactPolynomial p(n);
    if (k > n) return p;
    ExpVec exp(n, 0);
    std::fill(exp.begin(), exp.begin() + k, 1);
    std::sort(exp.begin(), exp.end());
    do {
        p.add_term(exp, 1);
    } while (std::next_permutation(exp.begin(), exp.end()));
    return p;
}

// m_lambda(x_1..x_n): one term per distinct rearrangement of lambda padded
// to n entries; zero when lambda has more than n parts.
inline ExactPolynomial monomial(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    ExactPolynomial p(n);
    if (static_cast<int>(lambda.rows()) > n) return p;
    ExpVec exp = lambda.padded(n);
    std::sort(exp.begin(), exp.end());
    do {
        p.add_term(exp, 1);
    } while (std::next_permutation(exp.begin(), exp.end()));
    return p;
}

// Stanley symmetric polynomial restricted to n variables, summed directly
// over reduced words and their compatible sequences. Homogeneous of degree
// length(w). Restricting sequence entries to [n] is the same as setting
// x_{n+1} = x_{n+2} = ... = 0 in the power series.
inline ExactPolynomial stanley_poly_from_words(const std::vector<Word>& words, int n) {
    ExactPolynomial p(n);
    for (const Word& a : words) {
        for_each_compatible_sequence(a, n, [&](const Word& b) {
            ExpVec w(n, 0);
            for (int v : b) ++w[v - 1];
            p.add_term(w, 1);
        });
    }
    return p;
}

inline ExactPolynomial stanley_poly(const Permutation& w, int n) {
    return stanley_poly_from_words(reduced_words(w), n);
}

// Integer coefficients of a symmetric homogeneous polynomial in the Schur
// basis. Keys all share one size; values are nonzero.
struct SchurExpansion {
    std::map<Partition, Int> coefficients;

    Int coeff(const Partition& p) const {
        auto it = coefficients.find(p);
        return it == coefficients.end() ? Int(0) : it->second;
    }

    bool all_nonnegative() const {
        for (const auto& [p, c] : coefficients)
            if (c < 0) return false;
        return true;
    }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

namespace detail {

inline bool weakly_decreasing(const ExpVec& e) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1]) return false;
    return true;
}

}  // namespace detail

// Expand a symmetric homogeneous polynomial in the Schur basis by repeated
// subtraction of the leading term. The lexicographically largest
// partition-shaped exponent present is dominance-maximal (dominance
// refines lex among equal-size partitions), so subtracting its coefficient
// times that Schur polynomial strictly shrinks the support downward.
// Partitions needing more than nvars rows never appear; the expansion is of
// the truncated polynomial.
inline SchurExpansion schur_expand(const ExactPolynomial& f) {
    if (!f.is_symmetric()) throw std::invalid_argument("not symmetric");
    if (!f.homogeneous_degree()) throw std::invalid_argument("not homogeneous");
    SchurExpansion result;
    ExactPolynomial g = f;
    while (!g.is_zero()) {
        const ExpVec* lead = nullptr;
        for (const auto& [exp, c] : g.terms())
            if (detail::weakly_decreasing(exp) && (!lead || exp > *lead)) lead = &exp;
        if (!lead) throw std::logic_error("symmetric polynomial with no dominant exponent");
        Partition mu{std::vector<int>(lead->begin(), lead->end())};
        Int c = g.coeff(*lead);
        result.coefficients[mu] = c;
        g -= schur(mu, g.nvars()) * c;
    }
    return result;
}

// The partition lambda such that f is Schur-positive with support dominated
// by lambda and c_lambda nonzero; nullopt when no such partition exists.
inline std::optional<Partition> dominating_partition(const ExactPolynomial& f) {
    SchurExpansion ex = schur_expand(f);
    if (ex.coefficients.empty() || !ex.all_nonnegative()) return std::nullopt;
    // The lex-largest key is the only possible dominance maximum.
    const Partition* top = nullptr;
    for (const auto& [p, c] : ex.coefficients)
        if (!top || p > *top) top = &p;
    for (const auto& [p, c] : ex.coefficients)
        if (!dominance_leq(p, *top)) return std::nullopt;
    return *top;
}

// Littlewood-Richardson coefficient c^lambda_{mu,nu}, read off from the
// Schur expansion of the skew polynomial. Needs n large enough that s_nu
// survives truncation to n variables.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                          int n) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("inner partition not contained in outer");
    if (static_cast<int>(nu.rows()) > n)
        throw std::invalid_argument("too few variables to recover this coefficient");
    SchurExpansion ex = schur_expand(skew_schur(SkewShape(lambda, mu), n));
    return ex.coeff(nu);
}

}  // namespace tropcirc
