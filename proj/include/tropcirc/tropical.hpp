#pragma once

#include "tropcirc/lattice.hpp"
#include "tropcirc/numeric.hpp"
#include "tropcirc/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropcirc {

// Polynomial over the max-plus semiring: addition is max, multiplication is
// +. Keyed by exponent, so duplicate monomials are already merged with max
// (the idempotent law x (+) x = x).
class TropicalPolynomial {
public:
    using TermMap = std::map<ExpVec, Rational>;

    explicit TropicalPolynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("tropical polynomial needs at least one variable");
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(ExpVec exp, Rational coeff) {
        if (static_cast<int>(exp.size()) != nvars_)
            throw std::invalid_argument("term exponent has wrong arity");
        auto [it, inserted] = terms_.try_emplace(std::move(exp), coeff);
        if (!inserted && coeff > it->second) it->second = std::move(coeff);
    }

    friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

private:
    int nvars_;
    TermMap terms_;
};

// Trivial-valuation tropicalization: keep the exponents, send every nonzero
// coefficient to 0.
inline TropicalPolynomial tropicalize(const ExactPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot tropicalize the zero polynomial");
    TropicalPolynomial g(f.nvars());
    for (const auto& [exp, c] : f.terms()) g.add_term(exp, Rational(0));
    return g;
}

inline Rational trop_eval(const TropicalPolynomial& g, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != g.nvars())
        throw std::invalid_argument("evaluation point has wrong dimension");
    if (g.empty()) throw std::invalid_argument("cannot evaluate a tropical polynomial with no terms");
    bool first = true;
    Rational best(0);
    for (const auto& [exp, c] : g.terms()) {
        Rational v = c;
        for (int i = 0; i < g.nvars(); ++i)
            if (exp[i] != 0) v += Rational(exp[i]) * point[i];
        if (first || v > best) {
            best = std::move(v);
            first = false;
        }
    }
    return best;
}

enum class EqualityMode { axiomatic, functional };

inline EqualityMode parse_equality_mode(const std::string& s) {
    if (s == "axiomatic") return EqualityMode::axiomatic;
    if (s == "functional") return EqualityMode::functional;
    throw std::invalid_argument("unknown equality mode: " + s);
}

namespace detail {

// A term (e_t, c_t) contributes nothing to the upper envelope iff its lifted
// point lies on or below the upper hull of the other lifted points: exact LP
// feasibility of  sum w_s = 1, sum w_s e_s = e_t, sum w_s c_s >= c_t, w >= 0.
inline bool term_is_redundant(const ExpVec& exp, const Rational& coeff,
                              const std::vector<const TropicalPolynomial::TermMap::value_type*>& others) {
    if (others.empty()) return false;
    const int n = static_cast<int>(exp.size());
    const std::size_t cols = others.size() + 1;  // weights + slack
    std::vector<std::vector<Rational>> a(n + 2, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(n + 2);
    for (std::size_t j = 0; j < others.size(); ++j) {
        const auto& [e, c] = *others[j];
        for (int i = 0; i < n; ++i) a[i][j] = e[i];
        a[n][j] = 1;
        a[n + 1][j] = c;
    }
    a[n + 1][cols - 1] = -1;  // slack: sum w_s c_s - slack = c_t
    for (int i = 0; i < n; ++i) b[i] = exp[i];
    b[n] = 1;
    b[n + 1] = coeff;
    return nonnegative_solution_exists(std::move(a), std::move(b));
}

// Drop every term dominated by the upper envelope of the rest. What survives
// is exactly the vertex set of the upper hull of the lifted exponents, so the
// result is order-independent and two tropical polynomials agree as functions
// iff their pruned term maps are identical.
inline void functional_prune(TropicalPolynomial::TermMap& terms) {
    std::vector<const TropicalPolynomial::TermMap::value_type*> kept;
    kept.reserve(terms.size());
    for (const auto& term : terms) kept.push_back(&term);
    std::vector<const TropicalPolynomial::TermMap::value_type*> dropped;
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<const TropicalPolynomial::TermMap::value_type*> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (term_is_redundant(kept[i]->first, kept[i]->second, others)) {
            dropped.push_back(kept[i]);
            kept.erase(kept.begin() + i);
        } else {
            ++i;
        }
    }
    for (const auto* term : dropped) terms.erase(term->first);
}

}  // namespace detail

// Axiomatic form: duplicate exponents merged under max (the map enforces
// this already). Functional form additionally prunes terms that never attain
// the upper envelope alone.
inline TropicalPolynomial canonicalize(const TropicalPolynomial& g, EqualityMode mode) {
    if (mode == EqualityMode::axiomatic) return g;
    TropicalPolynomial::TermMap pruned = g.terms();
    detail::functional_prune(pruned);
    TropicalPolynomial out(g.nvars());
    for (const auto& [exp, coeff] : pruned) out.add_term(exp, coeff);
    return out;
}

inline bool trop_equal(const TropicalPolynomial& g1, const TropicalPolynomial& g2,
                       EqualityMode mode) {
    if (g1.nvars() != g2.nvars())
        throw std::invalid_argument("cannot compare tropical polynomials in different variable counts");
    if (mode == EqualityMode::axiomatic) return g1.terms() == g2.terms();
    return canonicalize(g1, mode) == canonicalize(g2, mode);
}

// Randomized functional check: exact evaluation at `count` pseudorandom
// rational points. Never a substitute for trop_equal in functional mode, but
// a cheap cross-check with reproducible seeds.
inline bool trop_equal_sampled(const TropicalPolynomial& g1, const TropicalPolynomial& g2,
                               int count, std::uint64_t seed) {
    if (g1.nvars() != g2.nvars())
        throw std::invalid_argument("cannot compare tropical polynomials in different variable counts");
    if (count < 1) throw std::invalid_argument("sample count must be positive");
    SplitMix64 rng(seed);
    for (int s = 0; s < count; ++s) {
        std::vector<Rational> point(g1.nvars());
        for (auto& x : point) x = rng.rational(50, 16);
        if (trop_eval(g1, point) != trop_eval(g2, point)) return false;
    }
    return true;
}

}  // namespace tropcirc
