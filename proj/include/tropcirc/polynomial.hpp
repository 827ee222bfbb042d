#pragma once

#include "tropcirc/numeric.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropcirc {

// Sparse multivariate polynomial with unbounded integer coefficients.
// Terms map exponent vectors (all of length nvars) to nonzero coefficients;
// the zero polynomial has an empty term map.
class ExactPolynomial {
public:
    using TermMap = std::map<ExpVec, Int>;

    explicit ExactPolynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    }

    static ExactPolynomial constant(int nvars, Int value) {
        ExactPolynomial p(nvars);
        p.add_term(ExpVec(nvars, 0), std::move(value));
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int coeff(const ExpVec& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const ExpVec& exp, const Int& c) {
        if (static_cast<int>(exp.size()) != nvars_)
            throw std::invalid_argument("exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ExactPolynomial& operator+=(const ExactPolynomial& other) {
        require_same_vars(other);
        for (const auto& [exp, c] : other.terms_) add_term(exp, c);
        return *this;
    }

    ExactPolynomial& operator-=(const ExactPolynomial& other) {
        require_same_vars(other);
        for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
        return *this;
    }

    ExactPolynomial& operator*=(const Int& scalar) {
        if (scalar == 0) {
            terms_.clear();
        } else {
            for (auto& [exp, c] : terms_) c *= scalar;
        }
        return *this;
    }

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const Int& s) { return a *= s; }

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

    // Total degree if all terms share it; nullopt otherwise. Zero counts as
    // homogeneous of any degree and reports 0.
    std::optional<int> homogeneous_degree() const {
        int degree = 0;
        bool first = true;
        for (const auto& [exp, c] : terms_) {
            int d = std::accumulate(exp.begin(), exp.end(), 0);
            if (first) {
                degree = d;
                first = false;
            } else if (d != degree) {
                return std::nullopt;
            }
        }
        return degree;
    }

    // Invariance under every adjacent variable swap.
    bool is_symmetric() const {
        for (int i = 0; i + 1 < nvars_; ++i) {
            for (const auto& [exp, c] : terms_) {
                if (exp[i] == exp[i + 1]) continue;
                ExpVec swapped = exp;
                std::swap(swapped[i], swapped[i + 1]);
                if (coeff(swapped) != c) return false;
            }
        }
        return true;
    }

private:
    void require_same_vars(const ExactPolynomial& other) const {
        if (nvars_ != other.nvars_)
            throw std::invalid_argument("polynomials have different variable counts");
    }

    int nvars_;
    TermMap terms_;
};

}  // namespace tropcirc
