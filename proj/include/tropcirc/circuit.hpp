#pragma once

#include "tropcirc/bridge.hpp"
#include "tropcirc/errors.hpp"
#include "tropcirc/numeric.hpp"
#include "tropcirc/partition.hpp"
#include "tropcirc/permutation.hpp"
#include "tropcirc/polynomial.hpp"
#include "tropcirc/tropical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropcirc {

constexpr std::size_t kDefaultTermCap = 200000;

enum class GateKind { input, constant, oplus, odot };

// One gate of a max-plus circuit. `a` is the variable index for inputs and
// the left operand index otherwise; `value` is only meaningful for constants.
struct Gate {
    GateKind kind;
    int a = -1;
    int b = -1;
    Rational value;
};

// Straight-line max-plus program: gates in topological order (operands
// always precede their gate), with a designated output gate.
class Circuit {
public:
    Circuit(int nvars, std::vector<Gate> gates, std::size_t output)
        : nvars_(nvars), gates_(std::move(gates)), output_(output) {
        if (nvars_ < 1) throw std::invalid_argument("circuit needs at least one variable");
        if (gates_.empty()) throw std::invalid_argument("circuit has no gates");
        if (output_ >= gates_.size()) throw std::invalid_argument("circuit output index out of range");
        for (std::size_t i = 0; i < gates_.size(); ++i) {
            const Gate& g = gates_[i];
            switch (g.kind) {
                case GateKind::input:
                    if (g.a < 0 || g.a >= nvars_)
                        throw std::invalid_argument("input gate reads a variable out of range");
                    break;
                case GateKind::constant:
                    break;
                case GateKind::oplus:
                case GateKind::odot:
                    if (g.a < 0 || g.b < 0 || static_cast<std::size_t>(g.a) >= i ||
                        static_cast<std::size_t>(g.b) >= i)
                        throw std::invalid_argument(
                            "operation gate must reference earlier gates only");
                    break;
            }
        }
    }

    int nvars() const { return nvars_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t output() const { return output_; }

    std::vector<bool> reachable() const {
        std::vector<bool> seen(gates_.size(), false);
        std::vector<std::size_t> stack{output_};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            if (seen[i]) continue;
            seen[i] = true;
            const Gate& g = gates_[i];
            if (g.kind == GateKind::oplus || g.kind == GateKind::odot) {
                stack.push_back(static_cast<std::size_t>(g.a));
                stack.push_back(static_cast<std::size_t>(g.b));
            }
        }
        return seen;
    }

private:
    int nvars_;
    std::vector<Gate> gates_;
    std::size_t output_;
};

// Gate census over the part of the circuit reachable from the output.
// `total` counts operation gates only, so the paper's gate bounds can be
// asserted without settling whether inputs count as gates.
struct GateStats {
    std::size_t n_inputs = 0;
    std::size_t n_consts = 0;
    std::size_t n_oplus = 0;
    std::size_t n_odot = 0;
    std::size_t total = 0;  // n_oplus + n_odot
    std::size_t depth = 0;  // operation gates on the longest path to the output
};

inline GateStats gate_count(const Circuit& c) {
    GateStats s;
    std::vector<bool> live = c.reachable();
    std::vector<std::size_t> depth(c.gates().size(), 0);
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = c.gates()[i];
        switch (g.kind) {
            case GateKind::input: ++s.n_inputs; break;
            case GateKind::constant: ++s.n_consts; break;
            case GateKind::oplus:
                ++s.n_oplus;
                depth[i] = 1 + std::max(depth[g.a], depth[g.b]);
                break;
            case GateKind::odot:
                ++s.n_odot;
                depth[i] = 1 + std::max(depth[g.a], depth[g.b]);
                break;
        }
    }
    s.total = s.n_oplus + s.n_odot;
    s.depth = depth[c.output()];
    return s;
}

namespace detail {

// Incremental circuit assembly with input/constant sharing; finish() prunes
// to the gates reachable from the output and renumbers.
class CircuitBuilder {
public:
    explicit CircuitBuilder(int nvars) : nvars_(nvars) {}

    std::size_t input(int var) {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("input variable out of range");
        auto it = input_cache_.find(var);
        if (it != input_cache_.end()) return it->second;
        gates_.push_back({GateKind::input, var, -1, Rational(0)});
        return input_cache_[var] = gates_.size() - 1;
    }

    std::size_t constant(const Rational& v) {
        auto it = const_cache_.find(v);
        if (it != const_cache_.end()) return it->second;
        gates_.push_back({GateKind::constant, -1, -1, v});
        return const_cache_[v] = gates_.size() - 1;
    }

    std::size_t oplus(std::size_t a, std::size_t b) { return op(GateKind::oplus, a, b); }
    std::size_t odot(std::size_t a, std::size_t b) { return op(GateKind::odot, a, b); }

    // Keep every constructed gate, reachable from the output or not, so that
    // recorded gate indices stay valid in the returned circuit.
    Circuit finish_all(std::size_t output) const { return Circuit(nvars_, gates_, output); }

    Circuit finish(std::size_t output) const {
        std::vector<bool> keep(gates_.size(), false);
        std::vector<std::size_t> stack{output};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            if (keep[i]) continue;
            keep[i] = true;
            const Gate& g = gates_[i];
            if (g.kind == GateKind::oplus || g.kind == GateKind::odot) {
                stack.push_back(static_cast<std::size_t>(g.a));
                stack.push_back(static_cast<std::size_t>(g.b));
            }
        }
        std::vector<int> renum(gates_.size(), -1);
        std::vector<Gate> kept;
        for (std::size_t i = 0; i < gates_.size(); ++i) {
            if (!keep[i]) continue;
            Gate g = gates_[i];
            if (g.kind == GateKind::oplus || g.kind == GateKind::odot) {
                g.a = renum[g.a];
                g.b = renum[g.b];
            }
            renum[i] = static_cast<int>(kept.size());
            kept.push_back(std::move(g));
        }
        return Circuit(nvars_, std::move(kept), static_cast<std::size_t>(renum[output]));
    }

private:
    std::size_t op(GateKind k, std::size_t a, std::size_t b) {
        if (a >= gates_.size() || b >= gates_.size())
            throw std::invalid_argument("operation gate must reference earlier gates only");
        gates_.push_back({k, static_cast<int>(a), static_cast<int>(b), Rational(0)});
        return gates_.size() - 1;
    }

    int nvars_;
    std::vector<Gate> gates_;
    std::map<int, std::size_t> input_cache_;
    std::map<Rational, std::size_t> const_cache_;
};

// Dynamic program for all tropical elementary polynomials e_1..e_n over a
// builder: E[j][k] = E[j-1][k] (+) (x_j (*) E[j-1][k-1]), with the k = j
// diagonal as a running (*)-chain and the k = 1 column as a running maximum
// (both boundaries avoid materializing trop(e_0)). Interior cells cost two
// op gates, boundaries one, n(n-1) op gates in total.
inline std::vector<std::size_t> elementary_taps(CircuitBuilder& builder, int n) {
    std::vector<std::size_t> prev;  // prev[k-1] = gate for e_k(x_1..x_j)
    for (int j = 1; j <= n; ++j) {
        std::size_t xj = builder.input(j - 1);
        std::vector<std::size_t> cur(j);
        for (int k = 1; k <= j; ++k) {
            if (j == 1)
                cur[0] = xj;
            else if (k == 1)
                cur[0] = builder.oplus(prev[0], xj);
            else if (k == j)
                cur[j - 1] = builder.odot(prev[j - 2], xj);
            else
                cur[k - 1] = builder.oplus(prev[k - 1], builder.odot(xj, prev[k - 2]));
        }
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace detail

struct ElementaryBank {
    Circuit circuit;
    std::vector<std::size_t> taps;  // taps[k-1] computes trop(e_k)
};

// Bank of circuits for trop(e_1)..trop(e_n) with shared structure; the
// circuit's designated output is the top tap e_n. The full triangular
// recurrence is kept — n(n-1) op gates — so every tap index stays valid;
// refinish at taps[k-1] to read off trop(e_k).
inline ElementaryBank build_elementary_bank(int n) {
    if (n < 1) throw std::invalid_argument("elementary bank needs at least one variable");
    detail::CircuitBuilder builder(n);
    std::vector<std::size_t> taps = detail::elementary_taps(builder, n);
    return {builder.finish_all(taps.back()), std::move(taps)};
}

// Circuit for trop(s_lambda)(x_1..x_n) as the tropical product of the
// column elementaries e_{lambda'_1} (*) ... (*) e_{lambda'_{lambda_1}}.
// At most n(n-1) + (lambda_1 - 1) < n^2 + lambda_1 op gates.
inline Circuit build_schur_circuit(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur circuit needs at least one variable");
    if (static_cast<int>(lambda.rows()) > n)
        throw std::invalid_argument("zero polynomial has no tropicalization");
    detail::CircuitBuilder builder(n);
    if (lambda.empty()) return builder.finish(builder.constant(Rational(0)));
    std::vector<std::size_t> taps = detail::elementary_taps(builder, n);
    Partition conj = lambda.conjugate();
    std::size_t acc = taps[conj.part(0) - 1];
    for (std::size_t k = 1; k < conj.rows(); ++k)
        acc = builder.odot(acc, taps[conj.part(k) - 1]);
    return builder.finish(acc);
}

// Circuit for trop(s_{lambda/mu})(x_1..x_n), routed through the permutation
// attached to the shape: beta = beta_max(w_{lambda/mu}) has beta_1 equal to
// the (compacted) lambda_1, so the schur-circuit bound carries over.
inline Circuit build_skew_circuit(const SkewShape& shape, int n) {
    if (n < 1) throw std::invalid_argument("skew circuit needs at least one variable");
    Partition beta = beta_max(w_from_skew(shape));
    if (static_cast<int>(beta.rows()) > n)
        throw std::invalid_argument("zero polynomial has no tropicalization");
    return build_schur_circuit(beta, n);
}

// Circuit for the tropicalized Stanley symmetric polynomial F_w(x_1..x_n).
inline Circuit build_stanley_circuit(const Permutation& w, int n) {
    if (n < 1) throw std::invalid_argument("stanley circuit needs at least one variable");
    Partition beta = beta_max(w);
    if (static_cast<int>(beta.rows()) > n)
        throw std::invalid_argument("zero polynomial has no tropicalization");
    return build_schur_circuit(beta, n);
}

inline Rational circuit_eval(const Circuit& c, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != c.nvars())
        throw std::invalid_argument("evaluation point has wrong dimension");
    std::vector<Rational> val(c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate& g = c.gates()[i];
        switch (g.kind) {
            case GateKind::input: val[i] = point[g.a]; break;
            case GateKind::constant: val[i] = g.value; break;
            case GateKind::oplus: val[i] = std::max(val[g.a], val[g.b]); break;
            case GateKind::odot: val[i] = val[g.a] + val[g.b]; break;
        }
    }
    return val[c.output()];
}

// Symbolic expansion of the circuit into an explicit tropical polynomial.
// Term maps merge duplicates eagerly (idempotent max); in functional mode
// every gate's term set is additionally pruned to its non-redundant terms.
// Gate values are freed once every consumer has run, and any intermediate
// result larger than term_cap raises a resource error naming the gate.
inline TropicalPolynomial circuit_expand(const Circuit& c,
                                         EqualityMode mode = EqualityMode::axiomatic,
                                         std::size_t term_cap = kDefaultTermCap) {
    using TermMap = TropicalPolynomial::TermMap;
    const auto& gates = c.gates();
    std::vector<bool> live = c.reachable();
    std::vector<int> uses(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (live[i] && (g.kind == GateKind::oplus || g.kind == GateKind::odot)) {
            ++uses[g.a];
            ++uses[g.b];
        }
    }
    ++uses[c.output()];

    auto merge_max = [](TermMap& into, ExpVec exp, const Rational& coeff) {
        auto [it, inserted] = into.try_emplace(std::move(exp), coeff);
        if (!inserted && coeff > it->second) it->second = coeff;
    };
    auto cap_error = [term_cap](std::size_t gate) -> resource_limit_error {
        return resource_limit_error("term cap of " + std::to_string(term_cap) +
                                    " exceeded while expanding gate " + std::to_string(gate));
    };

    std::vector<std::optional<TermMap>> val(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!live[i]) continue;
        const Gate& g = gates[i];
        TermMap out;
        switch (g.kind) {
            case GateKind::input: {
                ExpVec e(c.nvars(), 0);
                e[g.a] = 1;
                out.emplace(std::move(e), Rational(0));
                break;
            }
            case GateKind::constant:
                out.emplace(ExpVec(c.nvars(), 0), g.value);
                break;
            case GateKind::oplus: {
                out = *val[g.a];
                for (const auto& [exp, coeff] : *val[g.b]) merge_max(out, exp, coeff);
                break;
            }
            case GateKind::odot: {
                for (const auto& [ea, ca] : *val[g.a]) {
                    for (const auto& [eb, cb] : *val[g.b]) {
                        ExpVec e(c.nvars());
                        for (int v = 0; v < c.nvars(); ++v) e[v] = ea[v] + eb[v];
                        merge_max(out, std::move(e), ca + cb);
                    }
                    if (out.size() > term_cap) throw cap_error(i);
                }
                break;
            }
        }
        if (out.size() > term_cap) throw cap_error(i);
        if (mode == EqualityMode::functional &&
            (g.kind == GateKind::oplus || g.kind == GateKind::odot))
            detail::functional_prune(out);
        if (g.kind == GateKind::oplus || g.kind == GateKind::odot) {
            if (--uses[g.a] == 0) val[g.a].reset();
            if (--uses[g.b] == 0) val[g.b].reset();
        }
        if (uses[i] > 0) val[i] = std::move(out);
    }

    TropicalPolynomial result(c.nvars());
    for (auto& [exp, coeff] : *val[c.output()]) result.add_term(exp, coeff);
    return canonicalize(result, mode);
}

// Exact check that the circuit computes trop(f): symbolic expansion compared
// term-for-term against the tropicalization.
inline bool verify_evaluates(const Circuit& c, const ExactPolynomial& f,
                             std::size_t term_cap = kDefaultTermCap) {
    return trop_equal(circuit_expand(c, EqualityMode::axiomatic, term_cap), tropicalize(f),
                      EqualityMode::axiomatic);
}

// Spot check that circuit evaluation matches a tropical polynomial at
// pseudorandom rational points; cheap cross-check of eval against expand.
inline bool sampled_eval_agrees(const Circuit& c, const TropicalPolynomial& g, int count,
                                std::uint64_t seed) {
    if (c.nvars() != g.nvars())
        throw std::invalid_argument("circuit and polynomial have different variable counts");
    if (count < 1) throw std::invalid_argument("sample count must be positive");
    SplitMix64 rng(seed);
    for (int s = 0; s < count; ++s) {
        std::vector<Rational> point(c.nvars());
        for (auto& x : point) x = rng.rational(50, 16);
        if (circuit_eval(c, point) != trop_eval(g, point)) return false;
    }
    return true;
}

}  // namespace tropcirc
