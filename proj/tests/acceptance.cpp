// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Links only the library; every expected value below is either a
// hand-checked golden value or an internal cross-check between independent
// construction routes.
#include <tropcirc/bridge.hpp>
#include <tropcirc/circuit.hpp>
#include <tropcirc/errors.hpp>
#include <tropcirc/lattice.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace tropcirc;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
};

void partitions_of_rec(int remaining, int max_part, std::vector<int>& acc,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_of_rec(d, d, acc, out);
    return out;
}

std::vector<std::vector<int>> all_one_lines(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

struct Corpora {
    std::vector<std::pair<Partition, Partition>> shape_pairs;      // criterion 3 shapes
    std::vector<std::pair<SkewShape, int>> nonzero_instances;      // criterion 3, per n
    std::map<std::pair<std::string, int>, Circuit> circuits;       // for criterion 10
};

}  // namespace

int main() {
    std::cout << std::fixed << std::setprecision(2);
    int failures = 0;
    Corpora corpora;

    auto run = [&](int num, const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << num << ": "
                  << name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << " [" << secs << " s]" << std::endl;
        if (!r.ok) ++failures;
    };

    run(1, "golden skew example, expansion, tropical equality", [&]() -> Result {
        SkewShape shape(Partition::parse("2,1"), Partition::parse("1"));
        ExactPolynomial skew = skew_schur(shape, 2);
        ExactPolynomial expected(2);
        expected.add_term({2, 0}, 1);
        expected.add_term({1, 1}, 2);
        expected.add_term({0, 2}, 1);
        bool ok = skew == expected;
        SchurExpansion ex = schur_expand(skew);
        ok = ok && ex.coefficients.size() == 2 && ex.coeff(Partition::parse("1,1")) == 1 &&
             ex.coeff(Partition::parse("2")) == 1;
        ok = ok && trop_equal(tropicalize(skew), tropicalize(schur(Partition::parse("2"), 2)),
                              EqualityMode::axiomatic);
        return {ok, "s_(2,1)/(1) in 2 variables"};
    });

    run(2, "worked example: shape to permutation pipeline", [&]() -> Result {
        SkewShape shape(Partition::parse("5,4,3,2,1"), Partition::parse("2,2,1"));
        Permutation w = w_from_skew(shape);
        bool ok = w == Permutation::parse("4,1,5,2,7,3,9,6,10,8");
        ok = ok && reading_word(diagonal_filling(shape)) == Word{3, 2, 1, 4, 3, 6, 5, 8, 7, 9};
        ok = ok && inverse_code(w) == std::vector<int>{1, 2, 3, 0, 0, 2, 0, 2, 0, 0};
        ok = ok && beta_max(w) == Partition::parse("5,4,1");
        ok = ok && beta_max_by_column_push(w) == beta_max(w);
        ok = ok && skew_from_rothe(w) == shape;
        return {ok, "10-cell shape, both directions"};
    });

    run(3, "skew Schur equals single Schur tropically, full sweep", [&]() -> Result {
        int bad = 0;
        for (const Partition& lambda : partitions_in_box(Partition::parse("4,4,4,4"))) {
            for (const Partition& mu : partitions_in_box(lambda)) {
                corpora.shape_pairs.emplace_back(lambda, mu);
                SkewShape shape(lambda, mu);
                for (int n = 2; n <= 4; ++n) {
                    if (shape.max_column_height() > n) continue;  // zero polynomial
                    TheoremReport report = verify_theorem_main(shape, n);
                    if (!report.all_passed()) ++bad;
                    corpora.nonzero_instances.emplace_back(shape, n);
                    auto key = std::make_pair(report.beta.to_string(), n);
                    if (!corpora.circuits.count(key))
                        corpora.circuits.emplace(key, build_skew_circuit(shape, n));
                }
            }
        }
        return {bad == 0, std::to_string(corpora.nonzero_instances.size()) +
                              " nonzero instances over " +
                              std::to_string(corpora.shape_pairs.size()) + " shapes"};
    });

    run(4, "circuit gate bound and symbolic correctness", [&]() -> Result {
        const std::vector<Partition> box6 = partitions_in_box(Partition::parse("6,6,6,6,6,6"));
        long long builds = 0;
        int bound_bad = 0;
        for (int n = 1; n <= 8; ++n) {
            for (const Partition& lambda : box6) {
                if (static_cast<int>(lambda.rows()) > n) continue;
                Circuit c = build_schur_circuit(lambda, n);
                ++builds;
                if (static_cast<long long>(gate_count(c).total) >
                    1LL * n * n + lambda.first())
                    ++bound_bad;
                if (n <= 4) {
                    auto key = std::make_pair(lambda.to_string(), n);
                    if (!corpora.circuits.count(key)) corpora.circuits.emplace(key, c);
                }
            }
        }
        int verify_bad = 0, verified = 0;
        for (int d = 0; d <= 8; ++d) {
            for (const Partition& lambda : partitions_of(d)) {
                for (int n = std::max(1, static_cast<int>(lambda.rows())); n <= 4; ++n) {
                    Circuit c = build_schur_circuit(lambda, n);
                    ++verified;
                    if (!verify_evaluates(c, schur(lambda, n))) ++verify_bad;
                    auto key = std::make_pair(lambda.to_string(), n);
                    if (!corpora.circuits.count(key)) corpora.circuits.emplace(key, c);
                }
            }
        }
        return {bound_bad == 0 && verify_bad == 0,
                std::to_string(builds) + " gate-bound builds, " + std::to_string(verified) +
                    " symbolic expansions"};
    });

    run(5, "permutahedron as iterated Minkowski sum of columns", [&]() -> Result {
        int bad = 0, instances = 0;
        for (const Partition& lambda : partitions_in_box(Partition::parse("3,3,3"))) {
            Partition conj = lambda.conjugate();
            for (int n = std::max(1, static_cast<int>(lambda.rows())); n <= 4; ++n) {
                LatticePointSet sum{n, {ExpVec(n, 0)}};
                for (std::size_t k = 0; k < conj.rows(); ++k) {
                    Partition column(std::vector<int>(conj.part(k), 1));
                    sum = minkowski_points(sum, permutahedron_points(column, n));
                }
                if (sum != permutahedron_points(lambda, n)) ++bad;
                ++instances;
            }
        }
        return {bad == 0, std::to_string(instances) + " nonzero instances"};
    });

    run(6, "Newton polytope saturation and lattice-point identity", [&]() -> Result {
        int hull_bad = 0, hull_checks = 0;
        for (int d = 0; d <= 6; ++d) {
            for (const Partition& lambda : partitions_of(d)) {
                for (int n = std::max(1, static_cast<int>(lambda.rows())); n <= 4; ++n) {
                    ExactPolynomial s = schur(lambda, n);
                    if (hull_lattice_points(support(s)) != permutahedron_points(lambda, n) ||
                        !snp_check(s))
                        ++hull_bad;
                    ++hull_checks;
                }
            }
        }
        int newton_bad = 0;
        for (const auto& [shape, n] : corpora.nonzero_instances) {
            ExactPolynomial f = skew_schur(shape, n);
            std::optional<Partition> dom = dominating_partition(f);
            // Support equal to the full lattice-point set of the dominating
            // permutahedron pins Newton(f) exactly, vertices included.
            if (!dom || support(f) != permutahedron_points(*dom, n)) ++newton_bad;
        }
        return {hull_bad == 0 && newton_bad == 0,
                std::to_string(hull_checks) + " hull checks, " +
                    std::to_string(corpora.nonzero_instances.size()) +
                    " dominated sweep polynomials"};
    });

    run(7, "expansion positivity, dominance cone, word counts", [&]() -> Result {
        std::vector<Permutation> corpus;
        for (const auto& v : all_one_lines(4)) corpus.emplace_back(v);
        std::vector<std::vector<int>> s5 = all_one_lines(5);
        SplitMix64 rng(1);
        for (std::size_t i = s5.size() - 1; i > 0; --i)
            std::swap(s5[i], s5[rng.below(i + 1)]);
        for (std::size_t i = 0; i < 50; ++i) corpus.emplace_back(s5[i]);

        int bad = 0;
        for (const Permutation& w : corpus) {
            const int n = std::max(1, static_cast<int>(w.length()));
            SchurExpansion ex = schur_expand(stanley_poly(w, n));
            Partition beta = beta_max(w);
            bool ok = ex.all_nonnegative() && ex.coeff(beta) != 0;
            Int weighted_sum = 0;
            for (const auto& [lambda, c] : ex.coefficients) {
                if (!dominance_leq(lambda, beta)) ok = false;
                weighted_sum += c * hook_length_count(lambda);
            }
            if (weighted_sum != Int(reduced_words(w).size())) ok = false;
            if (!ok) ++bad;
        }
        return {bad == 0, std::to_string(corpus.size()) + " permutations"};
    });

    run(8, "Stanley polynomial of shape permutation equals skew Schur", [&]() -> Result {
        int bad = 0, checks = 0;
        for (const auto& [lambda, mu] : corpora.shape_pairs) {
            SkewShape shape(lambda, mu);
            std::vector<Word> words = reduced_words(w_from_skew(shape));
            for (int n = 2; n <= 4; ++n) {
                if (stanley_poly_from_words(words, n) != skew_schur(shape, n)) ++bad;
                ++checks;
            }
        }
        return {bad == 0, std::to_string(checks) + " comparisons, zero cases included"};
    });

    run(9, "negative control: monomial basis element", [&]() -> Result {
        ExactPolynomial m2 = monomial(Partition::parse("2"), 2);
        SchurExpansion ex = schur_expand(m2);
        bool ok = ex.coeff(Partition::parse("1,1")) == -1 &&
                  ex.coeff(Partition::parse("2")) == 1;
        ok = ok && !dominating_partition(m2).has_value();
        ok = ok && !snp_check(m2);
        TropicalPolynomial lhs = tropicalize(m2);
        TropicalPolynomial rhs = tropicalize(schur(Partition::parse("2"), 2));
        ok = ok && trop_equal(lhs, rhs, EqualityMode::functional);
        ok = ok && !trop_equal(lhs, rhs, EqualityMode::axiomatic);
        return {ok, "m_(2) in 2 variables"};
    });

    run(10, "circuit evaluation agrees with expansion at random points", [&]() -> Result {
        int bad = 0, evaluated = 0, skipped = 0;
        std::uint64_t index = 0;
        for (const auto& [key, circuit] : corpora.circuits) {
            ++index;
            TropicalPolynomial expanded(circuit.nvars());
            try {
                expanded = circuit_expand(circuit);
            } catch (const resource_limit_error&) {
                ++skipped;
                continue;
            }
            if (!sampled_eval_agrees(circuit, expanded, 100, 12345 + index)) ++bad;
            ++evaluated;
        }
        std::string detail = std::to_string(evaluated) + " circuits x 100 points";
        if (skipped > 0) detail += ", " + std::to_string(skipped) + " skipped at term cap";
        return {bad == 0, detail};
    });

    std::cout << (failures == 0 ? "acceptance: all criteria hold"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
