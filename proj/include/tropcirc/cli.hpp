#pragma once

#include "tropcirc/bridge.hpp"
#include "tropcirc/circuit.hpp"
#include "tropcirc/errors.hpp"
#include "tropcirc/json_io.hpp"
#include "tropcirc/lattice.hpp"
#include "tropcirc/symmetric.hpp"
#include "tropcirc/tropical.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace tropcirc {

// Exit codes: 0 success / all properties hold, 1 a verified property failed,
// 2 usage or parse error, 3 resource cap exceeded.
enum ExitCode : int { kExitOk = 0, kExitPropertyFailed = 1, kExitUsage = 2, kExitResource = 3 };

namespace cli_detail {

inline std::size_t term_cap_from_env() {
    const char* v = std::getenv("TROPCIRC_TERM_CAP");
    if (v == nullptr) return kDefaultTermCap;
    Int parsed = parse_int(v);
    if (parsed < 1) throw std::invalid_argument("TROPCIRC_TERM_CAP must be a positive integer");
    return static_cast<std::size_t>(parsed);
}

inline void emit(std::ostream& out, const Json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

struct SweepLine {
    std::string line;
    bool ok = true;
};

// Run fn over [0, count) with `jobs` workers, printing one line per index in
// index order. Lines stream as the finished prefix grows, so identical
// invocations are byte-identical regardless of the job count.
inline bool run_ordered(int jobs, std::size_t count,
                        const std::function<SweepLine(std::size_t)>& fn, std::ostream& out) {
    bool all_ok = true;
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            SweepLine r = fn(i);
            out << r.line << '\n';
            all_ok = all_ok && r.ok;
        }
        return all_ok;
    }

    std::vector<SweepLine> results(count);
    std::vector<char> done(count, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> abort{false};

    auto worker = [&] {
        while (!abort.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                SweepLine r = fn(i);
                std::lock_guard<std::mutex> lock(mu);
                results[i] = std::move(r);
                done[i] = 1;
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                abort.store(true);
            }
            cv.notify_all();
        }
        cv.notify_all();
    };

    std::vector<std::thread> threads;
    const int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    threads.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);

    std::size_t flushed = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (flushed < count) {
            cv.wait(lock, [&] { return done[flushed] != 0 || abort.load(); });
            if (done[flushed] == 0) break;  // aborted before this slot finished
            while (flushed < count && done[flushed] != 0) {
                out << results[flushed].line << '\n';
                all_ok = all_ok && results[flushed].ok;
                ++flushed;
            }
        }
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    return all_ok;
}

// Canonical sweep corpus: every skew shape lambda/mu with lambda inside the
// box and mu inside lambda, in lexicographic (lambda, mu) order.
inline std::vector<SkewShape> skew_sweep(const Partition& box) {
    std::vector<SkewShape> shapes;
    for (const Partition& lambda : partitions_in_box(box))
        for (const Partition& mu : partitions_in_box(lambda)) shapes.emplace_back(lambda, mu);
    return shapes;
}

inline std::vector<Permutation> symmetric_group(int m) {
    if (m < 1) throw std::invalid_argument("symmetric group degree must be positive");
    std::vector<int> oneline(m);
    for (int i = 0; i < m; ++i) oneline[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(oneline));
    } while (std::next_permutation(oneline.begin(), oneline.end()));
    return out;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tropical circuits and Newton polytopes for Schur-type symmetric polynomials",
                 "tropcirc"};
    app.require_subcommand(1);
    bool pretty = false;
    int jobs = 1;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--jobs", jobs, "worker threads for sweep subcommands")->default_val(1);

    std::string lambda_s, mu_s, perm_s, in_path, lhs_path, rhs_path, circuit_path, out_path;
    std::string kind, mode_s = "axiomatic", point_s, max_lambda_s;
    int vars = 1, count = 100;
    std::uint64_t seed = 1;

    CLI::App* skew_schur_cmd = app.add_subcommand("skew-schur", "skew Schur polynomial as JSON");
    skew_schur_cmd->add_option("--lambda", lambda_s, "outer partition, e.g. 2,1")->required();
    skew_schur_cmd->add_option("--mu", mu_s, "inner partition (default empty)");
    skew_schur_cmd->add_option("--vars", vars, "number of variables")->required();

    CLI::App* schur_expand_cmd = app.add_subcommand("schur-expand", "Schur expansion of a polynomial file");
    schur_expand_cmd->add_option("--in", in_path, "polynomial JSON file")->required();

    CLI::App* stanley_cmd = app.add_subcommand("stanley", "Stanley symmetric polynomial as JSON");
    stanley_cmd->add_option("--perm", perm_s, "permutation in one-line notation, e.g. 2,1,4,3")->required();
    stanley_cmd->add_option("--vars", vars, "number of variables")->required();

    CLI::App* beta_max_cmd = app.add_subcommand("beta-max", "dominance-maximal partition of a permutation");
    beta_max_cmd->add_option("--perm", perm_s, "permutation in one-line notation")->required();

    CLI::App* skew_to_perm_cmd = app.add_subcommand("skew-to-perm", "permutation attached to a skew shape");
    skew_to_perm_cmd->add_option("--lambda", lambda_s, "outer partition")->required();
    skew_to_perm_cmd->add_option("--mu", mu_s, "inner partition (default empty)");

    CLI::App* trop_equal_cmd = app.add_subcommand("trop-equal", "compare two tropical polynomial files");
    trop_equal_cmd->add_option("--lhs", lhs_path, "left tropical polynomial JSON file")->required();
    trop_equal_cmd->add_option("--rhs", rhs_path, "right tropical polynomial JSON file")->required();
    trop_equal_cmd->add_option("--mode", mode_s, "axiomatic | functional | sampled")->default_val("axiomatic");
    trop_equal_cmd->add_option("--count", count, "sample count for --mode sampled")->default_val(100);
    trop_equal_cmd->add_option("--seed", seed, "seed for --mode sampled")->default_val(1);

    CLI::App* circuit_cmd = app.add_subcommand("circuit", "build, evaluate, expand, and inspect circuits");
    circuit_cmd->require_subcommand(1);
    CLI::App* circuit_build = circuit_cmd->add_subcommand("build", "synthesize a circuit");
    circuit_build->add_option("--kind", kind, "schur | skew | stanley")->required();
    circuit_build->add_option("--lambda", lambda_s, "partition (schur/skew)");
    circuit_build->add_option("--mu", mu_s, "inner partition (skew)");
    circuit_build->add_option("--perm", perm_s, "permutation (stanley)");
    circuit_build->add_option("--vars", vars, "number of variables")->required();
    circuit_build->add_option("--out", out_path, "write circuit JSON to this file");
    CLI::App* circuit_eval_cmd = circuit_cmd->add_subcommand("eval", "evaluate a circuit file at a point");
    circuit_eval_cmd->add_option("--circuit", circuit_path, "circuit JSON file")->required();
    circuit_eval_cmd->add_option("--point", point_s, "comma-separated rationals, e.g. 1/2,3")->required();
    CLI::App* circuit_stats = circuit_cmd->add_subcommand("stats", "gate census of a circuit file");
    circuit_stats->add_option("--circuit", circuit_path, "circuit JSON file")->required();
    CLI::App* circuit_expand_cmd = circuit_cmd->add_subcommand("expand", "symbolic expansion of a circuit file");
    circuit_expand_cmd->add_option("--circuit", circuit_path, "circuit JSON file")->required();
    circuit_expand_cmd->add_option("--mode", mode_s, "axiomatic | functional")->default_val("axiomatic");

    CLI::App* verify_cmd = app.add_subcommand("verify", "verification sweeps (newline-delimited JSON)");
    verify_cmd->require_subcommand(1);
    CLI::App* verify_theorem13 = verify_cmd->add_subcommand(
        "theorem13", "skew tropical-equality sweep over shapes inside --max-lambda");
    verify_theorem13->add_option("--max-lambda", max_lambda_s, "bounding partition")->required();
    verify_theorem13->add_option("--vars", vars, "number of variables")->required();
    CLI::App* verify_dominance = verify_cmd->add_subcommand(
        "stanley-dominance", "Schur-expansion dominance for a whole symmetric group");
    verify_dominance->add_option("--symmetric-group", count, "group degree m")->required();
    CLI::App* verify_rado = verify_cmd->add_subcommand("rado", "Newton(s_lambda) = permutahedron");
    verify_rado->add_option("--lambda", lambda_s, "partition")->required();
    verify_rado->add_option("--vars", vars, "number of variables")->required();
    CLI::App* verify_minkowski = verify_cmd->add_subcommand(
        "minkowski", "permutahedron points as iterated Minkowski sums of elementaries");
    verify_minkowski->add_option("--lambda", lambda_s, "partition")->required();
    verify_minkowski->add_option("--vars", vars, "number of variables")->required();
    CLI::App* verify_bjs_cmd = verify_cmd->add_subcommand(
        "bjs", "Stanley-vs-skew-Schur identity over shapes inside --max-lambda");
    verify_bjs_cmd->add_option("--max-lambda", max_lambda_s, "bounding partition")->required();
    verify_bjs_cmd->add_option("--vars", vars, "number of variables")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    for (CLI::App* sub : {circuit_cmd, verify_cmd})
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help() << '\n';
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    using cli_detail::emit;
    try {
        if (skew_schur_cmd->parsed()) {
            SkewShape shape(Partition::parse(lambda_s), Partition::parse(mu_s));
            emit(out, poly_to_json(skew_schur(shape, vars)), pretty);
            return kExitOk;
        }
        if (schur_expand_cmd->parsed()) {
            SchurExpansion expansion = schur_expand(poly_from_json(read_json_file(in_path)));
            Json coeffs = Json::array();
            for (const auto& [mu, c] : expansion.coefficients)
                coeffs.push_back({{"partition", mu.to_string()}, {"coeff", to_string(c)}});
            emit(out, Json{{"coefficients", std::move(coeffs)}}, pretty);
            return kExitOk;
        }
        if (stanley_cmd->parsed()) {
            emit(out, poly_to_json(stanley_poly(Permutation::parse(perm_s), vars)), pretty);
            return kExitOk;
        }
        if (beta_max_cmd->parsed()) {
            emit(out, Json(beta_max(Permutation::parse(perm_s)).to_string()), pretty);
            return kExitOk;
        }
        if (skew_to_perm_cmd->parsed()) {
            SkewShape shape(Partition::parse(lambda_s), Partition::parse(mu_s));
            emit(out, Json(w_from_skew(shape).to_string()), pretty);
            return kExitOk;
        }
        if (trop_equal_cmd->parsed()) {
            TropicalPolynomial lhs = trop_from_json(read_json_file(lhs_path));
            TropicalPolynomial rhs = trop_from_json(read_json_file(rhs_path));
            bool equal = mode_s == "sampled"
                             ? trop_equal_sampled(lhs, rhs, count, seed)
                             : trop_equal(lhs, rhs, parse_equality_mode(mode_s));
            emit(out, Json{{"mode", mode_s}, {"equal", equal}}, pretty);
            return equal ? kExitOk : kExitPropertyFailed;
        }
        if (circuit_build->parsed()) {
            Circuit circuit = [&] {
                if (kind == "schur") return build_schur_circuit(Partition::parse(lambda_s), vars);
                if (kind == "skew")
                    return build_skew_circuit(
                        SkewShape(Partition::parse(lambda_s), Partition::parse(mu_s)), vars);
                if (kind == "stanley") return build_stanley_circuit(Permutation::parse(perm_s), vars);
                throw std::invalid_argument("unknown circuit kind: " + kind);
            }();
            if (!out_path.empty()) {
                write_json_file(out_path, circuit_to_json(circuit), pretty);
                GateStats s = gate_count(circuit);
                emit(out,
                     Json{{"out", out_path},
                          {"stats",
                           {{"n_inputs", s.n_inputs},
                            {"n_consts", s.n_consts},
                            {"n_oplus", s.n_oplus},
                            {"n_odot", s.n_odot},
                            {"total", s.total},
                            {"depth", s.depth}}}},
                     pretty);
            } else {
                emit(out, circuit_to_json(circuit), pretty);
            }
            return kExitOk;
        }
        if (circuit_eval_cmd->parsed()) {
            Circuit circuit = circuit_from_json(read_json_file(circuit_path));
            RationalPoint point = RationalPoint::parse(point_s);
            emit(out, Json(to_string(circuit_eval(circuit, point.coords))), pretty);
            return kExitOk;
        }
        if (circuit_stats->parsed()) {
            GateStats s = gate_count(circuit_from_json(read_json_file(circuit_path)));
            emit(out,
                 Json{{"n_inputs", s.n_inputs},
                      {"n_consts", s.n_consts},
                      {"n_oplus", s.n_oplus},
                      {"n_odot", s.n_odot},
                      {"total", s.total},
                      {"depth", s.depth}},
                 pretty);
            return kExitOk;
        }
        if (circuit_expand_cmd->parsed()) {
            Circuit circuit = circuit_from_json(read_json_file(circuit_path));
            TropicalPolynomial expanded = circuit_expand(circuit, parse_equality_mode(mode_s),
                                                         cli_detail::term_cap_from_env());
            emit(out, trop_to_json(expanded), pretty);
            return kExitOk;
        }
        if (verify_theorem13->parsed()) {
            std::vector<SkewShape> all = cli_detail::skew_sweep(Partition::parse(max_lambda_s));
            std::vector<SkewShape> shapes;
            for (const SkewShape& s : all)
                if (s.max_column_height() <= vars) shapes.push_back(s);
            bool ok = cli_detail::run_ordered(
                jobs, shapes.size(),
                [&](std::size_t i) -> cli_detail::SweepLine {
                    TheoremReport r = verify_theorem_main(shapes[i], vars);
                    return {report_to_json(r).dump(), r.all_passed()};
                },
                out);
            return ok ? kExitOk : kExitPropertyFailed;
        }
        if (verify_dominance->parsed()) {
            std::vector<Permutation> group = cli_detail::symmetric_group(count);
            bool ok = cli_detail::run_ordered(
                jobs, group.size(),
                [&](std::size_t i) -> cli_detail::SweepLine {
                    bool pass = verify_stanley_dominance(group[i], 1);
                    Json line{{"perm", group[i].to_string()},
                              {"beta", beta_max(group[i]).to_string()},
                              {"ok", pass}};
                    return {line.dump(), pass};
                },
                out);
            return ok ? kExitOk : kExitPropertyFailed;
        }
        if (verify_rado->parsed()) {
            Partition lambda = Partition::parse(lambda_s);
            ExactPolynomial s = schur(lambda, vars);
            if (s.is_zero())
                throw std::invalid_argument("schur polynomial is zero in this many variables");
            bool newton_eq = hull_lattice_points(support(s)) == permutahedron_points(lambda, vars);
            bool snp = snp_check(s);
            emit(out,
                 Json{{"lambda", lambda.to_string()},
                      {"vars", vars},
                      {"newton_equals_permutahedron", newton_eq},
                      {"snp", snp}},
                 pretty);
            return newton_eq && snp ? kExitOk : kExitPropertyFailed;
        }
        if (verify_minkowski->parsed()) {
            Partition lambda = Partition::parse(lambda_s);
            LatticePointSet expected = permutahedron_points(lambda, vars);
            LatticePointSet total{vars, {ExpVec(vars, 0)}};
            Partition conj = lambda.conjugate();
            for (std::size_t k = 0; k < conj.rows(); ++k)
                total = minkowski_points(total, support(elementary(conj.part(k), vars)));
            bool equal = total == expected;
            emit(out,
                 Json{{"lambda", lambda.to_string()}, {"vars", vars}, {"eq5_holds", equal}},
                 pretty);
            return equal ? kExitOk : kExitPropertyFailed;
        }
        if (verify_bjs_cmd->parsed()) {
            std::vector<SkewShape> shapes = cli_detail::skew_sweep(Partition::parse(max_lambda_s));
            bool ok = cli_detail::run_ordered(
                jobs, shapes.size(),
                [&](std::size_t i) -> cli_detail::SweepLine {
                    bool pass = verify_bjs(shapes[i], vars);
                    Json line{{"shape", shapes[i].to_string()}, {"vars", vars}, {"ok", pass}};
                    return {line.dump(), pass};
                },
                out);
            return ok ? kExitOk : kExitPropertyFailed;
        }
        err << "error: no subcommand dispatched\n";
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace tropcirc
