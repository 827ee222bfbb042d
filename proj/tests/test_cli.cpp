#include <tropcirc/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace tropcirc;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli skew-schur matches the worked example") {
    CliResult r = run({"skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"terms\":[{\"coeff\":\"1\",\"exp\":[0,2]},{\"coeff\":\"2\",\"exp\":[1,1]},"
          "{\"coeff\":\"1\",\"exp\":[2,0]}],\"vars\":2}\n");
}

TEST_CASE("cli beta-max matches the worked example") {
    CliResult r = run({"beta-max", "--perm", "4,1,5,2,7,3,9,6,10,8"});
    CHECK(r.code == 0);
    CHECK(r.out == "\"5,4,1\"\n");
}

TEST_CASE("cli skew-to-perm and stanley") {
    CliResult perm = run({"skew-to-perm", "--lambda", "2,1", "--mu", "1"});
    CHECK(perm.code == 0);
    CHECK(perm.out == "\"2,1,4,3\"\n");

    CliResult stanley = run({"stanley", "--perm", "2,1,4,3", "--vars", "2"});
    CliResult skew = run({"skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2"});
    CHECK(stanley.code == 0);
    CHECK(stanley.out == skew.out);
}

TEST_CASE("cli schur-expand") {
    const std::string path = "cli_poly_in.json";
    CHECK(run({"skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2"}).code == 0);
    {
        std::ostringstream out, err;
        REQUIRE(run_cli({"skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2"}, out,
                        err) == 0);
        write_json_file(path, Json::parse(out.str()), false);
    }
    CliResult r = run({"schur-expand", "--in", path});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"coefficients\":[{\"coeff\":\"1\",\"partition\":\"1,1\"},"
          "{\"coeff\":\"1\",\"partition\":\"2\"}]}\n");
    std::remove(path.c_str());
}

TEST_CASE("cli trop-equal modes and exit codes") {
    const std::string lhs = "cli_lhs.json", rhs = "cli_rhs.json";
    std::ostringstream o1, o2, e;
    REQUIRE(run_cli({"skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2"}, o1, e) == 0);
    REQUIRE(run_cli({"skew-schur", "--lambda", "2", "--vars", "2"}, o2, e) == 0);
    write_json_file(lhs, trop_to_json(tropicalize(poly_from_json(Json::parse(o1.str())))),
                    false);
    write_json_file(rhs, trop_to_json(tropicalize(poly_from_json(Json::parse(o2.str())))),
                    false);

    CliResult eq = run({"trop-equal", "--lhs", lhs, "--rhs", rhs});
    CHECK(eq.code == 0);
    CHECK(eq.out == "{\"equal\":true,\"mode\":\"axiomatic\"}\n");

    CliResult sampled = run({"trop-equal", "--lhs", lhs, "--rhs", rhs, "--mode", "sampled",
                             "--count", "25", "--seed", "3"});
    CHECK(sampled.code == 0);

    // Against a genuinely different envelope: exit code 1.
    std::ostringstream o3;
    REQUIRE(run_cli({"skew-schur", "--lambda", "1,1", "--vars", "2"}, o3, e) == 0);
    write_json_file(rhs, trop_to_json(tropicalize(poly_from_json(Json::parse(o3.str())))),
                    false);
    CliResult ne = run({"trop-equal", "--lhs", lhs, "--rhs", rhs, "--mode", "functional"});
    CHECK(ne.code == 1);
    CHECK(ne.out == "{\"equal\":false,\"mode\":\"functional\"}\n");

    std::remove(lhs.c_str());
    std::remove(rhs.c_str());
}

TEST_CASE("cli circuit build, stats, eval, expand round trip") {
    const std::string path = "cli_circuit.json";
    CliResult build = run({"circuit", "build", "--kind", "schur", "--lambda", "2,1", "--vars",
                           "3", "--out", path});
    CHECK(build.code == 0);
    CHECK(build.out.find("\"total\":6") != std::string::npos);

    CliResult stats = run({"circuit", "stats", "--circuit", path});
    CHECK(stats.code == 0);
    CHECK(stats.out ==
          "{\"depth\":4,\"n_consts\":0,\"n_inputs\":3,\"n_odot\":3,\"n_oplus\":3,"
          "\"total\":6}\n");

    CliResult eval = run({"circuit", "eval", "--circuit", path, "--point", "1/2,3,0"});
    CHECK(eval.code == 0);
    CHECK(eval.out == "\"13/2\"\n");

    CliResult expand = run({"circuit", "expand", "--circuit", path, "--mode", "functional"});
    CHECK(expand.code == 0);
    CHECK(expand.out.find("\"vars\":3") != std::string::npos);

    // Without --out the circuit JSON goes to stdout and reloads identically.
    CliResult direct =
        run({"circuit", "build", "--kind", "schur", "--lambda", "2,1", "--vars", "3"});
    CHECK(direct.code == 0);
    Circuit c = circuit_from_json(Json::parse(direct.out));
    CHECK(gate_count(c).total == 6);

    std::remove(path.c_str());
}

TEST_CASE("cli circuit build kinds skew and stanley agree") {
    CliResult skew = run({"circuit", "build", "--kind", "skew", "--lambda", "2,1", "--mu",
                          "1", "--vars", "2"});
    CliResult stanley =
        run({"circuit", "build", "--kind", "stanley", "--perm", "2,1,4,3", "--vars", "2"});
    CHECK(skew.code == 0);
    CHECK(skew.out == stanley.out);
}

TEST_CASE("cli usage errors exit with code 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"beta-max"}).code == 2);
    CHECK(run({"beta-max", "--perm", "1,1"}).code == 2);
    CHECK(run({"trop-equal", "--lhs", "missing.json", "--rhs", "missing.json"}).code == 2);
    CHECK(run({"circuit", "build", "--kind", "schur", "--lambda", "1,1,1", "--vars", "2"})
              .code == 2);
    CHECK(run({"circuit", "build", "--kind", "bogus", "--vars", "2"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("cli help exits zero") {
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage: tropcirc") != std::string::npos);
}

TEST_CASE("cli term cap env variable produces exit code 3") {
    const std::string path = "cli_cap_circuit.json";
    REQUIRE(run({"circuit", "build", "--kind", "schur", "--lambda", "2,1", "--vars", "3",
                 "--out", path})
                .code == 0);
    setenv("TROPCIRC_TERM_CAP", "2", 1);
    CliResult capped = run({"circuit", "expand", "--circuit", path});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("term cap") != std::string::npos);
    setenv("TROPCIRC_TERM_CAP", "junk", 1);
    CHECK(run({"circuit", "expand", "--circuit", path}).code == 2);
    unsetenv("TROPCIRC_TERM_CAP");
    CHECK(run({"circuit", "expand", "--circuit", path}).code == 0);
    std::remove(path.c_str());
}

TEST_CASE("cli verify subcommands succeed on small instances") {
    CliResult rado = run({"verify", "rado", "--lambda", "2,1", "--vars", "3"});
    CHECK(rado.code == 0);
    CHECK(rado.out ==
          "{\"lambda\":\"2,1\",\"newton_equals_permutahedron\":true,\"snp\":true,"
          "\"vars\":3}\n");

    CliResult mink = run({"verify", "minkowski", "--lambda", "2,1", "--vars", "3"});
    CHECK(mink.code == 0);
    CHECK(mink.out == "{\"eq5_holds\":true,\"lambda\":\"2,1\",\"vars\":3}\n");

    CliResult dom = run({"verify", "stanley-dominance", "--symmetric-group", "3"});
    CHECK(dom.code == 0);
    CHECK(dom.out.find("\"perm\":\"3,2,1\"") != std::string::npos);

    CliResult thm = run({"verify", "theorem13", "--max-lambda", "2,1", "--vars", "2"});
    CHECK(thm.code == 0);

    CliResult bjs = run({"verify", "bjs", "--max-lambda", "2,1", "--vars", "2"});
    CHECK(bjs.code == 0);
}

TEST_CASE("cli sweeps are byte-deterministic and job-count independent") {
    auto sweep = [&](const std::string& jobs) {
        return run({"--jobs", jobs, "verify", "theorem13", "--max-lambda", "3,2", "--vars",
                    "3"});
    };
    CliResult once = sweep("1");
    CliResult again = sweep("1");
    CliResult parallel = sweep("4");
    CHECK(once.code == 0);
    CHECK(once.out == again.out);
    CHECK(once.out == parallel.out);

    CliResult bjs1 = run({"verify", "bjs", "--max-lambda", "3,1", "--vars", "2"});
    CliResult bjs3 =
        run({"--jobs", "3", "verify", "bjs", "--max-lambda", "3,1", "--vars", "2"});
    CHECK(bjs1.out == bjs3.out);
}

TEST_CASE("cli pretty flag indents output") {
    CliResult pretty = run({"--pretty", "beta-max", "--perm", "2,1"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out == "\"1\"\n");
    CliResult pretty_poly = run({"skew-schur", "--lambda", "1", "--vars", "1", "--pretty"});
    CHECK(pretty_poly.code == 0);
    CHECK(pretty_poly.out.find('\n') != std::string::npos);
    CHECK(pretty_poly.out.find("  ") != std::string::npos);
}
