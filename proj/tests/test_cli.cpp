// Drives the installed binary through its documented surface: JSON wire
// format, exit codes, and the report schemas.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ria/json_io.hpp"
#include "ria/rng.hpp"

#ifndef RIA_CLI_PATH
#error "RIA_CLI_PATH must point at the built binary"
#endif

using namespace ria;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RIA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_dir() {
    static std::string dir = [] {
        char templ[] = "/tmp/ria_cli_XXXXXX";
        return std::string(mkdtemp(templ));
    }();
    return dir;
}

std::string write_matrix(const std::string& name, const Matrix& m) {
    std::string path = tmp_dir() + "/" + name;
    matrix_to_file(m, path);
    return path;
}

} // namespace

TEST_CASE("inertia, rank, and pinv round-trip through the wire format") {
    std::string a = write_matrix("diag.json",
                                 Matrix::from_int({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}}));
    RunResult r = run("inertia --matrix " + a);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("iplus") == 1);
    CHECK(j.at("iminus") == 1);
    CHECK(j.at("izero") == 1);

    CHECK(json::parse(run("rank --matrix " + a).out).at("rank") == 2);

    RunResult rp = run("pinv --matrix " + a);
    CHECK(rp.exit_code == 0);
    Matrix g = matrix_from_string(rp.out);
    CHECK(g.at(0, 0) == Scalar::exact(GaussianRational(mpq_class(1, 2), 0)));
    CHECK(g.at(1, 1) == Scalar::exact(GaussianRational(mpq_class(-1, 3), 0)));
}

TEST_CASE("exit code 1 marks well-posed negative answers") {
    std::string a = write_matrix("a.json", Matrix::from_int({{1, 0}, {0, -1}}));
    std::string b = write_matrix("b.json", Matrix::from_int({{1}, {0}}));

    RunResult feasible = run("lmi feasible --A " + a + " --B " + b + " --relation geq");
    CHECK(feasible.exit_code == 0);
    CHECK(json::parse(feasible.out).at("feasible") == true);

    RunResult infeasible = run("lmi feasible --A " + a + " --B " + b + " --relation leq");
    CHECK(infeasible.exit_code == 1);
    json cert = json::parse(infeasible.out); // still a full certificate
    CHECK(cert.at("feasible") == false);

    RunResult solve = run("lmi solve --A " + a + " --B " + b + " --relation leq");
    CHECK(solve.exit_code == 1);
    CHECK(json::parse(solve.out).contains("error"));
}

TEST_CASE("exit code 2 marks malformed input") {
    std::string bad = tmp_dir() + "/bad.json";
    std::ofstream(bad) << "{\"rows\": 1}";
    CHECK(run("inertia --matrix " + bad).exit_code == 2);
    CHECK(run("inertia --matrix /nonexistent.json").exit_code == 2);
    CHECK(run("inertia").exit_code == 2);               // missing required flag
    CHECK(run("extremal --A1 x --B1 y --relation bogus").exit_code == 2);

    // Non-Hermitian input where a Hermitian matrix is required.
    std::string nh = write_matrix("nh.json", Matrix::from_int({{0, 1}, {0, 0}}));
    std::string b = write_matrix("bb.json", Matrix::from_int({{1}, {0}}));
    CHECK(run("lmi feasible --A " + nh + " --B " + b).exit_code == 2);
}

TEST_CASE("extremal subcommand emits the full report with ingredients") {
    std::string a1 = write_matrix("a1.json", Matrix::from_int({{1, 0}, {0, -1}}));
    std::string b1 = write_matrix("b1.json", Matrix::from_int({{1}, {0}}));
    std::string a2 = write_matrix("a2.json", Matrix::from_int({{1}}));
    std::string b2 = write_matrix("b2.json", Matrix::from_int({{1}}));

    RunResult r = run("extremal --A1 " + a1 + " --B1 " + b1 + " --A2 " + a2 + " --B2 " + b2 +
                      " --relation geq --objective rank --sense min");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("value") == 1);
    CHECK(j.at("max_rank") == 2);
    CHECK(j.at("min_iplus") == 0);
    CHECK(j.at("max_iminus") == 2);
    // Enough ingredients to recompute the value by hand.
    CHECK(j.at("ingredients").at("i_minus_m") == 2);
    CHECK(j.at("ingredients").at("i_minus_m1") == 2);
    CHECK(j.at("ingredients").at("r_n") == 3);
    CHECK(j.at("ingredients").at("r_a1b1") == 2);
    CHECK(j.at("properties").at("g_exists_geq").at("agree") == true);

    // Free optimization of the same data.
    RunResult rf = run("extremal --A1 " + a1 + " --B1 " + b1);
    CHECK(json::parse(rf.out).at("min_rank") == 1);

    // Solution-space optimization.
    RunResult rs = run("extremal --A1 " + a1 + " --B1 " + b1 + " --relation geq --solution");
    CHECK(json::parse(rs.out).at("min_iplus") == 1);
}

TEST_CASE("loewner subcommand reports the extremal matrix") {
    std::string a1 = write_matrix("la1.json", Matrix::from_int({{1, 0}, {0, -1}}));
    std::string b1 = write_matrix("lb1.json", Matrix::from_int({{1}, {0}}));
    std::string a2 = write_matrix("la2.json", Matrix::from_int({{1}}));
    std::string b2 = write_matrix("lb2.json", Matrix::from_int({{1}}));
    RunResult r = run("loewner --A1 " + a1 + " --B1 " + b1 + " --A2 " + a2 + " --B2 " + b2 +
                      " --relation geq --sense max");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("exists") == true);
    CHECK(matrix_from_json(j.at("x0")) == Matrix::from_int({{1}}));
    CHECK(matrix_from_json(j.at("phi")) == Matrix::from_int({{0, 0}, {0, -1}}));
    CHECK(j.at("phi_inertia").at("iminus") == 1);

    // Mismatched sense is an input error.
    CHECK(run("loewner --A1 " + a1 + " --B1 " + b1 + " --A2 " + a2 + " --B2 " + b2 +
              " --relation geq --sense min")
              .exit_code == 2);
}

TEST_CASE("solve-eq, block-inertia, verify, and conjecture subcommands") {
    std::string a = write_matrix("sa.json", Matrix::from_int({{1, 0}, {0, 0}}));
    RunResult se = run("solve-eq --type ax-b-hermitian --A " + a + " --B " + a +
                       " --samples 5 --seed 3");
    CHECK(se.exit_code == 0);
    json js = json::parse(se.out);
    CHECK(js.at("consistent") == true);
    CHECK(js.at("samples").size() == 5);

    std::string bad_b = write_matrix("sb.json", Matrix::from_int({{0, 0}, {0, 1}}));
    CHECK(run("solve-eq --type ax-b-hermitian --A " + a + " --B " + bad_b).exit_code == 1);

    std::string b = write_matrix("bb2.json", Matrix::from_int({{1}, {0}}));
    RunResult bi = run("block-inertia --form bordered --A " + a + " --B " + b);
    CHECK(bi.exit_code == 0);
    // A = diag(1,0) is psd, so the counts collapse to r[A,B] and r(B).
    CHECK(json::parse(bi.out).at("iplus") == 1);
    CHECK(json::parse(bi.out).at("iminus") == 1);

    RunResult v = run("verify --seed 11 --m1 2 --m2 1 --n 1 --samples 40 --instances 2");
    CHECK(v.exit_code == 0);
    CHECK(json::parse(v.out).at("violations") == 0);

    RunResult c = run("conjecture35 --k 2 --instances 10 --seed 7 --m 2 --n 2 --samples 40");
    CHECK(c.exit_code == 0);
    json jc = json::parse(c.out);
    CHECK(jc.at("instances") == 10);
    CHECK(jc.at("common_found") == 10);
    CHECK(jc.at("criterion_disagreements") == 0);
}

TEST_CASE("float backend flag lifts exact data") {
    Rng rng(5);
    std::string a = write_matrix("fa.json", random_hermitian(rng, 3).matrix());
    RunResult exact = run("rank --matrix " + a);
    RunResult lifted = run("rank --matrix " + a + " --backend float --tol 1e-9");
    CHECK(exact.exit_code == 0);
    CHECK(lifted.exit_code == 0);
    CHECK(json::parse(exact.out).at("rank") == json::parse(lifted.out).at("rank"));
}

TEST_CASE("RIA_DEFAULT_BACKEND supplies the backend when no flag is given") {
    Rng rng(6);
    std::string a = write_matrix("ea.json", random_hermitian(rng, 2).matrix());
    setenv("RIA_DEFAULT_BACKEND", "float", 1);
    RunResult via_env = run("rank --matrix " + a + " --tol 1e-9");
    unsetenv("RIA_DEFAULT_BACKEND");
    RunResult exact = run("rank --matrix " + a);
    CHECK(via_env.exit_code == 0);
    CHECK(json::parse(via_env.out).at("rank") == json::parse(exact.out).at("rank"));
}
