#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "quiveralg/numt.hpp"

// Integration tests that spawn the installed binary. The harness passes the
// binary path as the last command line argument.

namespace {

std::string g_binary;

struct CliResult {
    int code = -1;
    std::string out;  //!< stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

numt::IntMatrix matrix_of(const nlohmann::json& rows) {
    int d = static_cast<int>(rows.size());
    numt::IntMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = rows[i][j].get<long long>();
    return m;
}

}  // namespace

TEST_CASE("decompose reproduces the worked decompositions") {
    CliResult r = run_cli("decompose --p 72 --n 5 --m 1");
    CHECK(r.code == 0);
    CHECK(r.out == "C(T)^4 ⊕ M2(C(T))^10 ⊕ M6(C(T))^8\n");

    CliResult j = run_cli("decompose --p 77 --n 6 --m 1 --json");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["summands"] == nlohmann::json({{1, 1}, {2, 3}, {10, 7}}));

    // n shares a factor with p, so the orbit map is undefined
    CliResult bad = run_cli("decompose --p 72 --n 6 --m 1");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "coprime"));
}

TEST_CASE("census counts isomorphism classes") {
    CliResult r3 = run_cli("census --p 3");
    CHECK(r3.code == 0);
    CHECK(contains(r3.out, "5 classes"));
    CHECK(contains(r3.out, "Q(0,1)  size 2  members: (0,1) (0,2)"));

    CliResult r2 = run_cli("census --p 2 --json");
    CHECK(r2.code == 0);
    auto parsed = nlohmann::json::parse(r2.out);
    CHECK(parsed["class_count"] == 4);
}

TEST_CASE("iso answers yes and no with a witness") {
    CliResult yes = run_cli("iso --p 3 --q1 1,2 --q2 2,1");
    CHECK(yes.code == 0);
    CHECK(contains(yes.out, "isomorphic: yes"));
    CHECK(contains(yes.out, "vertex map:"));

    CliResult no = run_cli("iso --p 3 --q1 1,1 --q2 1,2 --json");
    CHECK(no.code == 0);
    CHECK(nlohmann::json::parse(no.out)["isomorphic"] == false);

    CliResult bad = run_cli("iso --p 3 --q1 1 --q2 2,1");
    CHECK(bad.code == 1);
}

TEST_CASE("build emits the quiver as JSON") {
    CliResult r = run_cli("build --p 2 --n 1 --m 1 --json");
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["p"] == 2);
    CHECK(parsed["edges"].size() == 2);
}

TEST_CASE("reduce diagonalizes F and reports the transforms") {
    CliResult r = run_cli("reduce --F '4,6;2,2' --G '1,0;0,1'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "F' = 2,0;0,2\n"));

    // the printed factorization really multiplies back: f = U F' V
    CliResult j = run_cli("reduce --F '4,6;2,2' --G '1,0;0,1' --json");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    numt::IntMatrix fp = matrix_of(parsed["F"]);
    numt::IntMatrix u = matrix_of(parsed["U"]);
    numt::IntMatrix v = matrix_of(parsed["V"]);
    CHECK(u * fp * v == numt::IntMatrix(2, {4, 6, 2, 2}));
    numt::Int du = u.det(), dv = v.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    CliResult sing = run_cli("reduce --F '1,1;1,1' --G '1,0;0,1'");
    CHECK(sing.code == 2);
    CHECK(contains(sing.out, "singular F"));
}

TEST_CASE("onb reports sampled defects") {
    CliResult r = run_cli("onb --F 2 --G 3 --samples 50 --seed 0 --json");
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["orth_defect"].get<double>() < 1e-9);
    CHECK(parsed["samples"] == 50);

    CliResult text = run_cli("onb --F '2,0;0,3' --G '1,1;0,1' --samples 25 --seed 7");
    CHECK(text.code == 0);
    CHECK(contains(text.out, "result: pass"));
}

TEST_CASE("normalize rewrites words and reports parse errors") {
    CliResult r = run_cli("normalize --F 2 --G 3 --word 'S* U1^2 S'");
    CHECK(r.code == 0);
    CHECK(r.out == "U1^3\n");

    CliResult sum = run_cli("normalize --F 2 --G 3 --word 'S S* + U1 S S* U1^-1'");
    CHECK(sum.code == 0);
    CHECK(sum.out == "1\n");

    CliResult j = run_cli("normalize --F 2 --G 3 --word 'U1^-1 S' --json");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["degree_terms"][0]["nu"] == nlohmann::json({-3}));

    CliResult bad = run_cli("normalize --F 2 --G 3 --word 'S U1^0'");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "position 2"));

    // non-diagonal F is a domain error, not a parse error
    CliResult dom = run_cli("normalize --F '4,6;2,2' --G '1,0;0,1' --word S");
    CHECK(dom.code == 2);
    CHECK(contains(dom.out, "diagonal"));
}

TEST_CASE("verify runs the relation suites with the exit code contract") {
    CliResult pres = run_cli("verify --check presentation --F '2,0;0,3' --G '1,1;0,1'");
    CHECK(pres.code == 0);
    CHECK(contains(pres.out, "result: pass"));

    CliResult cp = run_cli("verify --check crossed-product --F 2 --G 3 --k 1 --trials 25");
    CHECK(cp.code == 0);
    CHECK(contains(cp.out, "result: pass"));

    CliResult mu = run_cli("verify --check matrix-units --F 2 --G 3 --k 2");
    CHECK(mu.code == 0);

    CliResult dia = run_cli("verify --check diagram --F 2 --G 3 --k 1");
    CHECK(dia.code == 0);

    CliResult sub = run_cli("verify --check subalg-gens --F 2 --G 3 --k 2");
    CHECK(sub.code == 0);
    CHECK(contains(sub.out, "witness 1:"));

    CliResult tw = run_cli("verify --check twisted --F '2,0;0,3' --G '5,0;0,1' --k 3,2");
    CHECK(tw.code == 0);

    // hypothesis violated: reported and flagged through the exit code
    CliResult pq = run_cli("verify --check power-quotient --F 2 --G 3 --k 2");
    CHECK(pq.code == 2);
    CHECK(contains(pq.out, "NOT met (|det G| = 3)"));

    // domain-level rejection of the twist parameters
    CliResult gcd = run_cli("verify --check twisted --F 2 --G 3 --k 2");
    CHECK(gcd.code == 2);
    CHECK(contains(gcd.out, "gcd"));

    CliResult badk = run_cli("verify --check diagram --F 2 --G 3 --k 1,2");
    CHECK(badk.code == 1);

    CliResult unk = run_cli("verify --check no-such-suite --F 2 --G 3");
    CHECK(unk.code == 1);
}

TEST_CASE("json output is deterministic for a fixed seed") {
    std::string cmd = "verify --check crossed-product --F 2 --G 3 --k 1 --trials 10 --seed 5 --json";
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto parsed = nlohmann::json::parse(a.out);
    CHECK(parsed["check"] == "crossed-product");
    CHECK(parsed["pass"] == true);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("decompose --p 72").code == 1);
    CHECK(run_cli("no-such-command").code == 1);
    CHECK(run_cli("reduce --F '1,2,3;4,5' --G 1").code == 1);
    CliResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.out, "decompose"));
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_binary = argv[argc - 1];
        --argc;
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path to quiveralg binary>\n");
        return 1;
    }
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
