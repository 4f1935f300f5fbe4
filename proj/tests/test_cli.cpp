#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "bigcenter/jobspec.hpp"

using namespace bigcenter;

TEST_CASE("jobspec parsing") {
    const std::string text = R"(# commutator comparison
command = commutator
truncation = 12
seed = 7
modes = 0..2 1..3
output = structured

[connection]
0 = 0 1 0 0
2 = 1/2 0 -3 -1/2
singular = none
)";
    auto parsed = parse_jobspec(text);
    REQUIRE(std::holds_alternative<JobSpec>(parsed));
    const auto& job = std::get<JobSpec>(parsed);
    CHECK(job.command == "commutator");
    CHECK(job.truncation == 12);
    CHECK(job.seed == 7);
    CHECK(job.m_lo == 0);
    CHECK(job.m_hi == 2);
    CHECK(job.n_lo == 1);
    CHECK(job.n_hi == 3);
    CHECK(job.output == OutputMode::structured);
    REQUIRE(job.connection.size() == 3);
    CHECK(job.connection[0] == mat2(0, 1, 0, 0));
    CHECK(job.connection[1] == mat2(0, 0, 0, 0));
    CHECK(job.connection[2] == mat2(rat(1, 2), 0, -3, rat(-1, 2)));
    Connection A = job.make_conn(job.truncation);
    CHECK(A.regular());
}

TEST_CASE("jobspec inline algebra") {
    const std::string text = R"(command = ope
[algebra]
generators = x y
parity = odd odd
ope x y -2 = 1 0 0
ope y x -2 = -1 0 0
)";
    auto parsed = parse_jobspec(text);
    REQUIRE(std::holds_alternative<JobSpec>(parsed));
    VASpec spec = std::get<JobSpec>(parsed).algebra();
    CHECK(spec.gens.size() == 2);
    CHECK(spec.pole_bound == -2);
    CHECK(spec.ope_entry(1, -2, 2)[0] == 1);
    CHECK(spec.ope_entry(2, -2, 1)[0] == -1);
    CHECK(spec.gens[0].odd);
}

TEST_CASE("jobspec reports located errors") {
    auto parsed = parse_jobspec("command = ope\nnonsense\n");
    REQUIRE(std::holds_alternative<SpecError>(parsed));
    CHECK(std::get<SpecError>(parsed).line == 2);

    parsed = parse_jobspec("command = solve\n[connection]\n0 = 1 0 0 1\n");
    REQUIRE(std::holds_alternative<SpecError>(parsed));
    CHECK(std::get<SpecError>(parsed).message == "connection coefficient is not traceless");

    parsed = parse_jobspec("truncation = 1\n");
    REQUIRE(std::holds_alternative<SpecError>(parsed));

    parsed = parse_jobspec("group = sl3\n");
    REQUIRE(std::holds_alternative<SpecError>(parsed));

    parsed = parse_jobspec("command = ope\n[algebra]\ngenerators = x y\nope x y 0 = 1 0 0\n");
    REQUIRE(std::holds_alternative<SpecError>(parsed));
}

TEST_CASE("jobspec parser survives garbage without crashing") {
    std::mt19937_64 eng(77);
    const std::string pieces[] = {"command",  "=",       "[connection]", "0",
                                  "1/2",      "ope x y", "[algebra]",    "generators",
                                  "-2",       "modes",   "..",           "#",
                                  "singular", "\t",      "]",            "=="};
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        int lines = static_cast<int>(eng() % 6);
        for (int l = 0; l < lines; ++l) {
            int toks = static_cast<int>(eng() % 5);
            for (int t = 0; t < toks; ++t) {
                text += pieces[eng() % std::size(pieces)];
                text += ' ';
            }
            text += '\n';
        }
        auto parsed = parse_jobspec(text); // either outcome is fine, no throw
        if (std::holds_alternative<SpecError>(parsed))
            CHECK(std::get<SpecError>(parsed).line >= 0);
    }
}

namespace {

// Runs the CLI (path from BIGCENTER_BIN) and captures stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
    const char* bin = std::getenv("BIGCENTER_BIN");
    REQUIRE(bin != nullptr);
    std::string tmp = "cli_capture.out";
    std::string cmd = std::string(bin) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    return {status, buf.str()};
}

} // namespace

TEST_CASE("cli output is deterministic and matches the embedding display") {
    auto [status, out] = run_cli("embed --mode 1");
    CHECK(status == 0);
    CHECK(out.find("a*_{-1} = -A*_{-2} D*_{-1} + B*_{-2} C*_{-1}") != std::string::npos);
    auto [status2, out2] = run_cli("embed --mode 1");
    CHECK(out == out2);

    auto [s3, ope] = run_cli("ope --truncation 6");
    auto [s4, ope2] = run_cli("ope --truncation 6");
    CHECK(s3 == 0);
    CHECK(ope == ope2);
    CHECK(ope.find("det(w)") != std::string::npos);
}

TEST_CASE("cli structured output serializes rationals as strings") {
    auto [status, out] = run_cli("embed --mode 1 --output structured");
    CHECK(status == 0);
    CHECK(out.find("\"coeff\": \"-1\"") != std::string::npos);
    CHECK(out.find("\"sym\": \"A*\"") != std::string::npos);
}

TEST_CASE("cli selftest filter and exit codes") {
    auto [status, out] = run_cli("selftest --criterion 1");
    CHECK(status == 0);
    CHECK(out.find("PASS criterion-1") != std::string::npos);
    CHECK(out.find("criterion-2") == std::string::npos);

    auto [bad_status, bad_out] = run_cli("selftest --criterion 99");
    CHECK(bad_status != 0);
    CHECK(bad_out.find("no criterion") != std::string::npos);
}

TEST_CASE("cli selftest reports every criterion") {
    auto [status, out] = run_cli("selftest");
    CHECK(status == 0);
    for (int id = 1; id <= 13; ++id) {
        std::string line = "PASS criterion-" + std::to_string(id) + " ";
        CHECK(out.find(line) != std::string::npos);
    }
    CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli randomized checks are reproducible for a fixed seed") {
    auto [s1, out1] = run_cli("invariance --truncation 5 --seed 321");
    auto [s2, out2] = run_cli("invariance --truncation 5 --seed 321");
    CHECK(s1 == 0);
    CHECK(out1 == out2);
}

TEST_CASE("cli rejects malformed specs with exit code 2") {
    std::ofstream f("bad_spec.tmp");
    f << "command = solve\n[connection]\n0 = 1 0 0 1\n";
    f.close();
    const char* bin = std::getenv("BIGCENTER_BIN");
    REQUIRE(bin != nullptr);
    int status = std::system((std::string(bin) + " solve --spec bad_spec.tmp > /dev/null 2>&1").c_str());
    std::remove("bad_spec.tmp");
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("cli solve, gauge, invariance, delta and twist run clean") {
    std::ofstream f("solve_spec.tmp");
    f << "command = solve\ntruncation = 6\n[connection]\n0 = 0 1 0 0\n1 = 1 0 0 -1\n";
    f.close();
    auto [s1, out1] = run_cli("solve --spec solve_spec.tmp");
    CHECK(s1 == 0);
    CHECK(out1.find("det(F)") != std::string::npos);
    std::remove("solve_spec.tmp");

    std::ofstream g("gauge_spec.tmp");
    g << "command = gauge\ntruncation = 6\n[connection]\n0 = 0 1 0 0\n[gauge]\n0 = 1 1 0 1\n";
    g.close();
    auto [s2, out2] = run_cli("gauge --spec gauge_spec.tmp");
    CHECK(s2 == 0);
    CHECK(out2.find("A'.a") != std::string::npos);
    std::remove("gauge_spec.tmp");

    auto [s3, out3] = run_cli("invariance --truncation 6");
    CHECK(s3 == 0);
    CHECK(out3.find("FAIL") == std::string::npos);

    auto [s4, out4] = run_cli("delta");
    CHECK(s4 == 0);
    CHECK(out4.find("delta(x) = (D*_{-1}) (x) x + (-C*_{-1}) (x) y") != std::string::npos);

    auto [s5, out5] = run_cli("twist --truncation 5 --mode 1");
    CHECK(s5 == 0);
    CHECK(out5.find("normal form") != std::string::npos);
    CHECK(out5.find("z^{-lam}") != std::string::npos);
}

TEST_CASE("cli ope with an inline algebra matches the builtin") {
    std::ofstream f("inline_spec.tmp");
    f << "command = ope\ntruncation = 6\n[algebra]\ngenerators = x y\nparity = odd odd\n"
         "ope x y -2 = 1 0 0\nope y x -2 = -1 0 0\n";
    f.close();
    auto [s1, inline_out] = run_cli("ope --spec inline_spec.tmp");
    std::remove("inline_spec.tmp");
    auto [s2, builtin_out] = run_cli("ope --truncation 6");
    CHECK(s1 == 0);
    CHECK(inline_out == builtin_out);
}

TEST_CASE("cli commutator reports zero diff for the trivial connection") {
    std::ofstream f("comm_spec.tmp");
    f << "command = commutator\ntruncation = 8\nmodes = 0..1 0..1\n[connection]\n0 = 0 0 0 0\n";
    f.close();
    auto [status, out] = run_cli("commutator --spec comm_spec.tmp");
    std::remove("comm_spec.tmp");
    CHECK(status == 0);
    CHECK(out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("cli symbolic commutator prints the matching closed form") {
    auto [status, out] = run_cli("commutator --symbolic --truncation 6");
    CHECK(status == 0);
    CHECK(out.find("l=-2 form") != std::string::npos);
    CHECK(out.find("MISMATCH") == std::string::npos);
    CHECK(out.find("a*_{") != std::string::npos); // symbolic connection entries
}
