// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed binary through popen and checks the output contract:
// canonical text, JSON round trips, exit codes, and byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/cyclotomic.hpp"
#include "ellcomb/matrix_cheb.hpp"
#include "ellcomb/point_counts.hpp"
#include "ellcomb/poly_json.hpp"
#include "ellcomb/qt_combinatorics.hpp"

using namespace ellcomb;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ELLCOMB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("poly subcommand prints canonical text") {
    const RunResult r = run_cli("poly nk 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1*v^2 + 2*q*v + 2*v\n");

    const RunResult t = run_cli("poly wheel 3 --var t");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "1*t^3 + 3*q*t^2 + 3*t^2 + 3*q^2*t + 3*q*t + 3*t\n");
}

TEST_CASE("identical invocations are byte-identical") {
    const RunResult a = run_cli("poly ecyc 12 --format json");
    const RunResult b = run_cli("poly ecyc 12 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json output round-trips through the parser for every family") {
    const std::pair<std::string, BivarPoly> cases[] = {
        {"poly nk 5 --format json", n_k_recurrence(5)},
        {"poly hk 4 --format json", h_k(4)},
        {"poly ek 5 --format json", e_k_recurrence(5)},
        {"poly pik 2 4 --format json", BivarPoly::from_univar_in_q(p_ik(2, 4))},
        {"poly lucas 6 --format json", lucas_qt(6)},
        {"poly lucas-twisted 6 --format json", lucas_twisted(6)},
        {"poly fib 7 --format json", fib_qt(7)},
        {"poly fib-twisted 7 --format json", fib_twisted(7)},
        {"poly wheel 4 --format json", wheel_poly_enum(4)},
        {"poly cyc 12 --format json", BivarPoly::from_univar_in_q(cyc_d(12))},
        {"poly ecyc 12 --format json", ecyc_d(12)},
        {"poly wcyc 6 --format json", wcyc_d(6)},
        {"poly qid 2 8 --format json", BivarPoly::from_univar_in_q(q_id(2, 8))},
        {"poly cheb 6 --format json", BivarPoly::from_univar_in_q(chebyshev_t(6))},
    };
    for (const auto& [args, expect] : cases) {
        const RunResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        const nlohmann::json doc = nlohmann::json::parse(r.out);
        CHECK(from_json_terms(doc.at("terms")) == expect);
        // and the text form parses back to the same polynomial
        std::string text_args = args.substr(0, args.find(" --format"));
        const RunResult t = run_cli(text_args);
        REQUIRE(t.exit_code == 0);
        std::string line = t.out;
        if (!line.empty() && line.back() == '\n') line.pop_back();
        CHECK(BivarPoly::parse(line) == expect);
    }
}

TEST_CASE("verify all passes on a small sweep") {
    const RunResult r = run_cli("verify all --max-k 3 --max-d 6 --rounds 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all identities verified") != std::string::npos);
}

TEST_CASE("oracle check reports matches") {
    const RunResult r = run_cli("oracle check --curve 5,1,1 --max-k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("N1 = 9") != std::string::npos);
    CHECK(r.out.find("k=2  count=27  predict=27  MATCH") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    const RunResult k = run_cli("oracle kernel --curve 5,1,1 --max-d 2");
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("d=2  kernel=3  ecyc=3  MATCH") != std::string::npos);
}

TEST_CASE("table prints the P triangle") {
    const RunResult r = run_cli("table pik --k 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P[2,4] = 6*q^2 + 8*q + 6") != std::string::npos);
    CHECK(r.out.find("P[4,4] = 1") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run_cli("poly nosuch 3").exit_code == 2);
    CHECK(run_cli("poly nk").exit_code == 2);
    CHECK(run_cli("poly nk 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("oracle check --curve 5,1").exit_code == 2);
    CHECK(run_cli("poly lucas 31").exit_code == 2);  // SizeLimit surfaces as usage
    CHECK(run_cli("table pik").exit_code == 2);
}
