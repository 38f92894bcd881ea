#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

std::string cli_path() {
    const char* path = std::getenv("SW_CLI_BIN");
    REQUIRE_MESSAGE(path != nullptr, "SW_CLI_BIN must point at the CLI binary");
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_file = "") {
    std::string command = cli_path() + " " + args + " 2>&1";
    if (!stdin_file.empty()) command += " < " + stdin_file;
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& contents) {
    std::string path = "cli_test_input.json";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fwrite(contents.data(), 1, contents.size(), f);
    fclose(f);
    return path;
}

}  // namespace

TEST_CASE("rsk forward emits the documented json and text") {
    RunResult r = run("--format json rsk --config 3,1,2,3,2 --n 5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("command") == "rsk");
    CHECK(j.at("result").at("insertion")[0] == json::array({3, 2, 0, 0, 0}));
    CHECK(j.at("result").at("recording")[0] == json::array({1}));
    CHECK(j.at("result").at("recording")[4] == json::array({3, 2, 0, 0, 0}));

    RunResult text = run("rsk --config 3,1,2,3,2 --n 5");
    REQUIRE(text.exit_code == 0);
    CHECK(text.output.find("t: 122/33") != std::string::npos);
    CHECK(text.output.find("y: 134/25") != std::string::npos);
}

TEST_CASE("rsk inverse round trips through json") {
    RunResult forward = run("--format json rsk --config 2,1,2,3 --n 3");
    REQUIRE(forward.exit_code == 0);
    std::string path = write_temp(forward.output);
    RunResult inverse = run("--format json rsk --inverse --input " + path);
    REQUIRE(inverse.exit_code == 0);
    json j = json::parse(inverse.output);
    CHECK(j.at("result").at("config") == json::array({2, 1, 2, 3}));
    std::remove(path.c_str());
}

TEST_CASE("amplitude command reproduces the worked value") {
    RunResult r = run("--format json amplitude --config 1,3,2,2 --lambda 3,1 --t 123/2 --y 134/2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    auto terms = j.at("result").at("amplitude").at("terms");
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].at("num") == 1);
    CHECK(terms[0].at("den") == 6);
    CHECK(terms[0].at("radicand") == 3);

    RunResult zero = run("--format json amplitude --config 1,1,2,2 --lambda 3,1 --t 123/2 --y 134/2");
    REQUIRE(zero.exit_code == 0);
    CHECK(json::parse(zero.output).at("result").at("amplitude").at("terms").empty());

    RunResult graph = run("amplitude --config 1,3,2,2 --lambda 3,1 --t 123/2 --y 134/2 --show-graph");
    REQUIRE(graph.exit_code == 0);
    CHECK(graph.output.find("(210/20/1)") != std::string::npos);
    CHECK(graph.output.find("(210/11/1)") != std::string::npos);
    CHECK(graph.output.find("(310/21/1)") != std::string::npos);
}

TEST_CASE("state command lists the whole orbit") {
    RunResult r = run("--format json state --lambda 3,1 --t 123/2 --y 134/2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("exact") == true);
    CHECK(j.at("result").at("mu") == json::array({1, 2, 1}));
    CHECK(j.at("result").at("amplitudes").size() == 12);

    RunResult text = run("state --lambda 3,1 --t 123/2 --y 134/2");
    REQUIRE(text.exit_code == 0);
    CHECK(text.output.find("|1,3,2,2>") != std::string::npos);
}

TEST_CASE("json output is byte-for-byte deterministic") {
    RunResult a = run("--format json state --lambda 3,1 --t 123/2 --y 134/2");
    RunResult b = run("--format json state --lambda 3,1 --t 123/2 --y 134/2");
    CHECK(a.output == b.output);
}

TEST_CASE("verify passes at desk scale") {
    RunResult r = run("--format json verify --N 3 --n 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("result").at("pass") == true);

    RunResult trivial = run("verify --N 1 --n 1");
    CHECK(trivial.exit_code == 0);
}

TEST_CASE("verify refuses the factorial stage above the budget but still runs") {
    RunResult r = run("--format json verify --N 9 --n 2 --budget 4 --max-orbit 40");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    bool saw_refusal = false;
    for (const auto& stage : j.at("result").at("stages")) {
        if (stage.at("stage") == "standard_method") {
            saw_refusal = stage.value("refused", false);
            CHECK(stage.at("reason").get<std::string>().find("9! operations") !=
                  std::string::npos);
        }
        if (stage.at("stage") == "rsk_bijectivity") CHECK(stage.at("ok") == true);
    }
    CHECK(saw_refusal);
    CHECK(j.at("result").at("pass") == true);
}

TEST_CASE("bench emits csv rows") {
    RunResult r = run("bench --N-range 3:4 --n 2 --repeats 1 --budget 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("N,n,graph_seconds,amplitude_float,oracle_seconds,oracle_status") !=
          std::string::npos);
    CHECK(r.output.find("refused (4! beyond budget 3!)") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("amplitude --config 1,2 --lambda 3,1 --t 123/2 --y 134/2").exit_code == 2);
    CHECK(run("state --lambda 1,3 --t 123/2 --y 134/2").exit_code == 2);
    CHECK(run("state --lambda 3,1 --t 123/1 --y 134/2").exit_code == 2);
    CHECK(run("rsk --config 1,2,x").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("SW_BUDGET environment variable steers the factorial budget") {
    std::string command = "SW_BUDGET=3 " + cli_path() + " bench --N-range 4:4 --n 2 --repeats 1 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        output.append(buffer.data(), got);
    pclose(pipe);
    CHECK(output.find("refused (4! beyond budget 3!)") != std::string::npos);
}
