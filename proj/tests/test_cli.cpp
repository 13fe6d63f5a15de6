#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ORIENTDOM_CLI_PATH
#error "ORIENTDOM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only; stderr goes to /dev/null
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(ORIENTDOM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

nlohmann::json first_json(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("domt of the 4-rung ladder reports 4") {
    auto r = run_cli("domt --family ladder:4 --no-timing");
    CHECK(r.exit_code == 0);
    auto j = first_json(r.output);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["quantity"] == "dom_t");
    CHECK(j["value"] == 4);
    CHECK(j["exact"] == true);
    CHECK(j["stats"]["elapsedMs"] == 0);
}

TEST_CASE("spectrum report for K_{3,4}") {
    auto r = run_cli("spectrum --family completeBipartite:3,4 --no-timing");
    CHECK(r.exit_code == 0);
    auto j = first_json(r.output);
    CHECK(j["values"] == nlohmann::json::parse("[4,5]"));
    CHECK(j["contiguous"] == true);
}

TEST_CASE("witnesses re-validate through solve") {
    auto r = run_cli("domt --family completeBipartite:2,3 --no-timing");
    auto j = first_json(r.output);
    std::string graph6 = j["witness"]["graph6"];
    std::string bits = j["witness"]["dirBits"];
    auto solve = run_cli("solve --graph6 '" + graph6 + "' --dir " + bits + " --no-timing");
    CHECK(solve.exit_code == 0);
    auto sj = first_json(solve.output);
    CHECK(sj["value"] == j["value"]);
    CHECK(sj["witness"]["tdSet"] == j["witness"]["tdSet"]);
}

TEST_CASE("solve accepts arc lists") {
    auto r = run_cli("solve --graph6 Bw --arcs '0>1,1>2,2>0' --no-timing");
    CHECK(r.exit_code == 0);
    auto j = first_json(r.output);
    CHECK(j["value"] == 3);
    auto g = run_cli("solve --graph6 Bw --arcs '0>1,1>2,2>0' --quantity gamma --no-timing");
    CHECK(first_json(g.output)["value"] == 2);
}

TEST_CASE("construct emits figure-ready dot output") {
    auto r = run_cli("construct grid-min 6 8 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("digraph") != std::string::npos);
    // the first row points rightward: vertex 0 -> 1; the gray set has 20 nodes
    CHECK(r.output.find("0 -> 1;") != std::string::npos);
    size_t grays = 0, pos = 0;
    while ((pos = r.output.find("fillcolor=gray", pos)) != std::string::npos) {
        ++grays;
        pos += 1;
    }
    CHECK(grays == 20);

    auto rmax = run_cli("construct grid-max 6 8 --format dot");
    // figure 2 starts with the single leftward arc
    CHECK(rmax.output.find("1 -> 0;") != std::string::npos);
}

TEST_CASE("verify exits 0 on verified checks") {
    auto r = run_cli("verify lem-K2P3-outdeg --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(first_json(r.output.substr(0, r.output.find('\n') + 1))["status"] == "verified");

    auto c = run_cli("verify conj-spectrum-contiguous --corpus exhaustive:4 --no-timing");
    CHECK(c.exit_code == 0);
}

TEST_CASE("a refuted check exits 1 and its counterexample replays") {
    auto r = run_cli("verify conj-DOMt-remove-vertex --graph6 Esoo --no-timing");
    CHECK(r.exit_code == 1);
    auto j = first_json(r.output.substr(0, r.output.find('\n') + 1));
    CHECK(j["status"] == "refuted");
    CHECK(j["counterexample"]["graph6"] == "Esoo");
    std::string bits = j["counterexample"]["dirBits"];
    auto replay = run_cli("solve --graph6 Esoo --dir " + bits + " --no-timing");
    CHECK(replay.exit_code == 0);
    CHECK(first_json(replay.output)["value"] == 5);
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run_cli("domt --family path:4").exit_code == 4);      // input: no valid orientation
    CHECK(run_cli("domt --family nosuch:4").exit_code == 4);    // input: unknown family
    CHECK(run_cli("domt").exit_code == 2);                      // usage: no graph given
    CHECK(run_cli("bogus-subcommand").exit_code == 2);          // usage
    CHECK(run_cli("verify not-a-check").exit_code == 2);        // usage: unknown check
    CHECK(run_cli("domt --family complete:9").exit_code == 3);  // 36 edges over the default cap
    CHECK(run_cli("solve --graph6 Bw --dir 010 --no-timing").exit_code == 0);
    CHECK(run_cli("solve --graph6 '####'").exit_code == 4);     // parse failure
    CHECK(run_cli("checks").exit_code == 0);
    CHECK(run_cli("families").exit_code == 0);
}

TEST_CASE("byte determinism across worker counts") {
    for (const char* cmd :
         {"domt --family completeBipartite:3,3 --no-timing",
          "DOMT --family ladder:4 --no-timing", "spectrum --family complete:4 --no-timing"}) {
        auto one = run_cli(std::string(cmd) + " --workers 1");
        auto four = run_cli(std::string(cmd) + " --workers 4");
        CHECK(one.exit_code == four.exit_code);
        CHECK(one.output == four.output);
        auto again = run_cli(std::string(cmd) + " --workers 4");
        CHECK(four.output == again.output);
    }
}

TEST_CASE("environment variables configure the run") {
    // cycle:6 has 6 edges, fine by default but blocked once the env var
    // lowers the cap
    CHECK(run_cli("domt --family cycle:6 --no-timing").exit_code == 0);
    std::string command = std::string("ORIENTDOM_EDGE_CAP=5 ") + ORIENTDOM_CLI_PATH +
                          " domt --family cycle:6 --no-timing 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::string output;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 3);
}

TEST_CASE("scan writes json lines, a summary, and a resumable cursor") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "orientdom_cli_scan";
    fs::remove_all(dir);
    auto r = run_cli("scan exhaustive:4 --checks obs-girth-bounds --output-dir " + dir.string() +
                     " --no-timing");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line, last;
    long long outcome_lines = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        last = line;
        if (j.contains("checkId")) {
            ++outcome_lines;
            CHECK(j["status"] != "refuted");
            CHECK(j.contains("paperAnchor"));
        }
    }
    CHECK(outcome_lines == 10);
    auto summary = nlohmann::json::parse(last);
    CHECK(summary["summary"] == true);
    CHECK(summary["cursor"] == 10);
    CHECK(fs::exists(dir / "scan.cursor"));

    // resuming re-processes nothing
    auto again = run_cli("scan exhaustive:4 --checks obs-girth-bounds --output-dir " + dir.string() +
                         " --resume --no-timing");
    CHECK(again.exit_code == 0);
    auto last_line = again.output.substr(again.output.rfind('\n', again.output.size() - 2) + 1);
    CHECK(nlohmann::json::parse(last_line)["graphs"] == 0);
    fs::remove_all(dir);
}

TEST_CASE("text format is a fixed-width table") {
    auto r = run_cli("domt --family wheel:4 --format text --no-timing");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("quantity") == 0);
    CHECK(r.output.find("value") != std::string::npos);
    CHECK(r.output.find("3") != std::string::npos);
}
