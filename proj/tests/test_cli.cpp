#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef ARCNUM_CLI_PATH
#error "ARCNUM_CLI_PATH must point at the arcnum binary"
#endif

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& shell_command) {
    CmdResult result;
    FILE* pipe = popen(shell_command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe)) result.out += buffer.data();
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string cli() { return std::string(ARCNUM_CLI_PATH); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

}  // namespace

TEST_CASE("arcnum subcommand prints word and arc number") {
    const CmdResult r = run("printf 'AABBCC\\nABAB\\n' | " + cli() + " arcnum -");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"AABBCC\t3", "ABAB\t2"});
}

TEST_CASE("malformed lines go to stderr and set the exit code") {
    const CmdResult r = run("printf 'AAB\\nABAB\\n' | " + cli() + " arcnum - 2>/dev/null");
    CHECK(r.status == 1);
    CHECK(lines_of(r.out) == std::vector<std::string>{"ABAB\t2"});  // batch isolation

    const CmdResult diag =
        run("printf 'AAB\\n' | " + cli() + " arcnum - 2>&1 >/dev/null");
    CHECK(diag.out.find("malformed word") != std::string::npos);
    CHECK(diag.out.find("'B'") != std::string::npos);
}

TEST_CASE("json mode emits one record per line including errors") {
    const CmdResult r =
        run("printf 'AABBCC\\nAAB\\n' | " + cli() + " arcnum - --json 2>/dev/null");
    CHECK(r.status == 1);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);

    const nlohmann::json good = nlohmann::json::parse(lines[0]);
    CHECK(good["input"] == "AABBCC");
    CHECK(good["canonical"] == "AABBCC");
    CHECK(good["arcs"] == 3);
    CHECK_FALSE(good.contains("error"));

    const nlohmann::json bad = nlohmann::json::parse(lines[1]);
    CHECK(bad["input"] == "AAB");
    CHECK(bad.contains("error"));
    CHECK_FALSE(bad.contains("arcs"));
}

TEST_CASE("partition subcommand prints sorted cuts") {
    const CmdResult r = run("printf 'AABBCC\\nAA\\n\\n' | " + cli() + " partition -");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out) ==
          std::vector<std::string>{"AABBCC\t3 cuts=0,2,4", "AA\t2 cuts=0,1",
                                   "\t1 cuts=0"});
}

TEST_CASE("star subcommand prints witnesses and the no-star cases") {
    const CmdResult r = run("printf 'AABBCC\\nABCABC\\n\\nABCADCEDBE\\n' | " + cli() +
                            " star -");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out) ==
          std::vector<std::string>{
              "AABBCC\tt=1 a=1 chords=A,B,C", "ABCABC\tarc number 2: no star",
              "\tarc number 1", "ABCADCEDBE\tt=2 a=1 chords=A,D,B,C,E"});

    const CmdResult json_run =
        run("printf 'AABBCC\\n' | " + cli() + " star - --json");
    const nlohmann::json record = nlohmann::json::parse(lines_of(json_run.out).at(0));
    CHECK(record["witness"]["t"] == 1);
    CHECK(record["witness"]["a"] == 1);
    CHECK(record["witness"]["chords"] == nlohmann::json({"A", "B", "C"}));
    CHECK(record["witness"]["star"] == "AABBCC");
}

TEST_CASE("gen-star emits the star word") {
    CHECK(run(cli() + " gen-star 1 1").out == "AABBCC\n");
    CHECK(run(cli() + " gen-star 1 2").out == "AABBCCDD\n");
    CHECK(run(cli() + " gen-star 2 1").out == "ABCADCEDBE\n");
    CHECK(run(cli() + " gen-star 0 1 2>/dev/null").status != 0);
}

TEST_CASE("canon emits one canonical word per line") {
    const CmdResult r = run("printf 'BCCB\\nABAB\\n\\n' | " + cli() + " canon -");
    CHECK(r.status == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"AABB", "ABAB", ""});
}

TEST_CASE("render writes SVG with the requested overlays") {
    const CmdResult plain = run(cli() + " render AABBCC");
    CHECK(plain.status == 0);
    CHECK(plain.out.find("<svg") != std::string::npos);

    const CmdResult cuts = run(cli() + " render AABBCC --cuts");
    int ticks = 0;
    for (std::size_t at = cuts.out.find("class=\"cut\""); at != std::string::npos;
         at = cuts.out.find("class=\"cut\"", at + 1))
        ++ticks;
    CHECK(ticks == 3);

    const CmdResult empty = run(cli() + " render ''");
    CHECK(empty.status == 0);
    CHECK(empty.out.find("rim") != std::string::npos);
    CHECK(empty.out.find("chord") == std::string::npos);

    CHECK(run(cli() + " render ABAB --witness 2>/dev/null").status == 2);
}

TEST_CASE("bench prints a row per size with ratios after the first") {
    const CmdResult r = run(cli() + " bench --sizes 64,128 --runs 2 --seed 5");
    CHECK(r.status == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].find("n=64") != std::string::npos);
    CHECK(rows[0].find("ratio=") == std::string::npos);
    CHECK(rows[1].find("n=128") != std::string::npos);
    CHECK(rows[1].find("ratio=") != std::string::npos);
}

TEST_CASE("oracle-check cross-validates on demand") {
    const CmdResult r = run(cli() + " oracle-check --max-n 3 --random 50");
    CHECK(r.status == 0);
    CHECK(r.out.find("0 failure(s)") != std::string::npos);
}
