#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string g_cli;  // path to the numrange binary, last command-line argument

struct CmdResult {
    std::string out;
    int exit_code = -1;
};

CmdResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/numrange_test_") + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("radius subcommand golden outputs and exit codes") {
    CmdResult r = run("radius 0 1 0 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["w"].get<double>() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(j["method"] == "DiskFast");

    r = run("radius 1 0 0 2");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["w"].get<double>() == doctest::Approx(2.0));
    CHECK(j["method"] == "SegmentFast");

    r = run("radius 1 1 0 0 --check");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["w"].get<double>() == doctest::Approx(1.2071067811865475).epsilon(1e-9));
    CHECK(j.contains("oracle_w"));
    CHECK(j["abs_err"].get<double>() <= 1e-6);

    r = run("radius 1 bogus 0 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("radius --input reads a JSON record") {
    const std::string path = temp_path("radius.json");
    {
        std::ofstream f(path);
        f << R"({"id":"jordan","matrix":[["0","1"],["0","0"]]})";
    }
    const CmdResult r = run("radius --input " + path);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["id"] == "jordan");
    CHECK(j["w"].get<double>() == doctest::Approx(0.5));
    std::remove(path.c_str());
}

TEST_CASE("boundary csv has the right header, row count and grid") {
    const CmdResult r = run("boundary 0 1 0 0 --samples 4 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,x,y");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double t, x, y;
        ls >> t >> x >> y;
        rows.push_back({t, x, y});
    }
    REQUIRE(rows.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(rows[k][0] == doctest::Approx(2.0 * M_PI * k / 4));
        // Circle of radius 1/2 around the origin.
        CHECK(std::hypot(rows[k][1], rows[k][2]) == doctest::Approx(0.5));
    }
}

TEST_CASE("boundary svg is byte-stable and well formed") {
    const CmdResult a = run("boundary 1 1 0 0 --format svg");
    const CmdResult b = run("boundary 1 1 0 0 --format svg");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("<?xml", 0) == 0);
    CHECK(a.out.find("<svg ") != std::string::npos);
    CHECK(a.out.find("<path ") != std::string::npos);
    CHECK(a.out.find("<circle ") != std::string::npos);
    CHECK(a.out.find("</svg>") != std::string::npos);

    // Scalar matrix: degenerate single-point path still renders.
    const CmdResult p = run("boundary 5 0 0 5 --format svg");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("<path ") != std::string::npos);
}

TEST_CASE("batch preserves order, reports failures, honors --jobs") {
    const std::string path = temp_path("batch.jsonl");
    {
        std::ofstream f(path);
        f << R"({"id":"a","matrix":[["0","1"],["0","0"]]})" << "\n";
        f << R"({"id":"b","matrix":[["1","0"],["0","2"]]})" << "\n";
        f << R"({"id":"c","matrix":[["1","1"],["0","0"]]})" << "\n";
    }
    for (const char* jobs : {"1", "4"}) {
        const CmdResult r = run("batch --input " + path + " --check --jobs " + jobs);
        CHECK(r.exit_code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::vector<json> recs;
        while (std::getline(in, line)) recs.push_back(json::parse(line));
        REQUIRE(recs.size() == 3);
        CHECK(recs[0]["id"] == "a");
        CHECK(recs[1]["id"] == "b");
        CHECK(recs[2]["id"] == "c");
        CHECK(recs[2]["w"].get<double>() == doctest::Approx(1.2071067811865475).epsilon(1e-9));
        for (const auto& rec : recs) CHECK(rec["abs_err"].get<double>() <= 1e-6);
    }

    // Malformed line: error record plus exit 4.
    {
        std::ofstream f(path, std::ios::app);
        f << "{not json}\n";
    }
    const CmdResult bad = run("batch --input " + path);
    CHECK(bad.exit_code == 4);
    std::istringstream in(bad.out);
    std::string line;
    std::vector<json> recs;
    while (std::getline(in, line)) recs.push_back(json::parse(line));
    REQUIRE(recs.size() == 4);
    CHECK(recs[3].contains("error"));
    CHECK(recs[3]["line"] == 4);
    std::remove(path.c_str());
}

TEST_CASE("batch on an empty file emits nothing and exits 0") {
    const std::string path = temp_path("empty.jsonl");
    { std::ofstream f(path); }
    const CmdResult r = run("batch --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::remove(path.c_str());
}

TEST_CASE("bench is deterministic for a fixed seed") {
    const CmdResult a = run("bench --n 50 --seed 7");
    const CmdResult b = run("bench --n 50 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["n"] == 50);
    CHECK(j["max_abs_err"].get<double>() <= 1e-6);

    const CmdResult z = run("bench --n 0");
    CHECK(z.exit_code == 0);
    CHECK(json::parse(z.out)["n"] == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <path-to-numrange-binary>\n");
        return 1;
    }
    g_cli = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
