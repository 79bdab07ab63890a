#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/knotforge_cli_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = temp_path(".out");
    std::string cmd = std::string(KNOTFORGE_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::ostringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    int code = -1;
    if (rc != -1 && WIFEXITED(rc)) code = WEXITSTATUS(rc);
    return {code, ss.str()};
}

} // namespace

TEST_CASE("cli build emits a diagram and honors exit codes") {
    RunResult r = run_cli("build --n 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"crossings\"") != std::string::npos);

    CHECK(run_cli("build --n 0").exit_code == 2);
    CHECK(run_cli("build --n 2 --format nope").exit_code == 2);
    CHECK(run_cli("totally-not-a-command").exit_code == 2);

    RunResult dt = run_cli("build --n 2 --format dt");
    CHECK(dt.exit_code == 0);
    std::istringstream is(dt.out);
    int v, count = 0;
    while (is >> v) {
        CHECK(v % 2 == 0);
        ++count;
    }
    CHECK(count == 25);  // one even integer per crossing of L_2
}

TEST_CASE("cli census") {
    RunResult r = run_cli("census --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"count\":512") != std::string::npos);
}

TEST_CASE("cli oracle") {
    RunResult r = run_cli("oracle --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"agree\":true") != std::string::npos);
}

TEST_CASE("cli verify small sweep") {
    RunResult r = run_cli("verify --n-max 2 --oracle-n-max 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("cli rejects a corrupted tile file") {
    std::string path = temp_path(".json");
    {
        std::ifstream src(KNOTFORGE_TILE_FILE_PATH);
        std::ostringstream ss;
        ss << src.rdbuf();
        std::string text = ss.str();
        text.insert(text.find("fig1b"), " ");
        std::ofstream dst(path);
        dst << text;
    }
    RunResult r = run_cli("--tile-file " + path + " build --n 1");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("hash mismatch") != std::string::npos);

    // the environment override hits the same guard
    std::string out_file = temp_path(".out");
    std::string cmd = "KNOTFORGE_TILE_FILE=" + path + " " + KNOTFORGE_CLI_PATH +
                      " build --n 1 > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK((rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 3));
    std::remove(out_file.c_str());
    std::remove(path.c_str());
}

TEST_CASE("cli verify is deterministic across job counts") {
    RunResult serial = run_cli("verify --n-max 3 --oracle-n-max 2 --jobs 1");
    RunResult parallel = run_cli("verify --n-max 3 --oracle-n-max 2 --jobs 2");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("cli verify report schema is stable") {
    RunResult r = run_cli("verify --n-max 1 --oracle-n-max 0");
    REQUIRE(r.exit_code == 0);
    for (const char* key :
         {"\"schema_version\"", "\"n_max\"", "\"rows\"", "\"n\"", "\"crossings\"", "\"knot\"",
          "\"alternating\"", "\"special\"", "\"reduced\"", "\"prime\"", "\"chi\"", "\"genus\"",
          "\"graph_components\"", "\"census_count\"", "\"alexander_span\"", "\"determinant\"",
          "\"oracle_agree\"", "\"pass\"", "\"all_pass\""}) {
        INFO("missing key ", key);
        CHECK(r.out.find(key) != std::string::npos);
    }
}

TEST_CASE("cli invariants reports a non-special diagram") {
    std::string path = temp_path(".txt");
    {
        std::ofstream f(path);
        f << "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
    }
    RunResult r = run_cli("invariants " + path + " --format pd");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"special\":false") != std::string::npos);
    CHECK(r.out.find("\"determinant\":\"5\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli invariants on a user file") {
    std::string path = temp_path(".txt");
    {
        std::ofstream f(path);
        f << "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
    }
    RunResult r = run_cli("invariants " + path + " --format pd");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"genus\":1") != std::string::npos);
    CHECK(r.out.find("\"determinant\":\"3\"") != std::string::npos);
    CHECK(r.out.find("\"alternating\":true") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run_cli("invariants /nonexistent.json").exit_code == 2);
}
