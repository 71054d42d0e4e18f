#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using std::string;

namespace {

struct RunResult {
    int status = -1;
    string out;
};

RunResult run_cli(const string& args) {
    const string cmd = string(CODIMLAB_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const string& hay, const string& needle) {
    return hay.find(needle) != string::npos;
}

} // namespace

TEST_CASE("codim subcommand prints one row per degree") {
    const auto r = run_cli("codim --m 2 --d 1 --word periodic:0 --n 4");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "n,c_n"));
    CHECK(contains(r.out, "\n1,1,"));
    CHECK(contains(r.out, "\n2,2,"));
    CHECK(contains(r.out, "\n3,6,"));
    CHECK(contains(r.out, "\n4,12,"));
    CHECK(contains(r.out, "# codimlab"));
    CHECK(contains(r.out, "model="));
    CHECK(contains(r.out, "seed="));
}

TEST_CASE("lemma-check L3 passes with the closed form") {
    const auto r = run_cli("lemma-check L3 --a 2");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "result,pass"));
    CHECK(contains(r.out, "0.66666666666666"));  // t* = 2/3
}

TEST_CASE("invalid parameters exit with status 2 and an error JSON") {
    const auto r = run_cli("codim --m 1 --d 1 --word periodic:0 --n 3");
    CHECK(r.status == 2);
    CHECK(contains(r.out, "\"error\":\"InvalidParams\""));
}

TEST_CASE("cap overruns exit with status 3") {
    const auto r = run_cli("codim --m 2 --d 1 --word periodic:0 --n 12");
    CHECK(r.status == 3);
    CHECK(contains(r.out, "CapExceeded"));
}

TEST_CASE("runs are byte-identical for a fixed seed") {
    const string args = "cocharacter --m 2 --d 1 --word periodic:0 --n 3 --seed 7";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    // and the seed is recorded in the banner
    CHECK(contains(a.out, "seed=7"));
}

TEST_CASE("words subcommand emits (op, n, value) rows") {
    const auto r = run_cli("words --word mechanical:1/2 --n-max 3 --prefix 6");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "op,n,value"));
    CHECK(contains(r.out, "complexity,3,2"));
    CHECK(contains(r.out, "slope,,1/2"));
    CHECK(contains(r.out, "prefix,6,"));
}

TEST_CASE("scan subcommand returns a realizable q") {
    const auto r = run_cli("scan --gamma 2.5 --eps 1e-4");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "gamma,eps,m,d,q"));
    CHECK(contains(r.out, "5/2,1/10000,"));
}

TEST_CASE("witness subcommand reports the evaluated image") {
    const auto r = run_cli("witness --m 2 --d 1 --word periodic:0 --t 1");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "degree,3"));
    CHECK(contains(r.out, "terms,6"));
    CHECK(contains(r.out, "image,\"z(1,1,2) * 1\""));
}

TEST_CASE("config file sets defaults and flags win") {
    const string cfg_path = "/tmp/codimlab_test_config.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"seed": 42, "precision": 96})";
    }
    const auto defaults = run_cli("--config " + cfg_path + " phi --partition 2,1");
    CHECK(defaults.status == 0);
    CHECK(contains(defaults.out, "seed=42"));
    CHECK(contains(defaults.out, "precision=96"));
    const auto overridden =
        run_cli("--config " + cfg_path + " --seed 5 phi --partition 2,1");
    CHECK(overridden.status == 0);
    CHECK(contains(overridden.out, "seed=5"));
    CHECK(contains(overridden.out, "precision=96"));
}

TEST_CASE("model descriptor files are accepted") {
    const string model_path = "/tmp/codimlab_test_model.json";
    {
        std::ofstream model(model_path);
        model << R"({"m":2,"d":1,"word":{"kind":"periodic","pattern":"01"},)"
              << R"("flavor":"periodic-wrap","unital":false})";
    }
    const auto r = run_cli("codim --model " + model_path + " --n 4");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\n4,20,"));  // frozen wrap value for 01
}

TEST_CASE("json report mirrors the CSV") {
    const string json_path = "/tmp/codimlab_test_report.json";
    const auto r = run_cli("cocharacter --m 2 --d 1 --word periodic:0 --n 2 --json " +
                           json_path);
    CHECK(r.status == 0);
    std::ifstream in(json_path);
    REQUIRE(in.good());
    string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(text, "\"c_n\": 2"));
    CHECK(contains(text, "\"l_n\": 2"));
    CHECK(contains(text, "\"lambda\": \"1,1\""));
}
