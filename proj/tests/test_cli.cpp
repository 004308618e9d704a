#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(STEREO_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("map prints the worked example") {
    RunResult r = run("map --case s1-iii 1/2");
    CHECK(r.status == 0);
    CHECK(r.out == "(2,2,-1)/3 height=3\n");
}

TEST_CASE("unmap inverts the worked example") {
    RunResult r = run("unmap --case s1-iii '(2,2,-1)/3'");
    CHECK(r.status == 0);
    CHECK(r.out == "1/2 k_height=4\n");
}

TEST_CASE("map handles infinity and sqrt2 forms") {
    CHECK(run("map --case s1-i 'inf'").out == "(0,1)/1 height=1\n");
    CHECK(run("map --case s1-i '3/(sqrt2*1)'").out == "(4,3)/5 height=5\n");
    CHECK(run("map --case s2-iii '(0+1*w)/1'").out == "(1,-1,1,1)/2 height=2\n");
}

TEST_CASE("markoff value lists") {
    // 11 solves the equation only as a y-value, so it is absent here even
    // though some published lists include it among the x-values
    CHECK(run("markoff --bound 30 --xs").out == "1 5 29\n");
    CHECK(run("markoff --bound 20 --ys").out == "1 3 11 17\n");
    RunResult triples = run("markoff --bound 30");
    CHECK(triples.out.find("(1,3,11)") != std::string::npos);
}

TEST_CASE("verify-phi succeeds deterministically") {
    RunResult a = run("verify-phi --case all --samples 60 --seed 7");
    CHECK(a.status == 0);
    RunResult b = run("verify-phi --case all --samples 60 --seed 7");
    CHECK(a.out == b.out);
}

TEST_CASE("json output is valid json everywhere") {
    for (const char* cmd :
         {"map --case s2-i '(1+1*w)/1' --json", "height --case s1-iii 2/3 --json",
          "markoff --bound 30 --json", "spectrum --case s2-iii --bound 10 --json",
          "figures --case all --json", "verify-phi --case s1-i --samples 5 --json",
          "horoball --case s1-i 'sqrt2*1/1' --json",
          "estimate-lagrange --bound 100 --json"}) {
        RunResult r = run(cmd);
        CHECK(r.status == 0);
        CHECK_NOTHROW((void)nlohmann::json::parse(r.out));
    }
}

TEST_CASE("graph exports parse and are thread independent") {
    RunResult a = run("graph --case s2-ii --bound 3 --format json --threads 1");
    RunResult b = run("graph --case s2-ii --bound 3 --format json --threads 3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("case") == "S2_II");
    RunResult dot = run("graph --case s1-i --bound 1 --format dot");
    CHECK(dot.out.find("--") != std::string::npos);
}

TEST_CASE("figures regenerate the drawn tables") {
    RunResult r = run("figures --case s1-i");
    CHECK(r.status == 0);
    CHECK(r.out.find("3/sqrt2\t3/(sqrt2*1)\t(4,3)/5") != std::string::npos);
    // byte-identical across runs
    CHECK(run("figures --case all").out == run("figures --case all").out);
}

TEST_CASE("spectrum csv has the table header") {
    RunResult r = run("spectrum --case s1-i --bound 30");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("value_sq,value,generator,case\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-command").status == 2);
    CHECK(run("map 1/2").status == 2);               // missing required --case
    CHECK(run("map --case nowhere 1/2").status == 2);
    CHECK(run("map --case s1-iii 'zzz'").status == 2);
    CHECK(run("graph --case s2-i --bound 1 --format svg-circles").status == 2);
}

TEST_CASE("--out writes the same bytes as stdout") {
    std::string path = "/tmp/stereo_cli_out_test.txt";
    std::remove(path.c_str());
    RunResult r = run("map --case s1-iii 1/2 --out " + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "(2,2,-1)/3 height=3\n");
    std::remove(path.c_str());
}

TEST_CASE("config file values are overridden by flags") {
    std::string cfg = "/tmp/stereo_cli_cfg_test.ini";
    std::string out1 = "/tmp/stereo_cli_cfg_a.txt", out2 = "/tmp/stereo_cli_cfg_b.txt";
    {
        std::ofstream f(cfg);
        f << "out=" << out1 << "\n";
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    // config alone routes output to out1
    RunResult a = run("map --case s1-iii 1/2 --config " + cfg);
    CHECK(a.status == 0);
    CHECK(slurp(out1) == "(2,2,-1)/3 height=3\n");
    // an explicit flag wins over the config value
    RunResult b = run("map --case s1-iii 1/2 --config " + cfg + " --out " + out2);
    CHECK(b.status == 0);
    CHECK(slurp(out2) == "(2,2,-1)/3 height=3\n");
    std::remove(cfg.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}
