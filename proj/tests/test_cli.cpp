// End-to-end checks of the certidom binary: exit codes, output stability,
// and the documented formats. The binary path comes from the build system.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = {}) {
    std::string cmd = (env.empty() ? std::string() : env + " ") + CERTIDOM_TOOL_PATH + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("compute prints the documented JSON and values") {
    RunResult r = run("compute --family path:7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["graph"]["n"] == 7);
    REQUIRE(j["results"].size() == 4);
    CHECK(j["results"][0]["kind"] == "gamma");
    CHECK(j["results"][0]["value"] == 3);
    CHECK(j["results"][1]["kind"] == "gamma_cer");
    CHECK(j["results"][1]["value"] == 3);
    CHECK(j["results"][2]["kind"] == "upper_gamma");
    CHECK(j["results"][2]["value"] == 4);
    CHECK(j["results"][3]["kind"] == "upper_gamma_cer");
    CHECK(j["results"][3]["value"] == 3);
    CHECK(j["results"][0]["witness"].is_array());
    CHECK(j["results"][0]["n"] == 7);
}

TEST_CASE("compute star and edge-list inputs") {
    RunResult star = run("compute --family star:4 --invariants gamma,upper_gamma");
    REQUIRE(star.exit_code == 0);
    auto j = nlohmann::json::parse(star.out);
    CHECK(j["results"][0]["value"] == 1);
    CHECK(j["results"][1]["value"] == 4);

    RunResult k2 = run("compute --edges \"2 1\\n0 1\"");
    REQUIRE(k2.exit_code == 0);
    auto k = nlohmann::json::parse(k2.out);
    CHECK(k["results"][0]["value"] == 1);  // gamma
    CHECK(k["results"][1]["value"] == 2);  // gamma_cer
    CHECK(k["results"][2]["value"] == 1);  // upper gamma
    CHECK(k["results"][3]["value"] == 2);  // upper gamma_cer
}

TEST_CASE("identical invocations give byte-identical output") {
    RunResult a = run("compute --family cycle:9");
    RunResult b = run("compute --family cycle:9");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult v1 = run("verify --theorems gap-law,thm-3.2 --enumerate 4 --jobs 1");
    RunResult v2 = run("verify --theorems gap-law,thm-3.2 --enumerate 4 --jobs 2");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run("compute --graph6 '!!!'").exit_code == 2);          // parse error
    CHECK(run("compute --family path:3 --edges \"1 0\"").exit_code == 2);  // two sources
    CHECK(run("compute").exit_code == 2);                          // no source
    CHECK(run("compute --family path:21").exit_code == 3);         // above the gamma limit
    CHECK(run("compute --family path:21 --invariants gamma --force").exit_code == 0);
    CHECK(run("verify --theorems nonsense --enumerate 3").exit_code == 2);
    CHECK(run("verify --theorems gap-law --enumerate 3").exit_code == 0);
    CHECK(run("verify --theorems gap-law --enumerate 9").exit_code == 2);  // enumerator cap
    CHECK(run("census --enumerate 3").exit_code == 0);
}

TEST_CASE("CERTIDOM_MAX_N moves the enumerator cap") {
    RunResult lowered = run("verify --theorems gap-law --enumerate 4", "CERTIDOM_MAX_N=3");
    CHECK(lowered.exit_code == 2);
    RunResult allowed = run("verify --theorems gap-law --enumerate 4", "CERTIDOM_MAX_N=4");
    CHECK(allowed.exit_code == 0);
}

TEST_CASE("verify all theorems over connected graphs up to order 5") {
    RunResult r = run("verify --theorems all --enumerate 5 --connected --jobs 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["failed_total"] == 0);
    CHECK(j["config"]["source"]["connected_only"] == true);
}

TEST_CASE("classify output") {
    RunResult r = run("classify --family corona:cycle:3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["label"] == "Corona");

    RunResult p4 = run("classify --family path:4");
    auto jp = nlohmann::json::parse(p4.out);
    CHECK(jp["label"] == "Corona");
    CHECK(jp["p4_free"] == false);

    RunResult c4 = run("classify --family cycle:4");
    auto jc = nlohmann::json::parse(c4.out);
    CHECK(jc["label"] == "JoinK2bar");
    CHECK(jc["p4_free"] == true);
}

TEST_CASE("construct commands") {
    RunResult s2 = run("construct --two-subdivision --family cycle:3");
    REQUIRE(s2.exit_code == 0);
    CHECK(s2.out.substr(0, 4) == "9 9\n");
    CHECK(s2.out.find("labels:") != std::string::npos);
    CHECK(s2.out.find("0 -> (0,1)") != std::string::npos);

    RunResult k2 = run("construct --corona-k1 --family complete:1");
    CHECK(k2.out.substr(0, 4) == "2 1\n");

    // order law for a P-corona read from a partition file
    std::string file = std::string(CERTIDOM_TOOL_PATH) + ".partitions.txt";
    {
        std::ofstream out(file);
        out << "0: {1}\n1: {0}|{2}\n2: {1}\n";
    }
    RunResult pc = run("construct --p-corona --family path:3 --partitions " + file);
    REQUIRE(pc.exit_code == 0);
    CHECK(pc.out.substr(0, 2) == "7 ");  // order 3 + 4 blocks

    {
        std::ofstream out(file);
        out << "0: {1}\n1: {0}\n2: {1}\n";  // vertex 2 missing from P(1)
    }
    RunResult bad = run("construct --p-corona --family path:3 --partitions " + file);
    CHECK(bad.exit_code == 2);
    std::remove(file.c_str());
}

TEST_CASE("verify JSON carries counters and config echo") {
    RunResult r = run("verify --theorems thm-2.1 --enumerate 4 --seed 7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["config"]["source"]["kind"] == "enumerate");
    CHECK(j["results"]["thm-2.1"]["failed"] == 0);
    CHECK(j["failed_total"] == 0);
}

TEST_CASE("census tsv") {
    RunResult r = run("census --enumerate 3 --format tsv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("gamma\tGamma\tgamma_cer\tGamma_cer\tcount\twitness", 0) == 0);
    CHECK(r.out.find("# chain1") != std::string::npos);
}
