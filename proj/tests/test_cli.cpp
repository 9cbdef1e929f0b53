// End-to-end checks of the command-line surface: spawns the real binary
// (path in CONELAB_BIN) and inspects stdout, exit codes and determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string binary_path() {
    const char* env = std::getenv("CONELAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CONELAB_BIN must point at the CLI binary");
    return env;
}

std::string scratch_file(const std::string& name, const std::string& content) {
    const std::string dir = "/tmp/conelab_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

// Runs the binary with `args`, capturing stdout; stderr is dropped.
RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        cmd += " < " + scratch_file("stdin.json", stdin_text);
    }
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("rank of the orthant document") {
    const auto cat = run("catalog --kind orthant --n 4");
    REQUIRE(cat.exit_code == 0);
    const auto res = run("rank --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["beta"] == 4);
    CHECK(j["n"] == 4);
    CHECK(j["pairs"] == 12);
}

TEST_CASE("decompose reports irreducibility of the eight-ray cone") {
    const auto cat = run("catalog --kind qpn --n 4 --p 3");
    REQUIRE(cat.exit_code == 0);
    const auto res = run("decompose --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["irreducible"] == true);
    CHECK(j["components"].size() == 1);
    CHECK(j["orthant_form"].is_null());
}

TEST_CASE("decompose reports the orthant form when there is one") {
    const auto cat = run("catalog --kind qpn --n 4 --p 2");
    const auto res = run("decompose --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["irreducible"] == false);
    CHECK(j["components"].size() == 4);
    CHECK(j["orthant_form"]["a"] == "-2");
    CHECK(j["orthant_form"]["b"] == "1");
}

TEST_CASE("extreme rays via a pipe") {
    const auto cat = run("catalog --kind qpn --n 3 --p 2");
    const auto res = run("extreme --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j["rays"].size() == 3);
    CHECK(j["rays"][0] == json::parse(R"(["-1","1","1"])"));
    CHECK(j["rays"][2] == json::parse(R"(["1","1","-1"])"));
}

TEST_CASE("dual of the orthant is itself") {
    const auto cat = run("catalog --kind orthant --n 3");
    const auto res = run("dual --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["dim"] == 3);
    CHECK(j["generators"] == j["inequalities"]);
}

TEST_CASE("check-perm") {
    const auto cat = run("catalog --kind qpn --n 4 --p 3");
    const auto res = run("check-perm --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["permutation_invariant"] == true);
    CHECK(j["ones_axis"] == "PlusOne");
}

TEST_CASE("ll-basis emits string-rational matrices") {
    const auto cat = run("catalog --kind orthant --n 3");
    const auto res = run("ll-basis --input -", cat.out);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["beta"] == 3);
    CHECK(j["n"] == 3);
    REQUIRE(j["basis"].size() == 3);
    CHECK(j["basis"][0][0][0].is_string());
}

TEST_CASE("orbit catalog via a seeds file") {
    const std::string seeds = scratch_file("seeds.json", R"([["-1","1","1"]])");
    const auto cat = run("catalog --kind orbit --seeds " + seeds);
    REQUIRE(cat.exit_code == 0);
    const json j = json::parse(cat.out);
    CHECK(j["dim"] == 3);
    CHECK(j["generators"].size() == 3);
}

TEST_CASE("direct-sum catalog via a two-document array") {
    const auto o1 = run("catalog --kind orthant --n 1");
    const auto o2 = run("catalog --kind orthant --n 2");
    const std::string both =
        scratch_file("sum.json", "[" + o1.out.substr(0, o1.out.size() - 1) + "," +
                                     o2.out.substr(0, o2.out.size() - 1) + "]");
    const auto res = run("catalog --kind direct-sum --input " + both);
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["dim"] == 3);
    CHECK(j["generators"].size() == 3);
}

TEST_CASE("spectral-verify reports zero violations on the known pair") {
    const auto res =
        run("spectral-verify --m 3 --a -1 --b 1 --samples 100 --seed 7 --tol 1e-9");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["forward_pass"] == 100);
    CHECK(j["backward_pass"] == 100);
    CHECK(j["samples"] == 100);
}

TEST_CASE("verify-theorems over a small range exits zero") {
    const auto res = run("verify-theorems --n-range 2..3 --samples 4 --seed 99");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j.is_array());
    CHECK(j.size() > 0);
    for (const auto& row : j) CHECK(row["pass"] == true);
}

TEST_CASE("output is byte-for-byte deterministic") {
    const auto a = run("catalog --kind random-simplicial --n 4 --seed 123");
    const auto b = run("catalog --kind random-simplicial --n 4 --seed 123");
    CHECK(a.out == b.out);
    const auto ra = run("rank --input -", a.out);
    const auto rb = run("rank --input -", b.out);
    CHECK(ra.out == rb.out);
    const auto va = run("verify-theorems --n-range 2..2 --samples 3 --seed 5");
    const auto vb = run("verify-theorems --n-range 2..2 --samples 3 --seed 5");
    CHECK(va.out == vb.out);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run("dual --input -", "this is not json").exit_code == 2);
    CHECK(run("dual --input -", R"({"dim":0,"generators":[]})").exit_code == 2);
    CHECK(run("dual --input /nonexistent/file.json").exit_code == 2);
    CHECK(run("catalog --kind nonsense --n 3").exit_code == 2);
    CHECK(run("rank --input -", R"({"dim":2,"inequalities":[["1","1"]]})").exit_code ==
          2);  // not proper
    CHECK(run("extreme --input -", R"({"dim":2,"inequalities":[["1","1"]]})")
              .exit_code == 2);  // not pointed
    CHECK(run("spectral-verify --m 3 --a 1 --b 1").exit_code == 2);  // singular pair
    CHECK(run("verify-theorems --n-range bogus").exit_code == 2);
}
