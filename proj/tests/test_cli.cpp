// End-to-end checks of the command-line tool: exit codes, output formats,
// JSON payloads, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(LACET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kRefArgs = "1 4 5 6 5 4 3 8 7 3 2 1 2 8 7 6";

} // namespace

TEST_CASE("analyze with a coloring reproduces the reference tables") {
    const RunResult r = run("analyze " + kRefArgs + " --gamma 00111011");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "i(1) = {2,6,7,8}"));
    CHECK(contains(r.out, "c(3) = {3,7,8}"));
    CHECK(contains(r.out, "c~(4) = {6}"));
    CHECK(contains(r.out, "b(1) = {2,4,5,6,7,8}"));
    CHECK(contains(r.out, "b(3) = {}"));
    CHECK(contains(r.out, "connectivity: 2"));
    CHECK(contains(r.out, "surface: klein_bottle"));
    CHECK(contains(r.out, "orientable: false"));
}

TEST_CASE("analyze accepts compact digit codes") {
    const RunResult spaced = run("analyze " + kRefArgs);
    const RunResult compact = run("--compact analyze 1456543873212876");
    CHECK(spaced.exit_code == 0);
    CHECK(compact.exit_code == 0);
    // identical except the echoed raw code line
    const auto strip = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    CHECK(strip(spaced.out) == strip(compact.out));
}

TEST_CASE("analyze input errors exit 2") {
    CHECK(run("analyze 1 2 1").exit_code == 2);
    CHECK(run("analyze " + kRefArgs + " --gamma 01").exit_code == 2);
    CHECK(run("analyze " + kRefArgs + " --gamma 0011101x").exit_code == 2);
    CHECK(run("analyze").exit_code == 2);
}

TEST_CASE("klein realizable output and JSON payload") {
    const RunResult r = run("--json klein " + kRefArgs);
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["status"] == "realizable");
    CHECK(out["affine_dim"] == 4);
    CHECK(out["solution_count"] == 16);
    CHECK(out["verified_count"] == 4);
    CHECK(out["m"] == 17);
    bool found = false;
    for (const auto& s : out["solutions"]) {
        if (s["gamma"] == "00111011" && s["delta"] == "10011000") {
            found = true;
            CHECK(s["surface"] == "klein_bottle");
            CHECK(s["verified"] == true);
            CHECK(s["partition"]["O0"] == json::array({2, 6, 7, 8}));
            CHECK(s["partition"]["O1"] == json::array({4, 5}));
            CHECK(s["partition"]["E0"] == json::array({3}));
            CHECK(s["partition"]["E1"] == json::array({1}));
        }
    }
    CHECK(found);
}

TEST_CASE("klein not realizable exits 1 with a verified certificate") {
    const RunResult r = run("--json klein 1 2 1 3 2 4 3 5 4 5");
    CHECK(r.exit_code == 1);
    const json out = json::parse(r.out);
    CHECK(out["status"] == "not_realizable");
    CHECK(out["certificate_verified"] == true);
    CHECK(out["certificate_rows"].size() > 0);
}

TEST_CASE("klein on the two-crossing code lists both surfaces") {
    const RunResult r = run("klein 1 2 1 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "surface=projective_plane"));
    CHECK(contains(r.out, "surface=klein_bottle"));
}

TEST_CASE("klein --dump-system emits the matrix format") {
    const RunResult r = run("klein 1 2 1 2 --dump-system");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "system:\n1 2\n1111\n0\n1 2 I3\n"));
}

TEST_CASE("klein --max-enum exits 3 when the solution space is too big") {
    // no restrictions at all: dimension 2n = 6
    const RunResult r = run("klein 1 1 2 2 3 3 --max-enum 32");
    CHECK(r.exit_code == 3);
}

TEST_CASE("klein output is byte-identical across runs") {
    const RunResult a = run("--json klein " + kRefArgs);
    const RunResult b = run("--json klein " + kRefArgs);
    CHECK(a.out == b.out);
}

TEST_CASE("conn2") {
    const RunResult r = run("conn2 1 2 1 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "min_connectivity: 1"));
    CHECK(contains(r.out, "witness: 00"));
    CHECK(contains(r.out, "surface: projective_plane"));

    const RunResult tiny = run("--json conn2 1 1");
    CHECK(tiny.exit_code == 0);
    CHECK(json::parse(tiny.out)["min_connectivity"] == 0);

    // exhaustive sweep over all 256 colorings of the reference code
    const RunResult ref = run("--json conn2 " + kRefArgs);
    CHECK(ref.exit_code == 0);
    const json r8 = json::parse(ref.out);
    CHECK(r8["min_connectivity"] == 2);
    CHECK(r8["witness"] == "00111011");
    CHECK(r8["surface"] == "klein_bottle");

    CHECK(run("--limit 4 conn2 " + kRefArgs).exit_code == 3);
}

TEST_CASE("quad exports ANF and solves fixed colorings") {
    const RunResult anf = run("quad 1 2 1 2 -p 1");
    CHECK(anf.exit_code == 0);
    CHECK(contains(anf.out, "# n=2 p=1 vars=6"));
    CHECK(contains(anf.out, "g1 + g2 + d2_1*e1_1 + 1 = 0"));

    const RunResult solved = run("--json quad " + kRefArgs + " -p 2 --gamma 00111011");
    CHECK(solved.exit_code == 0);
    const json s = json::parse(solved.out);
    CHECK(s["status"] == "ok");
    CHECK(s["equations"] == 64);
    CHECK(s["variables"] == 40);
    CHECK(s["violations"] == 0);
    CHECK(s["assignment"]["delta"].size() == 8);

    const RunResult over = run("quad " + kRefArgs + " -p 1 --gamma 00111011");
    CHECK(over.exit_code == 1);
    CHECK(contains(over.out, "rank_exceeds_p"));
    CHECK(contains(over.out, "rank 2"));
}

TEST_CASE("quad writes the ANF file when asked") {
    const std::string path = "/tmp/lacet_cli_test_anf.txt";
    const RunResult r = run("quad 1 1 -p 0 -o " + path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 256> buf;
    const std::size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    std::remove(path.c_str());
    CHECK(std::string(buf.data(), got) == "# n=1 p=0 vars=1\n0 = 0\n");
}

TEST_CASE("unknown flags and commands exit 2") {
    CHECK(run("frobnicate 1 1").exit_code == 2);
    CHECK(run("klein 1 1 --no-such-flag").exit_code == 2);
}
