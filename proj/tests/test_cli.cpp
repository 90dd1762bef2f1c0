// Integration tests that drive the installed CLI binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <superjack/json_io.hpp>

using namespace superjack;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SUPERJACK_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string fresh_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("superjack-cli-" + tag);
    std::filesystem::remove_all(dir);
    return dir.string();
}

}  // namespace

TEST_CASE("jack command emits the monomial expansion") {
    const auto res = run_cli("jack --lambda 1,1 --cache-dir " + fresh_dir("jack"));
    CHECK(res.status == 0);
    CHECK(res.out == to_json(jack(Partition{1, 1})) + "\n");
}

TEST_CASE("superjack command matches the library") {
    const auto res = run_cli("superjack --n 1 --m 1 --lambda 2 --cache-dir " + fresh_dir("sj"));
    CHECK(res.status == 0);
    CHECK(res.out == to_json(super_jack(Partition{2}, 1, 1).poly) + "\n");
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string dir = fresh_dir("det");
    const std::string cmd = "gram --n 1 --m 1 --degree 2 --cache-dir " + dir;
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("warm and cold caches give identical results") {
    const std::string dir = fresh_dir("warm");
    const std::string cmd = "superjack --n 2 --m 1 --lambda 2,1 --cache-dir " + dir;
    const auto cold = run_cli(cmd);
    CHECK(cold.status == 0);
    int entries = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        (void)e;
        ++entries;
    }
    CHECK(entries > 0);
    const auto warm = run_cli(cmd);
    CHECK(warm.out == cold.out);

    SUBCASE("corrupted entries are recomputed, not trusted") {
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
            std::ofstream(e.path()) << "garbage";
        }
        const auto again = run_cli(cmd);
        CHECK(again.status == 0);
        CHECK(again.out == cold.out);
    }
}

TEST_CASE("the environment variable overrides the cache flag") {
    const std::string env_dir = fresh_dir("envdir");
    const std::string flag_dir = fresh_dir("flagdir");
    setenv("SUPERJACK_CACHE_DIR", env_dir.c_str(), 1);
    const auto res = run_cli("jack --lambda 2 --cache-dir " + flag_dir);
    unsetenv("SUPERJACK_CACHE_DIR");
    CHECK(res.status == 0);
    CHECK(std::filesystem::exists(env_dir));
    CHECK(!std::filesystem::exists(flag_dir));
}

TEST_CASE("csv output") {
    const auto res = run_cli("jack --lambda 2 --format csv --cache-dir " + fresh_dir("csv"));
    CHECK(res.status == 0);
    CHECK(res.out.rfind("partition,coeff\n", 0) == 0);
    CHECK(res.out.find("\"1,1\"") != std::string::npos);
}

TEST_CASE("rational theta specializes the output") {
    const auto res = run_cli("superjack --n 1 --m 1 --lambda 2 --theta 2 --cache-dir " + fresh_dir("theta2"));
    CHECK(res.status == 0);
    // x^2 - 2xy/(1+theta) at theta=2 -> coefficient -2/3
    CHECK(res.out.find("-2/3") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("excluded theta is a domain error") {
        const auto res = run_cli("superjack --n 1 --m 1 --lambda 2 --theta 1 --cache-dir " + fresh_dir("ex1"));
        CHECK(res.status == 1);
        CHECK(res.out.find("excluded-parameter") != std::string::npos);
    }
    SUBCASE("malformed partitions are usage errors") {
        const auto res = run_cli("jack --lambda 1,2 --cache-dir " + fresh_dir("ex2"));
        CHECK(res.status == 2);
    }
    SUBCASE("unknown commands are usage errors") {
        CHECK(run_cli("frobnicate").status == 2);
    }
    SUBCASE("missing required flags are usage errors") {
        CHECK(run_cli("gram --n 1 --m 1").status == 2);
    }
}

TEST_CASE("check commands succeed at small scope") {
    const auto kernel = run_cli("kernel-check --n 1 --m 1 --degree 3 --cache-dir " + fresh_dir("kc"));
    CHECK(kernel.status == 0);
    CHECK(kernel.out.find("\"pass\":true") != std::string::npos);

    const auto repr = run_cli("reproducing-check --n 1 --m 1 --degree 2 --cache-dir " + fresh_dir("rc"));
    CHECK(repr.status == 0);

    const auto bound = run_cli("bound-check --n 1 --m 1 --degree 2 --theta 2 --cache-dir " + fresh_dir("bc"));
    CHECK(bound.status == 0);

    const auto eigen = run_cli("eigen --n 1 --m 1 --lambda 2 --degree 2 --cache-dir " + fresh_dir("ei"));
    CHECK(eigen.status == 0);
    CHECK(eigen.out.find("\"eigenvalues\"") != std::string::npos);

    const auto hgram = run_cli("hermite-gram --n 1 --m 1 --degree 1 --cache-dir " + fresh_dir("hg"));
    CHECK(hgram.status == 0);
    CHECK(hgram.out.find("superhermite") != std::string::npos);
}
