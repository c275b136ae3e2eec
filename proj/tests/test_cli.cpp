// Golden runs of the command-line binary: exit-code contract and report
// determinism. The binary path is injected by the build as CLI_BIN.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string bin() { return std::string(CLI_BIN); }

int run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path work_dir() {
    auto d = fs::temp_directory_path() / "srk_cli_tests";
    fs::create_directories(d);
    return d;
}

std::string write(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_wall(const std::string& s) {
    std::stringstream in(s), out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("wall_ms") == std::string::npos) out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("exit codes follow the contract") {
    auto d = work_dir();
    // 2: malformed input
    auto empty = write(d / "empty.csv", "");
    CHECK(run("forward --g " + empty + " --alpha 1 --points 1") == 2);
    CHECK(run("specfun-eval --fn nosuch --args 1") == 2);
    CHECK(run("verify --suite nosuch") == 2);
    CHECK(run("inverse --alpha 1 --builtin-F bogus") == 2);
    // 3: domain violations (sector ops need alpha <= 2)
    CHECK(run("kernel-eval --alpha 3 --t 1 --points 0.5:0.2") == 3);
    auto gcsv = write(d / "g.csv", "tau,g_re\n0,1\n0.5,1\n1,1\n");
    CHECK(run("forward --g " + gcsv + " --alpha 3 --points 0.5:0.2 --out " +
              (d / "o1").string()) == 3);
    // 0: healthy runs
    CHECK(run("specfun-eval --fn gamma --args 2.5") == 0);
    CHECK(run("kernel-eval --alpha 2 --t 1 --points 1") == 0);
}

TEST_CASE("forward matches the transform anchor through the file interface") {
    auto d = work_dir();
    std::string csv = "tau,g_re\n";
    for (int i = 0; i <= 100; ++i) csv += std::to_string(i / 100.0) + ",1\n";
    auto g = write(d / "g101.csv", csv);
    auto out = (d / "fwd").string();
    CHECK(run("forward --g " + g + " --alpha 1 --t 1 --points 1 --op T --out " + out) ==
          0);
    const std::string got = slurp(fs::path(out) / "forward.csv");
    // header + one row; u should be erfc(1/2) ~ 0.4795001
    CHECK(got.find("x_or_z_re,z_im,u_re,u_im") == 0);
    const auto pos = got.find("\n1,0,");
    REQUIRE(pos != std::string::npos);
    const double u = std::stod(got.substr(pos + 5));
    CHECK(u == doctest::Approx(0.47950012218695346).epsilon(1e-6));
}

TEST_CASE("verify reports are byte-identical modulo wall time") {
    auto d = work_dir();
    const auto o1 = (d / "rep1").string(), o2 = (d / "rep2").string();
    CHECK(run("verify --suite specfun --seed 7 --out " + o1) == 0);
    CHECK(run("verify --suite specfun --seed 7 --out " + o2) == 0);
    const auto r1 = strip_wall(slurp(fs::path(o1) / "verify_specfun.json"));
    const auto r2 = strip_wall(slurp(fs::path(o2) / "verify_specfun.json"));
    CHECK(r1 == r2);
    CHECK(!r1.empty());
}

TEST_CASE("inverse roundtrip through the CLI") {
    auto d = work_dir();
    const auto out = (d / "inv").string();
    // healthy: decreasing table over N = {4, 8}
    CHECK(run("inverse --alpha 2 --t 1 --builtin-F L-const --N 4 --N 8 "
              "--tau-points 9 --out " +
              out) == 0);
    CHECK(fs::exists(fs::path(out) / "reconstruction.csv"));
    CHECK(fs::exists(fs::path(out) / "inverse.json"));
    // degenerate N list cannot decrease -> exit 5
    CHECK(run("inverse --alpha 2 --t 1 --builtin-F L-const --N 4 --N 4 "
              "--tau-points 9 --out " +
              out) == 5);
    // a tau grid touching t is refused -> exit 3
    CHECK(run("inverse --alpha 2 --t 1 --builtin-F L-const --N 4 --tau-points 4 "
              "--tau-max 1.0 --out " +
              out) == 3);
}

TEST_CASE("tolerance failures exit with 4") {
    // an unreachable isometry tolerance must fail loudly, not silently
    CHECK(run("isometry-check --alpha 2 --t 1 --g one --tol 1e-13") == 4);
    // and a generous one passes (uses the small default mesh)
    CHECK(run("isometry-check --alpha 2 --t 1 --g one --tol 1e-2 "
              "--mesh 1e-4,32,1e-4,8") == 0);
}
