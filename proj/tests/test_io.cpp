#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sector_rkhs/csv.hpp"
#include "sector_rkhs/diagnostics.hpp"

using namespace sector_rkhs;
using io::cplx;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    out.close();
    return p.string();
}

}  // namespace

TEST_CASE("signal csv parsing") {
    auto good = temp_file("srk_good.csv", "tau,g_re\n0,1\n0.5,2\n1,3\n");
    auto data = io::read_signal_csv(good);
    REQUIRE(data.tau.size() == 3);
    CHECK(data.g[1] == cplx(2.0, 0.0));

    auto cgood = temp_file("srk_cplx.csv", "tau,g_re,g_im\n0,1,0.5\n1,2,-0.25\n");
    auto cdata = io::read_signal_csv(cgood);
    CHECK(cdata.g[1] == cplx(2.0, -0.25));

    CHECK_THROWS_AS(io::read_signal_csv(temp_file("srk_empty.csv", "")), io::CsvError);
    CHECK_THROWS_AS(io::read_signal_csv(temp_file("srk_hdr.csv", "x,y\n0,1\n1,2\n")),
                    io::CsvError);
    CHECK_THROWS_AS(
        io::read_signal_csv(temp_file("srk_nan.csv", "tau,g_re\n0,abc\n1,2\n")),
        io::CsvError);
    CHECK_THROWS_AS(
        io::read_signal_csv(temp_file("srk_unsorted.csv", "tau,g_re\n0.5,1\n0.2,2\n")),
        io::CsvError);
    CHECK_THROWS_AS(io::read_signal_csv(temp_file("srk_one.csv", "tau,g_re\n0,1\n")),
                    io::CsvError);
    CHECK_THROWS_AS(io::read_signal_csv("/nonexistent/file.csv"), io::CsvError);
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5e17}) {
        const std::string s = io::format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("atomic write") {
    auto dir = std::filesystem::temp_directory_path() / "srk_atomic";
    std::filesystem::remove_all(dir);
    const auto path = (dir / "sub" / "file.txt").string();
    io::write_file_atomic(path, "hello\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "hello");
    // no stray temp file
    CHECK(!std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("diagnostics report JSON round-trip") {
    io::DiagnosticsReport rep;
    rep.command = "unit-test";
    rep.params["alpha"] = 1.5;
    rep.add(io::CheckRecord::relative("check.a", 1.0001, 1.0, 1e-3));
    rep.add(io::CheckRecord::upper_bound("check.b", 0.5, 0.1, "intentionally failing"));
    io::Table t;
    t.name = "tab";
    t.columns = {"x", "y"};
    t.rows = {{1.0, 2.0}, {3.0, 4.0}};
    rep.tables.push_back(t);
    rep.warn("a warning");
    rep.wall_ms = 12.5;

    CHECK(!rep.all_pass());
    const auto j = rep.to_json();
    auto back = io::DiagnosticsReport::from_json(j);
    CHECK(back.command == rep.command);
    REQUIRE(back.checks.size() == 2);
    CHECK(back.checks[0].pass);
    CHECK(!back.checks[1].pass);
    CHECK(back.checks[1].note == "intentionally failing");
    CHECK(back.tables.at(0).rows.at(1).at(1) == 4.0);
    CHECK(back.warnings.at(0) == "a warning");
    // encode(decode(x)) == encode(x)
    CHECK(back.to_json().dump() == j.dump());
    // stable dump masks only the wall time
    io::DiagnosticsReport rep2 = rep;
    rep2.wall_ms = 99.0;
    CHECK(rep.stable_dump() == rep2.stable_dump());
}

TEST_CASE("pass/fail derivable from recorded values") {
    auto c = io::CheckRecord::relative("r", 1.05, 1.0, 0.1);
    CHECK(c.pass == (std::abs(c.value - c.target) <= c.tolerance * std::abs(c.target)));
    auto u = io::CheckRecord::upper_bound("u", 0.2, 0.3);
    CHECK(u.pass == (u.value <= u.tolerance));
}
