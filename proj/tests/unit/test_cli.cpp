// Copyright 2026 The cglmp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"

using namespace cglmp::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<TableRow> parse(const std::string &csv) {
    std::istringstream in(csv);
    return read_table_csv(in);
}

fs::path temp_file(const std::string &name) {
    return fs::temp_directory_path() / ("cglmp_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST_CASE("table: small dimensions reproduce the eigenvalue column") {
    const Run r = run({"table", "--d", "4,2,3,3"});
    REQUIRE(r.code == kSuccess);
    const auto rows = parse(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].d == 2);
    CHECK(rows[2].d == 4);
    CHECK_CLOSE(*rows[0].i_eig, 2.82843, 5e-6);
    CHECK_CLOSE(*rows[1].i_eig, 2.9149, 5e-5);
    CHECK_CLOSE(*rows[2].i_eig, 2.9727, 5e-5);
    for (const auto &row : rows) {
        CHECK(row.wall_ms == 0.0);
        CHECK(*row.residual <= 1e-10);
    }
}

TEST_CASE("table: header-only output for no dimensions") {
    const Run r = run({"table"});
    CHECK(r.code == kSuccess);
    CHECK(r.out == std::string(kTableHeader) + "\n");
}

TEST_CASE("table: beyond the eigen budget only app and mes are filled") {
    const Run r = run({"table", "--d", "600000"});
    REQUIRE(r.code == kSuccess);
    const auto rows = parse(r.out);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].i_eig.has_value());
    CHECK_FALSE(rows[0].iterations.has_value());
    CHECK_CLOSE(rows[0].i_app, 3.80080, 1e-4);
    CHECK(r.out.find("600000,,") != std::string::npos);

    const Run small_budget = run({"table", "--d", "50,60", "--eig-budget", "55"});
    const auto rows2 = parse(small_budget.out);
    CHECK(rows2[0].i_eig.has_value());
    CHECK_FALSE(rows2[1].i_eig.has_value());
}

TEST_CASE("table: byte-identical across runs and across job counts") {
    const Run a = run({"table", "--d", "2,17,300,5000"});
    const Run b = run({"table", "--d", "5000,300,17,2", "--jobs", "3"});
    CHECK(a.code == kSuccess);
    CHECK(a.out == b.out);
}

TEST_CASE("table: row invariants") {
    const Run r = run({"table", "--d", "2,3,5,9,20,77,150,1000,4200"});
    const auto rows = parse(r.out);
    double prev_eig = 0.0, prev_app = 0.0;
    for (const auto &row : rows) {
        REQUIRE(row.i_eig.has_value());
        CHECK(*row.i_eig >= std::max(row.i_app, row.i_mes) - 1e-9);
        CHECK(*row.i_eig >= prev_eig);
        CHECK(row.i_app >= prev_app);
        for (double v : {*row.i_eig, row.i_app, row.i_mes}) {
            CHECK(v > 2.0 * std::sqrt(2.0) - 1e-9);
            CHECK(v < 4.0);
        }
        prev_eig = *row.i_eig;
        prev_app = row.i_app;
    }
}

TEST_CASE("table: non-convergence flags the row and the run continues") {
    const Run r = run({"table", "--d", "10,1000", "--tol", "1e-30", "--max-iter", "3"});
    CHECK(r.code == kSuccess);
    const auto rows = parse(r.out);
    REQUIRE(rows.size() == 2);
    for (const auto &row : rows) {
        CHECK_FALSE(row.i_eig.has_value());
        CHECK(row.residual.has_value());
        CHECK_FALSE(row.converged);
    }
    CHECK(r.err.find("warning: d=1000") != std::string::npos);
}

TEST_CASE("table: file output and I/O errors") {
    const fs::path path = temp_file("table.csv");
    const Run r = run({"table", "--d", "5", "--out", path.string()});
    CHECK(r.code == kSuccess);
    std::ifstream in(path);
    CHECK(read_table_csv(in).size() == 1);
    fs::remove(path);

    const Run bad = run({"table", "--d", "5", "--out", "/nonexistent-dir/x.csv"});
    CHECK(bad.code == kIoError);

    CHECK(run({"table", "--d", "1"}).code == kUsageError);
    CHECK(run({"table", "--tol", "-1"}).code == kUsageError);
}

TEST_CASE("verify") {
    const Run ok = run({"verify"});
    CHECK(ok.code == kSuccess);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const Run faulty = run({"verify", "--inject-fault"});
    CHECK(faulty.code == kVerificationFailure);
    CHECK(faulty.out.find("FAIL route equivalence") != std::string::npos);

    CHECK(run({"verify", "--d-max", "128"}).code == kUsageError);
}

TEST_CASE("fit: exact synthetic CSV") {
    std::ostringstream csv;
    csv << kTableHeader << '\n';
    for (int d : {2, 5, 10, 50, 100, 1000, 8000}) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", 3.9 - 1.3 * std::pow(d, -0.22));
        csv << d << ',' << buf << ",3,2.9,1e-12,5,0\n";
    }
    const fs::path path = temp_file("synthetic.csv");
    std::ofstream(path) << csv.str();
    const Run r = run({"fit", path.string()});
    fs::remove(path);
    REQUIRE(r.code == kSuccess);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_CLOSE(j["A"].get<double>(), 3.9, 1e-6);
    CHECK_CLOSE(j["B"].get<double>(), 1.3, 1e-6);
    CHECK_CLOSE(j["p"].get<double>(), 0.22, 1e-6);
    CHECK(j["points"].get<int>() == 7);
}

TEST_CASE("fit: reference grid brackets the known asymptotic constants") {
    const fs::path path = temp_file("reference.csv");
    REQUIRE(run({"table", "--reference-grid", "--eig-budget", "8000", "--out", path.string()}).code == kSuccess);
    const Run r = run({"fit", path.string()});
    fs::remove(path);
    REQUIRE(r.code == kSuccess);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["A"].get<double>() - 3.9132) < 0.05);
    CHECK(std::abs(j["p"].get<double>() - 0.2226) < 0.02);
}

TEST_CASE("fit: precondition and parse errors") {
    const fs::path path = temp_file("short.csv");
    std::ofstream(path) << kTableHeader << "\n2,2.8,2.8,2.8,0,2,0\n3,2.9,2.9,2.87,0,3,0\n4,2.97,2.96,2.89,0,3,0\n";
    CHECK(run({"fit", path.string()}).code == kUsageError);

    std::ofstream(path) << kTableHeader << "\n2,2.8,2.8,2.8,0,2,0\n3,abc,2.9,2.87,0,3,0\n";
    const Run bad = run({"fit", path.string()});
    CHECK(bad.code == kIoError);
    CHECK(bad.err.find("line 3") != std::string::npos);

    std::ofstream(path) << "d,i\n";
    CHECK(run({"fit", path.string()}).err.find("line 1") != std::string::npos);
    fs::remove(path);

    CHECK(run({"fit", "/nonexistent/table.csv"}).code == kIoError);
    CHECK(run({"fit"}).code == kUsageError);
}

TEST_CASE("limit and coeffs") {
    const Run lim = run({"limit", "--compare", "2,50000"});
    REQUIRE(lim.code == kSuccess);
    std::istringstream in(lim.out);
    double value = 0.0;
    in >> value;
    CHECK_CLOSE(value, 2.96981, 1e-5);
    CHECK(lim.out.rfind("2.96981", 0) == 0);
    CHECK(lim.out.find("d=2 2.828427") != std::string::npos);
    const auto at = lim.out.find("d=50000 ");
    REQUIRE(at != std::string::npos);
    CHECK_CLOSE(std::stod(lim.out.substr(at + 8)), 2.96981, 5e-6);

    const Run co = run({"coeffs", "--d", "3"});
    CHECK(co.code == kSuccess);
    const auto row2 = co.out.find("\n2,");
    REQUIRE(row2 != std::string::npos);
    CHECK_CLOSE(std::stod(co.out.substr(row2 + 3)), 2.0, 1e-15);
    CHECK(run({"coeffs", "--d", "3", "--form", "sinesum"}).code == kSuccess);
    CHECK(run({"coeffs", "--d", "1"}).code == kUsageError);
    CHECK(run({"coeffs"}).code == kUsageError);
}

TEST_CASE("usage") {
    CHECK(run({}).code == kUsageError);
    CHECK(run({"nonsense"}).code == kUsageError);
    const Run help = run({"--help"});
    CHECK(help.code == kSuccess);
    CHECK(help.out.find("table") != std::string::npos);
}
