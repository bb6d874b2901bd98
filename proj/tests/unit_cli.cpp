/*
 * Copyright 2026 the picode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "picode/examples.hpp"
#include "picode/serialize.hpp"

#ifndef PICODE_BIN
#error "PICODE_BIN must point at the CLI binary"
#endif

namespace fs = std::filesystem;
using namespace picode;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "picode_cli_tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    std::string cmd = std::string(PICODE_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli: examples then build reproduces the built-in codes") {
    fs::path dir = scratch_dir() / "fx";
    RunResult r = run_cli("examples " + dir.string());
    REQUIRE(r.exit_code == 0);
    for (int i = 1; i <= 6; ++i) CHECK(fs::exists(dir / ("example" + std::to_string(i) + ".json")));

    // Re-run is byte-identical.
    std::string before = read_file(dir / "example3.json");
    run_cli("examples " + dir.string());
    CHECK(read_file(dir / "example3.json") == before);

    // Building example 1 gives the expected descriptor byte-for-byte.
    RunResult built = run_cli("build " + (dir / "example1.json").string());
    REQUIRE(built.exit_code == 0);
    CHECK(built.out == dump(to_json(build_code(examples::spec(1)))));

    // Round trip: parse back and re-serialize identically.
    Json parsed = Json::parse(built.out);
    CHECK(dump(parsed) == built.out);
    PICode code = code_from_json(parsed);
    CHECK(dump(to_json(code)) == built.out);
}

TEST_CASE("cli: build failure modes") {
    std::string bad = write_file("malformed.json", "{oops");
    CHECK(run_cli("build " + bad).exit_code == 1);

    std::string close = write_file("too_close.json", R"({
      "construction": "TypeA", "q": 2, "N": 19, "t": 1, "m": 5,
      "f_coeffs": ["-1","4","-5","0","5","-4","1"],
      "p_polys": [["19","-1"],["0","1"]]
    })");
    RunResult r = run_cli("build " + close);
    CHECK(r.exit_code == 2);
    Json err = Json::parse(r.out);
    CHECK(err.at("error") == "DistanceTooSmall");
}

TEST_CASE("cli: verify certifies and rejects") {
    fs::path dir = scratch_dir() / "fx";
    run_cli("examples " + dir.string());
    fs::path code_path = scratch_dir() / "ex4_code.json";
    REQUIRE(run_cli("build " + (dir / "example4.json").string() + " --out " + code_path.string())
                .exit_code == 0);

    RunResult ok = run_cli("verify " + code_path.string() + " --t 1");
    CHECK(ok.exit_code == 0);
    CHECK(Json::parse(ok.out).at("ok") == true);

    // Corrupt one amplitude by +1/100: exit 3 and a violation witness.
    PICode code = code_from_json(Json::parse(read_file(code_path)));
    code.logical[0][1].amplitude += RadicalSum(Rational(1, 100));
    std::string corrupted = write_file("ex4_corrupted.json", dump(to_json(code)));
    RunResult bad = run_cli("verify " + corrupted + " --t 1");
    CHECK(bad.exit_code == 3);
    Json cert = Json::parse(bad.out);
    CHECK(cert.at("ok") == false);
    CHECK(!cert.at("violations").empty());
}

TEST_CASE("cli: distance sweep reports the exact determination") {
    std::string gnu = write_file("gnu.json",
                                 R"({"construction": "GNU", "q": 2, "N": 9, "t": 1, "g": 3, "n": 3})");
    fs::path code_path = scratch_dir() / "gnu_code.json";
    REQUIRE(run_cli("build " + gnu + " --out " + code_path.string()).exit_code == 0);

    RunResult r = run_cli("verify " + code_path.string() + " --distance-up-to 3");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("distance") == 3);
    CHECK(!rep.at("witnesses").empty());

    RunResult below = run_cli("verify " + code_path.string() + " --distance-up-to 2");
    CHECK(Json::parse(below.out).at("distance_greater_than") == 2);
}

TEST_CASE("cli: identities") {
    CHECK(run_cli("identities --f -1,5,-10,10,-5,1 --m 5").exit_code == 0);
    CHECK(run_cli("identities --f 1,3,6,7,6,3,1 --m 3 --d 3").exit_code == 0);
    RunResult fail = run_cli("identities --f 1,0,1 --m 1 --d 2");
    CHECK(fail.exit_code == 3);
    CHECK(run_cli("identities --f nonsense --m 2").exit_code == 1);

    Json rep = Json::parse(run_cli("identities --f -1,5,-10,10,-5,1 --m 5").out);
    CHECK(rep.at("moment").at("pass") == true);
    CHECK(rep.at("moment").at("sums").size() == 5);
}

TEST_CASE("cli: oracle runs within tolerances and respects the cap") {
    std::string gnu = write_file("gnu2.json",
                                 R"({"construction": "GNU", "q": 2, "N": 9, "t": 1, "g": 3, "n": 3})");
    RunResult r = run_cli("oracle " + gnu + " --seed 11 --channels 3 --trials 100");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("max_abs_delta").get<double>() <= 1e-9);
    for (const auto& row : rep.at("fidelity_table"))
        CHECK(row.at("min_fidelity").get<double>() >= 1 - 1e-9);

    // Identical seeds give byte-identical reports.
    RunResult again = run_cli("oracle " + gnu + " --seed 11 --channels 3 --trials 100");
    CHECK(again.out == r.out);

    // 3^108 is far over the dense cap.
    fs::path dir = scratch_dir() / "fx";
    run_cli("examples " + dir.string());
    CHECK(run_cli("oracle " + (dir / "example2.json").string()).exit_code == 4);
}

TEST_CASE("cli: family overlap table") {
    RunResult r = run_cli("family --m 3 --d 2 --p \"0,3;12,-3\" --N 12 --t 1 --grid 3");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep.at("diagonal_ok") == true);
    CHECK(rep.at("strict_off_diagonal") == true);
    CHECK(rep.at("grid").size() == 3);
    // Diagonal entries are exactly 1.
    const auto& cell = rep.at("overlap")[0][0].at("value");
    REQUIRE(cell.size() == 1);
    CHECK(cell[0].at("coeff") == "1/1");
    CHECK(cell[0].at("radicand") == 1);

    CHECK(run_cli("family --m 3 --d 2 --p \"0,3;12,-3\" --N 12 --t 1 --grid 1").exit_code == 1);
}
