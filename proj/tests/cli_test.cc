// Copyright 2026 The qccdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcc/cli.h"

namespace qcc {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSpec = std::string(QCC_SPEC_DIR) + "/qcc_3_1_1.txt";
const std::string kBroken = std::string(QCC_SPEC_DIR) + "/qcc_3_1_1_broken.txt";

fs::path temp_file(const std::string &name, const std::string &content) {
    fs::path p = fs::temp_directory_path() / ("qccdec_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

TEST(Cli, VerifyPassesAndFails) {
    CliRun ok = run({"verify", kSpec, "--trials", "20"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    CliRun bad = run({"verify", kBroken});
    EXPECT_EQ(bad.code, kExitVerifyFailed);
    EXPECT_NE(bad.out.find("FAIL commutation: entry (1,1) = D^-1+D"), std::string::npos) << bad.out;
}

TEST(Cli, Derive) {
    CliRun r = run({"derive", kSpec});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("[1+D^2, 1+D^3, 1+D^2+D^3]\n[D+D^3, D+D^2+D^3, D+D^2]\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("[D^2, 1+D^2, 1+D^2]"), std::string::npos);
    EXPECT_NE(r.out.find("[1+D, 1+w*D, 1+w2*D]"), std::string::npos);
    EXPECT_EQ(run({"derive", kSpec, "--isf", "nonsense"}).code, kExitInputError);
}

TEST(Cli, DecodeZeroAndSingleError) {
    fs::path zero = temp_file("zero.hex", "000\n");
    CliRun r = run({"decode", kSpec, "--syndrome", zero.string()});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "IIIIIIIIIIIIIII\n");
    // X on qubit 0 of a 5-block frame: generator 2 fires at positions 0 and 1,
    // which are syndrome bits 1 and 3.
    fs::path one = temp_file("one.hex", "0x00A");
    for (const char *field : {"gf2", "gf4"}) {
        CliRun x = run({"decode", kSpec, "--syndrome", one.string(), "--field", field});
        EXPECT_EQ(x.code, kExitOk) << x.err;
        EXPECT_EQ(x.out, "XIIIIIIIIIIIIII\n");
    }
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({"verify", "/nonexistent.txt"}).code, kExitInputError);
    EXPECT_EQ(run({}).code, kExitInputError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
    fs::path junk = temp_file("junk.hex", "xyz");
    EXPECT_EQ(run({"decode", kSpec, "--syndrome", junk.string()}).code, kExitInputError);
    fs::path far = temp_file("far.hex", "800");
    EXPECT_EQ(run({"decode", kSpec, "--syndrome", far.string(), "--blocks", "2"}).code, kExitInputError);
    EXPECT_EQ(run({"simulate", kSpec, "--p", "0.7", "--frames", "1"}).code, kExitInputError);
    EXPECT_EQ(run({"simulate", kSpec, "--p", "0.01", "--frame-qubits", "10"}).code, kExitInputError);
    EXPECT_EQ(run({"simulate", kSpec, "--p", "0.01", "--metric", "soft"}).code, kExitInputError);
}

TEST(Cli, SimulateWritesCsv) {
    fs::path out = fs::temp_directory_path() / "qccdec_cli_sim.csv";
    CliRun r = run({"simulate", kSpec, "--p", "0,0.01", "--frames", "5", "--frame-qubits", "90", "--seed", "3", "--out",
                 out.string(), "--threads", "2"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string csv = buf.str();
    EXPECT_EQ(csv.rfind("# qccdec-sweep v1\n# code [3,1,1] frame_qubits=90 padding_qubits=6 rate=30/96\n", 0), 0u);
    EXPECT_NE(csv.find("\n0,5,0,450,0,0,0,3,0\n"), std::string::npos) << csv;
}

TEST(Cli, HexParsing) {
    auto bits = parse_hex_bits("0x1 2");
    ASSERT_EQ(bits.size(), 8u);
    EXPECT_TRUE(bits[1]);
    EXPECT_TRUE(bits[4]);
    EXPECT_FALSE(bits[0]);
}

}  // namespace
}  // namespace qcc
