#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli/commands.hpp"
#include "test_util.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = cauchon::cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return testutil::golden_path(name); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST(CliValidate, MixedDiagramIsValid) {
    const auto r = run({"validate", golden("mixed_4x4.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "valid\n");
}

TEST(CliValidate, ReportsFirstOffendingBox) {
    const auto r = run({"validate", golden("invalid_2x2.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "invalid at (2,2)\n");
}

TEST(CliValidate, StdinAndParseErrors) {
    EXPECT_EQ(run({"validate", "-"}, "1 2\n.#\n").out, "valid\n");
    const auto r = run({"validate", "-"}, "2 2\n..\n.?\n");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err, "error: line 3: unexpected character '?'\n");
    EXPECT_TRUE(r.out.empty());
}

TEST(CliValidate, MissingFile) {
    const auto r = run({"validate", "/nonexistent/grid.txt"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: cannot open", 0), 0U);
}

TEST(CliDim, Examples) {
    EXPECT_EQ(run({"dim", golden("sparse_4x4.txt")}).out, "d: 5\ne: 1\n");
    EXPECT_EQ(run({"dim", "-"}, "2 2\n##\n##\n").out, "d: 0\ne: 0\n");
    EXPECT_EQ(run({"dim", "-"}, "3 3\n...\n...\n...\n").out, "d: 9\ne: 3\n");
}

TEST(CliDim, ShowMatrixAndAudit) {
    const auto r = run({"dim", golden("sparse_4x4.txt"), "--show-matrix", "--audit"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("M(C):\n" + testutil::read_file(golden("sparse_4x4_matrix.txt"))), std::string::npos);
    EXPECT_NE(r.out.find("lemma audit: pass\n"), std::string::npos);
}

TEST(CliDim, InvalidDiagramIsAnError) {
    const auto r = run({"dim", golden("invalid_2x2.txt")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err, "error: not a Cauchon diagram: invalid at (2,2)\n");
}

TEST(CliDim, Json) {
    const auto r = run({"dim", golden("sparse_4x4.txt"), "--format", "json"});
    EXPECT_EQ(r.out, "{\n  \"schema\": 1,\n  \"m\": 4,\n  \"n\": 4,\n  \"white_count\": 5,\n  \"stratum_dim\": 1\n}\n");
}

TEST(CliChain, Examples) {
    EXPECT_EQ(run({"chain", "-"}, "2 2\n..\n..\n").out,
              "dim: 2\n2 2\n..\n..\ndim: 1\n2 2\n#.\n..\ndim: 0\n2 2\n##\n..\n");
    EXPECT_EQ(run({"chain", "-"}, "1 2\n##\n").out, "dim: 0\n1 2\n##\n");
    const auto fig = run({"chain", golden("sparse_4x4.txt"), "--format", "csv"});
    EXPECT_EQ(fig.out.substr(0, fig.out.find('\n')), "step,dim,rows");
    EXPECT_EQ(std::count(fig.out.begin(), fig.out.end(), '\n'), 3);
}

TEST(CliChain, Json) {
    const auto r = run({"chain", "-", "--format", "json"}, "1 1\n.\n");
    EXPECT_EQ(r.out,
              "{\n  \"schema\": 1,\n  \"steps\": [\n    {\n      \"diagram\": [\n        \".\"\n      ],\n"
              "      \"dim\": 1\n    },\n    {\n      \"diagram\": [\n        \"#\"\n      ],\n"
              "      \"dim\": 0\n    }\n  ]\n}\n");
}

TEST(CliCount, Examples) {
    EXPECT_EQ(run({"count", "2", "2"}).out, "14\n");
    EXPECT_EQ(run({"count", "3", "3", "--enumerate"}).out, "230\nenumerated: 230\n");
    EXPECT_EQ(run({"count", "2", "3", "--format", "csv"}).out, "m,n,count\n2,3,46\n");
    EXPECT_EQ(run({"count", "30", "30", "--format", "json"}).code, 0);
    const auto capped = run({"count", "5", "5", "--enumerate", "--cap", "100"});
    EXPECT_EQ(capped.code, 2);
    EXPECT_EQ(first_line(capped.err).rfind("error: ", 0), 0U);
}

TEST(CliDist, OneRow) {
    EXPECT_EQ(run({"dist", "1", "3", "--format", "csv", "--exact"}).out,
              "m,n,i,count,total,empirical\n1,3,0,4,8,1/2\n1,3,1,4,8,1/2\n");
    EXPECT_EQ(run({"dist", "1", "2"}).out, "m=1 n=2 total=4\ne=0 2 0.500000\ne=1 2 0.500000\n");
}

TEST(CliConjecture, OneRowHasZeroErrorForOddDimension) {
    const auto r = run({"conjecture", "1", "8", "--format", "csv", "--exact"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.rfind("1,", 0) == 0 && line.find(",1,", 1) != std::string::npos)
            EXPECT_EQ(line.substr(line.rfind(',') + 1), "0");
    }
    EXPECT_EQ(rows, 16);
}

TEST(CliDeterminism, ByteIdenticalAcrossJobs) {
    for (const auto& fmt : {"text", "csv", "json"}) {
        const auto one = run({"conjecture", "2", "6", "--format", fmt, "--jobs", "1"});
        const auto four = run({"conjecture", "2", "6", "--format", fmt, "--jobs", "4"});
        EXPECT_EQ(one.out, four.out);
        EXPECT_EQ(run({"dist", "3", "4", "--format", fmt, "--jobs", "1"}).out,
                  run({"dist", "3", "4", "--format", fmt, "--jobs", "3"}).out);
    }
}

TEST(CliCgl, QuantumAndFile) {
    EXPECT_EQ(run({"cgl", "--quantum", "2", "2"}).out, "N: 4\nw: \ncomplement: 1 2 3 4\ndim: 2\n");
    EXPECT_EQ(run({"cgl", "--quantum", "2", "2", "1", "2", "3", "4"}).out,
              "N: 4\nw: 1 2 3 4\ncomplement: \ndim: 0\n");
    EXPECT_EQ(run({"cgl", "-", "2"}, "3\n0 1 0\n-1 0 0\n0 0 0\n").out, "N: 3\nw: 2\ncomplement: 1 3\ndim: 2\n");
    EXPECT_EQ(run({"cgl", "-", "4"}, "3\n0 1 0\n-1 0 0\n0 0 0\n").code, 2);
    EXPECT_EQ(run({"cgl"}).code, 2);
}

TEST(CliWeyl, Examples) {
    const auto r = run({"weyl", "A2", "1,2,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("zero-stratum dim: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("beta_2: 1 1\n"), std::string::npos);
    EXPECT_EQ(run({"weyl", "A1", "1,1"}).code, 2);
    EXPECT_EQ(run({"weyl", "A2", "3"}).code, 2);
    EXPECT_EQ(run({"weyl", "Q2", "1"}).code, 2);
}

TEST(CliWeyl, QuantumCheck) {
    // Grassmannian permutation [3,4,1,2] in A3.
    const auto r = run({"weyl", "A3", "2,1,3,2", "--quantum", "2", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(match)"), std::string::npos);
    EXPECT_EQ(run({"weyl", "A2", "1", "--quantum", "2", "2"}).code, 2);
}

TEST(CliUsage, ErrorsAreSingleLinePrefixed) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{}, {"frobnicate"}, {"count", "2"}, {"dist", "2", "2", "--format", "xml"},
          {"dist", "2", "2", "--jobs", "0"}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 2);
        EXPECT_EQ(first_line(r.err).rfind("error: ", 0), 0U) << r.err;
    }
}

TEST(CliUsage, JobsFromEnvironment) {
    ::setenv("CAUCHON_JOBS", "2", 1);
    EXPECT_EQ(run({"count", "2", "2"}).out, "14\n");
    ::setenv("CAUCHON_JOBS", "zero", 1);
    EXPECT_EQ(run({"count", "2", "2"}).code, 2);
    ::unsetenv("CAUCHON_JOBS");
}
