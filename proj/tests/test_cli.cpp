#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "quadric/cli.hpp"
#include "quadric/errors.hpp"

using namespace quadric;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "quadric");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BoundaryExample) {
    const auto r = run({"boundary", "--from", "go:3", "--parity", "1", "--expr", "wh3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a1^2\n");
    EXPECT_EQ(run({"boundary", "--ring", "go:3", "--parity", "0", "--expr", "wh3"}).out, "0\n");
}

TEST(Cli, PrimitiveWithWitness) {
    const auto r = run({"primitive", "--ring", "go:4", "--expr", "b4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "false  witness: a1^2*t\n");
    EXPECT_EQ(run({"primitive", "--ring", "go:4", "--expr", "a1*a3+b4"}).out, "true\n");
}

TEST(Cli, PrimitiveGeneratorsRank6) {
    const auto r = run({"primitive-generators", "--ring", "go:6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
    EXPECT_EQ(r.out.rfind("lambda: lambda\nalpha'_1: a1\nalpha'_3: a1^3 + a3\n", 0), 0u);
}

TEST(Cli, LabelsUsableInExpressions) {
    const auto r = run({"boundary", "--ring", "go:6", "--expr", "alpha'_3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "wh2 + c\n");
}

TEST(Cli, JsonSchema) {
    const auto r = run({"action", "--ring", "go:2", "--expr", "b4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ring"]["family"], "go");
    EXPECT_EQ(j["ring"]["rank"], 2);
    const auto& terms = j["result"];
    ASSERT_TRUE(terms.is_array());
    EXPECT_EQ(terms.size(), 4u);
    EXPECT_EQ(terms[0], nlohmann::json::parse(R"([["lambda",1],["t",1]])"));
    const auto list = nlohmann::json::parse(
        run({"toda-generators", "--ring", "toda:4", "--format", "json"}).out);
    EXPECT_EQ(list["result"][1]["label"], "d4");
}

TEST(Cli, EveryCommandReachable) {
    EXPECT_EQ(run({"ring-info", "--ring", "go:4"}).code, 0);
    EXPECT_EQ(run({"normalize", "--ring", "go:4", "--expr", "lambda*a1 + b4"}).out, "b4\n");
    EXPECT_EQ(run({"eq", "--ring", "go:4", "--expr", "d{1,2}^2", "--expr", "a1^2*b8+a3^2*b4"}).out,
              "true\n");
    EXPECT_EQ(run({"pistar", "--ring", "go:4", "--expr", "b4"}).out, "w2^2\n");
    EXPECT_EQ(run({"chern", "--ring", "go:4", "--expr", "cb1"}).out, "a1^2\n");
    EXPECT_EQ(run({"gysin-d", "--ring", "o:2", "--expr", "w2"}).out, "a1\n");
    EXPECT_EQ(run({"express", "--ring", "go:4", "--expr", "w2^2"}).out, "b4\n");
    EXPECT_EQ(run({"toda-hat", "--ring", "toda:6"}).code, 0);
    EXPECT_EQ(run({"toda-generators", "--ring", "toda:6"}).code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"normalize", "--ring", "go:", "--expr", "a1"}).code, kExitUsage);
    EXPECT_EQ(run({"normalize", "--ring", "zz:4", "--expr", "a1"}).code, kExitUsage);
    EXPECT_EQ(run({"normalize", "--ring", "o:6", "--expr", "w9"}).code, kExitUsage);
    EXPECT_EQ(run({"normalize", "--ring", "o:6", "--expr", "w1 +"}).code, kExitUsage);
    EXPECT_EQ(run({"boundary", "--ring", "go:3", "--parity", "2", "--expr", "wh2"}).code, kExitUsage);
    EXPECT_EQ(run({"express", "--ring", "go:4", "--expr", "w2"}).code, kExitMath);
    EXPECT_EQ(run({"primitive-generators", "--ring", "go:8"}).code, kExitMath);
    EXPECT_EQ(run({"normalize", "--ring", "o:2", "--degree-cap", "4", "--expr", "w2^3"}).code,
              kExitUsage);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args = {"action", "--ring", "go:6", "--expr", "d{2,3}", "--expr",
                                           "b8*a3", "--format", "json"};
    const auto first = run(args);
    for (int k = 0; k < 5; ++k)
        EXPECT_EQ(run(args).out, first.out);
}

TEST(Cli, SelectorParsing) {
    const auto sel = parse_ring_selector("gl:5");
    EXPECT_EQ(sel.family, "gl");
    EXPECT_EQ(sel.rank, 5);
    EXPECT_THROW(parse_ring_selector("go"), PreconditionViolation);
    EXPECT_THROW(parse_ring_selector("go:0"), PreconditionViolation);
    EXPECT_THROW(parse_ring_selector("go:3x"), PreconditionViolation);
}
