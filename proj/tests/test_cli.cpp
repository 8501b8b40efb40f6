#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "convexo/cli.hpp"
#include "convexo/json_io.hpp"
#include "convexo/random.hpp"
#include "convexo/standard_tuples.hpp"

using namespace convexo;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("convexo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string write(const std::string& name, const MatrixTuple& t) {
        return write(name, io::tuple_to_json(t).dump());
    }

    int call(std::vector<std::string> args) {
        args.insert(args.begin(), "convexo");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        out_.str("");
        err_.str("");
        return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
    }
    io::Json doc() const { return io::parse_text(out_.str()); }

    fs::path dir_;
    std::ostringstream out_, err_;
};

} // namespace

TEST(JsonIo, RoundTripIsBitExact) {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        MatrixTuple x = rng.gaussian_tuple(static_cast<std::size_t>(rng.integer(1, 4)), rng.integer(1, 4));
        if (t % 5 == 0) x = Complex(1e-300) * x;
        const std::string text = io::tuple_to_json(x).dump();
        const MatrixTuple y = io::tuple_from_json(io::parse_text(text));
        ASSERT_EQ(x.size(), y.size());
        for (std::size_t k = 0; k < x.size(); ++k) EXPECT_TRUE((x[k].array() == y[k].array()).all());
    }
}

TEST(JsonIo, RowMajorOrder) {
    const MatrixTuple t = io::tuple_from_json(io::parse_text(
        R"({"g":1,"rows":2,"cols":2,"matrices":[[[[1,0],[2,0]],[[3,0],[4,5]]]]})"));
    EXPECT_EQ(t[0](0, 1), Complex(2.0));
    EXPECT_EQ(t[0](1, 0), Complex(3.0));
    EXPECT_EQ(t[0](1, 1), Complex(4.0, 5.0));
}

TEST(JsonIo, RejectsRaggedAndNonFinite) {
    auto parse = [](const char* s) { return io::tuple_from_json(io::parse_text(s)); };
    EXPECT_THROW(parse(R"({"g":1,"rows":2,"cols":2,"matrices":[[[[1,0],[2,0]],[[3,0]]]]})"), io::FormatError);
    EXPECT_THROW(parse(R"({"g":1,"rows":1,"cols":1,"matrices":[[[[1e999,0]]]]})"), io::FormatError);
    EXPECT_THROW(parse(R"({"g":2,"rows":1,"cols":1,"matrices":[[[[1,0]]]]})"), io::FormatError);
    EXPECT_THROW(parse(R"({"g":1,"rows":1,"cols":1,"matrices":[[[[1]]]]})"), io::FormatError);
    EXPECT_THROW(parse(R"({"g":1,"rows":1,"cols":1,"matrices":[[[[1,0]]]],"x":1})"), io::FormatError);
    try {
        parse(R"({"g":1,"rows":2,"cols":2,"matrices":[[[[1,0],[2,0]],[[3,0]]]]})");
    } catch (const io::FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("/matrices/0/1"), std::string::npos);
    }
}

TEST(JsonIo, SyntaxErrorLocation) {
    try {
        (void)io::parse_text("{\n  \"g\": 1,\n  \"rows\" 1\n}", "t.json");
        FAIL();
    } catch (const io::FormatError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("t.json:3:10:", 0), 0u) << e.what();
    }
    EXPECT_EQ(io::line_col("ab\ncd", 4), (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(JsonIo, SchemaIsJson) {
    const io::Json s = io::parse_text(io::tuple_schema());
    EXPECT_EQ(s["required"].size(), 4u);
}

TEST_F(CliTest, MemberBoundary) {
    const auto f = write("F.json", standard::tuple_f());
    const auto p = write("p.json", MatrixTuple::scalars({1.0, 1.0}));
    EXPECT_EQ(call({"member", "--kind", "spec", "--tuple", f, "--point", p}), 0);
    EXPECT_EQ(doc()["location"], "boundary");
    EXPECT_LT(std::abs(doc()["margin"].get<double>()), 1e-10);
    const auto m = write("m.json", MatrixTuple::scalars({-1.0, -1.0}));
    EXPECT_EQ(call({"member", "--kind", "spec", "--tuple", f, "--point", m}), 2);
    EXPECT_EQ(doc()["location"], "exterior");
    EXPECT_EQ(call({"member", "--kind", "ball", "--tuple", f, "--point", p}), 2);
}

TEST_F(CliTest, XiTypeI) {
    const auto f = write("F.json", standard::tuple_f());
    ASSERT_EQ(call({"xi", "--tuple", f}), 0);
    const MatrixTuple xi = io::tuple_from_json(doc()["xi"]);
    EXPECT_LT((xi[0] - standard::unit(0, 1, 2)).norm(), 1e-14);
    EXPECT_LT(xi[1].norm(), 1e-14);
    EXPECT_LT(doc()["residual"].get<double>(), 1e-14);
}

TEST_F(CliTest, XiClosureAndSpanViolation) {
    const auto s = write("S.json", MatrixTuple{standard::tuple_f()[0]});
    ASSERT_EQ(call({"xi", "--tuple", s, "--closure"}), 0);
    EXPECT_EQ(doc()["closure"]["appended_count"], 1);
    const auto bad = write("bad.json", MatrixTuple{standard::unit(0, 1, 2), standard::unit(1, 0, 2)});
    EXPECT_EQ(call({"xi", "--tuple", bad}), 2);
    EXPECT_EQ(doc()["error"]["kind"], "SpanViolation");
    EXPECT_TRUE(doc()["error"].contains("value"));
}

TEST_F(CliTest, PencilXi) {
    const auto e = write("E.json", standard::tuple_e());
    const auto c = write("C.json", MatrixTuple{standard::swap2()});
    EXPECT_EQ(call({"pencil-xi", "--tuple", e, "--middle", c}), 2);
    EXPECT_EQ(doc()["error"]["kind"], "SpanViolation");
    const auto i = write("I.json", MatrixTuple{Matrix(Matrix::Identity(2, 2))});
    EXPECT_EQ(call({"pencil-xi", "--tuple", e, "--middle", i}), 0);
}

TEST_F(CliTest, EvalAndInverseCheck) {
    const auto xi = write("xi.json", standard::tuple_e());
    const auto x = write("x.json", MatrixTuple::scalars({0.25, 0.125}));
    ASSERT_EQ(call({"eval", "--xi", xi, "--sign", "minus", "--point", x}), 0);
    const MatrixTuple y = io::tuple_from_json(doc());
    EXPECT_NEAR(std::abs(y[0](0, 0) - 1.0 / 3.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(y[1](0, 0) - 2.0 / 9.0), 0.0, 1e-15);
    EXPECT_EQ(call({"inverse-check", "--xi", xi, "--point", x}), 0);
    EXPECT_TRUE(doc()["passed"].get<bool>());
    const auto one = write("one.json", MatrixTuple::scalars({1.0, 0.0}));
    EXPECT_EQ(call({"eval", "--xi", xi, "--sign", "minus", "--point", one}), 2);
    EXPECT_EQ(doc()["error"]["kind"], "DomainBreach");
}

TEST_F(CliTest, SvProbeExitCodes) {
    const auto e = write("E.json", standard::tuple_e());
    EXPECT_EQ(call({"sv-probe", "--tuple", e, "--trials", "10000", "--seed", "42"}), 0);
    EXPECT_EQ(doc()["result"], "certified");
    EXPECT_TRUE(doc()["revalidated"].get<bool>());
    EXPECT_EQ(call({"sv-probe", "--tuple", e, "--trials", "1"}), 3);
    EXPECT_EQ(doc()["result"], "inconclusive");
    const auto f = write("F.json", standard::tuple_f());
    EXPECT_EQ(call({"sv-probe", "--tuple", f}), 2);
    EXPECT_EQ(doc()["result"], "rejected");
}

TEST_F(CliTest, VerifyTheorem) {
    const auto e = write("E.json", standard::tuple_e());
    const auto i = write("I.json", MatrixTuple{Matrix(Matrix::Identity(2, 2))});
    const auto s = write("S.json", MatrixTuple{standard::swap2()});
    EXPECT_EQ(call({"verify-theorem", "--e", e, "--b", e, "--z", i, "--m", i, "--samples", "10"}), 0);
    EXPECT_TRUE(doc()["passed"].get<bool>());
    EXPECT_EQ(call({"verify-theorem", "--e", e, "--b", e, "--z", s, "--m", i}), 2);
    EXPECT_FALSE(doc()["passed"].get<bool>());
    EXPECT_EQ(call({"verify-theorem", "--e", e, "--b", e, "--z", e, "--m", i}), 1);
}

TEST_F(CliTest, MalformedJsonIsUsageError) {
    const auto bad = write("bad.json", "{\"g\": 1,\n \"rows\": [}");
    const auto p = write("p.json", MatrixTuple::scalars({1.0}));
    EXPECT_EQ(call({"member", "--tuple", bad, "--point", p}), 1);
    EXPECT_TRUE(out_.str().empty());
    EXPECT_NE(err_.str().find("bad.json:2:"), std::string::npos) << err_.str();
    EXPECT_EQ(call({"member", "--tuple", (dir_ / "missing.json").string(), "--point", p}), 1);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(call({}), 1);
    EXPECT_EQ(call({"member"}), 1);
    EXPECT_EQ(call({"eval", "--xi", "a", "--sign", "sideways", "--point", "b"}), 1);
    EXPECT_TRUE(out_.str().empty());
    EXPECT_EQ(call({"--help"}), 0);
    EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, SchemaFlag) {
    EXPECT_EQ(call({"--schema"}), 0);
    EXPECT_EQ(doc()["title"], "Matrix tuple");
}

TEST_F(CliTest, ExamplesDeterministic) {
    ASSERT_EQ(call({"examples"}), 0);
    const std::string first = out_.str();
    EXPECT_TRUE(doc()["passed"].get<bool>());
    ASSERT_EQ(call({"examples", "--seed", "42"}), 0);
    EXPECT_EQ(out_.str(), first);
}
