#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "stdlat/errors.hpp"
#include "test_support.hpp"

namespace stdlat::cli {
namespace {

using testing::ints;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("stdlat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path dir_;
};

const char* kParityFive = "5\n2 0 0 0 0\n0 2 0 0 0\n0 0 2 0 0\n0 0 0 2 0\n1 1 1 1 1\n";
const char* kParityFour = R"({"dim": 4, "basis": [[2,0,0,0],[0,2,0,0],[0,0,2,0],[1,1,1,1]]})";
const char* kParityThreeL1 = R"({"dim": 3, "basis": [[2,0,0],[0,2,0],[1,1,1]], "norm": "l1"})";
const char* kDoubledFour = "4\n2 0 0 0\n0 2 0 0\n0 0 2 0\n0 0 0 2\n";
const char* kIdentity2 = "2\n1 0\n0 1\n";

TEST(ParseBasis, PlainAndJson) {
  const BasisFile plain = parse_basis(kParityFive);
  EXPECT_EQ(plain.basis.dim(), 5u);
  EXPECT_FALSE(plain.norm);
  const BasisFile json = parse_basis(kParityThreeL1);
  EXPECT_EQ(json.basis.rows(), ints({{2, 0, 0}, {0, 2, 0}, {1, 1, 1}}));
  EXPECT_EQ(json.norm, NormKind::L1);
}

TEST(ParseBasis, Rejections) {
  EXPECT_THROW(parse_basis("2\n1 2\n2 4\n"), InputError);
  EXPECT_THROW(parse_basis("2\n1 2\n"), InputError);
  EXPECT_THROW(parse_basis("2\n1 0\n0 1\n7\n"), InputError);
  EXPECT_THROW(parse_basis(R"({"dim": 2, "basis": [[1,0],[0,1.5]]})"), InputError);
  EXPECT_THROW(parse_basis(R"({"dim": 3, "basis": [[1,0],[0,1]]})"), InputError);
  EXPECT_THROW(parse_basis(R"({"dim": 2, "basis": [[1,0],[0,1]], "norm": "l3"})"), InputError);
  EXPECT_THROW(parse_basis("{not json"), InputError);
}

TEST(ParsePoint, Formats) {
  const RatVector v = parse_point({"1/2", "-3", "4/6,0"});
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], Rational(1, 2));
  EXPECT_EQ(v[1], -3);
  EXPECT_EQ(v[2], Rational(2, 3));
  EXPECT_EQ(v[3], 0);
  EXPECT_THROW(parse_point({"1/0"}), InputError);
  EXPECT_THROW(parse_point({"x"}), InputError);
}

TEST_F(CliTest, MinimaParityFive) {
  const Result r = invoke({"minima", write("p5.txt", kParityFive)});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("λ² = [4,4,4,4,4]"), std::string::npos) << r.out;
}

TEST_F(CliTest, MinimaIdentity) {
  const Result r = invoke({"minima", write("id.txt", kIdentity2)});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("λ² = [1,1]"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(invoke({"check", write("p5.txt", kParityFive)}).code, kNonStandard);
  EXPECT_EQ(invoke({"check", write("id.txt", kIdentity2)}).code, kSuccess);
  EXPECT_EQ(invoke({"check", write("p3.json", kParityThreeL1)}).code, kNonStandard);
  // The flag overrides the norm stored in the file.
  EXPECT_EQ(invoke({"check", "--norm", "l2", write("p3b.json", kParityThreeL1)}).code, kSuccess);
}

TEST_F(CliTest, ErrorClasses) {
  EXPECT_EQ(invoke({"minima", (dir_ / "missing.txt").string()}).code, kInputError);
  EXPECT_EQ(invoke({"minima", write("sing.txt", "2\n1 1\n1 1\n")}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"standardize", write("p5.txt", kParityFive)}).code, kInputError);
  EXPECT_EQ(invoke({"minima", "--max-dim", "3", write("p5b.txt", kParityFive)}).code, kInputError);
  EXPECT_EQ(invoke({"check", "--max-candidates", "3", write("p5c.txt", kParityFive)}).code,
            kResourceError);
  const Result r = invoke({"minima", write("bad.txt", "2\n1 x\n0 1\n")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, StandardizeParityFour) {
  const Result r = invoke({"standardize", "--json", write("p4.json", kParityFour)});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  IntMatrix rows;
  for (const auto& row : j.at("basis")) {
    IntVector v;
    for (const auto& x : row) v.emplace_back(x.get<long>());
    EXPECT_EQ(measure(v, NormKind::L2).value, 4);
    rows.push_back(v);
  }
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(abs(determinant(LatticeBasis(rows))), 8);
}

TEST_F(CliTest, StandardizeOneDimensionalEchoes) {
  const Result r = invoke({"standardize", "--json", write("one.txt", "1\n-5\n")});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("basis"), nlohmann::json::parse("[[-5]]"));
}

TEST_F(CliTest, NearestEqualityCase) {
  const Result r = invoke({"nearest", "--json", write("d4.txt", kDoubledFour), "1", "1", "1", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("dist_sq"), 4);
  EXPECT_EQ(j.at("at_equality"), true);
}

TEST_F(CliTest, Reduce2dIdentity) {
  const Result r = invoke({"reduce2d", "--json", "--norm", "linf", write("id.txt", kIdentity2)});
  ASSERT_EQ(r.code, kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("basis"), nlohmann::json::parse("[[1,0],[0,1]]"));
}

TEST_F(CliTest, FamilyFive) {
  const Result r = invoke({"family", "5", "--norm", "l2", "--json"});
  EXPECT_EQ(r.code, kNonStandard);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "NonStandard");
  EXPECT_EQ(j.at("consistent"), true);
}

TEST_F(CliTest, JsonReparsesAndOutputIsDeterministic) {
  const std::string p5 = write("p5.txt", kParityFive);
  const std::string d4 = write("d4.txt", kDoubledFour);
  const std::string p4 = write("p4.json", kParityFour);
  const std::string skew = write("skew.txt", "2\n2 1\n1 2\n");
  const std::vector<std::vector<std::string>> commands = {
      {"minima", p5},         {"check", p5},          {"check", p4},
      {"standardize", p4},    {"reduce2d", skew, "--norm", "l1"},
      {"family", "6"},        {"nearest", d4, "1/2", "1", "1", "3/2"},
  };
  for (auto args : commands) {
    const Result text1 = invoke(args);
    const Result text2 = invoke(args);
    EXPECT_EQ(text1.out, text2.out);
    args.push_back("--json");
    const Result json1 = invoke(args);
    const Result json2 = invoke(args);
    EXPECT_EQ(json1.out, json2.out);
    EXPECT_TRUE(nlohmann::json::accept(json1.out)) << args[0];
  }
}

}  // namespace
}  // namespace stdlat::cli
