#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "hess/cli.hpp"
#include "hess/ideal.hpp"
#include "hess/serialize.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hess::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, A9AllMethods) {
    const Result r = run({"poincare", "--type", "A", "--rank", "9", "--K", "2,4,5,8", "--h", "4,5,5,8,10", "--method", "all"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["type"], "A");
    EXPECT_EQ(j["rank"], 9);
    EXPECT_EQ(j["theta"], (std::vector<int>{1, 3, 6, 7, 9}));
    EXPECT_EQ(j["dimension"], 6);
    EXPECT_EQ(j["agree"], true);
    ASSERT_EQ(j["methods"].size(), 5u);
    for (const auto& [name, body] : j.at("methods").items())
        EXPECT_EQ(body["coeffs"], (std::vector<int>{1, 2, 4, 4, 4, 2, 1})) << name;
    EXPECT_EQ(j["methods"]["cells"]["cells"], 18);
    EXPECT_EQ(j["hessenberg"]["extended"], (std::vector<int>{4, 4, 5, 5, 5, 8, 8, 8, 10, 10}));
}

TEST(Cli, SmallPoincare) {
    Result r = run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,1,2", "--method", "product"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["methods"]["product"]["coeffs"], (std::vector<int>{1, 2, 2, 1}));
    r = run({"poincare", "--type", "G", "--rank", "2", "--ideal", "0,1", "--method", "cells"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["methods"]["cells"]["coeffs"], (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(r.json()["dimension"], 2);
    r = run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,1,2", "--format", "csv"});
    EXPECT_EQ(r.out, "cells,1,2,2,1\nweyltype,1,2,2,1\nproduct,1,2,2,1\nheight-dist,1,2,2,1\n");
    r = run({"poincare", "--type", "A", "--rank", "2", "--ideal", "", "--method", "cells"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["methods"]["cells"]["coeffs"], (std::vector<int>{1}));
}

TEST(Cli, ShowRoots) {
    const Result r = run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,1", "--show-roots", "--method", "product"});
    ASSERT_EQ(r.code, 0);
    const auto j = r.json();
    ASSERT_EQ(j["roots"].size(), 2u);
    EXPECT_EQ(j["roots"][0]["height"], 1);
}

TEST(Cli, Enumerate) {
    Result r = run({"ideals", "--type", "A", "--rank", "3", "--count", "--format", "plain"});
    EXPECT_EQ(r.out, "14\n");
    r = run({"ideals", "--type", "A", "--rank", "2", "--theta", "1"});
    EXPECT_EQ(r.json()["count"], 2);
    r = run({"roots", "--type", "G", "--rank", "2"});
    const auto roots = r.json();
    std::vector<int> heights;
    for (const auto& root : roots["roots"]) heights.push_back(root["height"]);
    EXPECT_EQ(heights, (std::vector<int>{1, 1, 2, 3, 4, 5}));
    r = run({"exponents", "--type", "A", "--rank", "9", "--ideal", "0,2,3,5,6,7,8,11,14,15,16,23"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["exponents"], (std::vector<int>{3, 2, 2, 2, 1, 1, 1, 0, 0}));
}

TEST(Cli, Verify) {
    Result r = run({"verify", "--type", "B", "--rank", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["failures"], 0);
    EXPECT_EQ(r.json()["thetas_checked"], 8);
    r = run({"verify", "--type", "A", "--rank", "2", "--theta", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["ideals_checked"], 2);
    EXPECT_NE(r.err.find("wall time"), std::string::npos);
}

TEST(Cli, ErrorsAndExitCodes) {
    Result r = run({"verify", "--type", "E", "--rank", "8"});
    EXPECT_EQ(r.code, hess::cli::kCapExceeded);
    EXPECT_EQ(r.json()["error"]["kind"], "CapExceeded");
    EXPECT_EQ(r.json()["error"]["exit_code"], 3);

    r = run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,2"});
    EXPECT_EQ(r.code, hess::cli::kInvalidInput);
    EXPECT_EQ(r.json()["error"]["kind"], "InvalidIdeal");

    EXPECT_EQ(run({"roots", "--type", "E", "--rank", "5"}).code, 2);
    EXPECT_EQ(run({"roots", "--type", "A"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,7"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0,x"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "2", "--ideal", "0", "--method", "qbinomial"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "B", "--rank", "2", "--K", "1", "--h", "2,3"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "3", "--K", "2", "--h", "1,4"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "3", "--K", "2", "--h", "2,4", "--ideal", "0"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "3", "--K", "2", "--h", "2,4", "--theta", "1"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "3"}).code, 2);
    EXPECT_EQ(run({"poincare", "--type", "A", "--rank", "6", "--ideal", "", "--method", "cells", "--perm-cap", "10"}).code, 3);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"poincare", "--type", "B", "--rank", "3", "--ideal", "0,1,2,3", "--theta", "1"};
    const Result a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    const Result v1 = run({"verify", "--type", "G", "--rank", "2"}), v2 = run({"verify", "--type", "G", "--rank", "2"});
    EXPECT_EQ(v1.out, v2.out);
}

// Emitted ideals and polynomials parse back to equal values.
TEST(Cli, JsonRoundTrip) {
    const hess::RootSystem rs = hess::RootSystem::build('A', 9);
    const Result r = run({"poincare", "--type", "A", "--rank", "9", "--K", "2,4,5,8", "--h", "4,5,5,8,10"});
    const hess::Json j = hess::Json::parse(r.out);
    const hess::HessenbergIdeal hi = hess::ideal_from_partial_hessenberg(rs, {10, {2, 4, 5, 8}, {4, 5, 5, 8, 10}});
    EXPECT_EQ(hess::ideal_from_json(rs, j["ideal"]), hi.ideal);
    EXPECT_EQ(hess::polynomial_from_json(j["methods"]["product"]["coeffs"]), (hess::QPolynomial{1, 2, 4, 4, 4, 2, 1}));
    EXPECT_EQ(hess::from_q_integer_factors(hess::factored_from_json(j["methods"]["product"]["factored"])),
              (hess::QPolynomial{1, 2, 4, 4, 4, 2, 1}));
    EXPECT_EQ(hess::hessenberg_from_json(j["hessenberg"]), (hess::PartialHessenbergFunction{10, {2, 4, 5, 8}, {4, 5, 5, 8, 10}}));
    const hess::QPolynomial big = hess::QPolynomial::q_factorial(25);
    EXPECT_EQ(hess::polynomial_from_json(hess::Json::parse(hess::polynomial_to_json(big).dump())), big);
}
