#include <doctest.h>

#include <carlson/cli.hpp>
#include <carlson/core_bounds.hpp>
#include <carlson/report_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace carlson;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err, false);
    return {code, out.str(), err.str()};
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"eval", "--a", "zero", "--x", "0.5"}).code == cli::kUsageError);
    CHECK(run({"verify", "--claims", "no-such-claim"}).code == cli::kUsageError);
    CHECK(run({"eval", "--a", "0"}).code == cli::kUsageError);
}

TEST_CASE("domain errors exit 3") {
    auto r = run({"eval", "--a", "0", "--x", "1.5"});
    CHECK(r.code == cli::kDomainError);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"minimize", "--a", "2.5"}).code == cli::kDomainError);
    CHECK(run({"bounds", "--a", "-1", "--x", "0.5"}).code == cli::kDomainError);
}

TEST_CASE("eval") {
    auto r = run({"eval", "--a", "0", "--x", "0.5"});
    REQUIRE(r.code == 0);
    auto recs = parse_csv(r.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0][2] == "F");
    CHECK(num(recs[1][2]) == doctest::Approx(1.813799364234218).epsilon(1e-15));

    auto t = run({"eval", "--alpha", "0.5", "--beta", "0.5", "--gamma", "0", "--x", "0.5"});
    REQUIRE(t.code == 0);
    CHECK(num(parse_csv(t.out)[1][4]) == doctest::Approx(1.813799364234218));
}

TEST_CASE("classify") {
    auto r = run({"classify", "--a", "2.8284271247461903"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out)[1][1] == "Decreasing");
    CHECK(parse_csv(run({"classify", "--a", "2.7"}).out)[1][1] == "InteriorMinimum");
    auto abc = run({"classify", "--alpha", "0.5", "--beta", "0.5", "--gamma", "0", "--n", "5000"});
    REQUIRE(abc.code == 0);
    CHECK(parse_csv(abc.out)[1][3] == "Increasing");
}

TEST_CASE("verify one claim as json") {
    auto r = run({"verify", "--claims", "thm2-eq5-lower", "--a", "0", "--n", "20000", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_passed"] == true);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["passed"] == true);
    CHECK(j["rows"][0]["claim_id"] == "thm2-eq5-lower");
}

TEST_CASE("verify failure exits 1") {
    // two grid points cannot show the interior minimum
    auto r = run({"verify", "--claims", "thm1-unique-min", "--a", "2.7", "--n", "2", "--grid", "uniform"});
    CHECK(r.code == cli::kVerificationFailed);
}

TEST_CASE("verify --list") {
    auto r = run({"verify", "--list"});
    REQUIRE(r.code == 0);
    auto recs = parse_csv(r.out);
    CHECK(recs.size() == claim_registry().size() + 1);
}

TEST_CASE("bounds output re-verifies") {
    auto r = run({"bounds", "--a", "1", "--n", "101"});
    REQUIRE(r.code == 0);
    auto recs = parse_csv(r.out);
    REQUIRE(recs.size() == 102);
    CHECK(recs[0] == std::vector<std::string>{"x", "lower", "arccos", "upper"});
    for (std::size_t i = 1; i < recs.size(); ++i) {
        double x = num(recs[i][0]);
        double lo = num(recs[i][1]), ac = num(recs[i][2]), up = num(recs[i][3]);
        CHECK(ac == arccos_stable(x));
        CHECK(lo < ac + fp_tolerance(ac));
        CHECK(ac < up + fp_tolerance(ac));
        CHECK(lo == bound_pair(1.0, x).lower);  // 17 digits round-trip exactly
    }

    auto curve = run({"bounds", "--a", "2.7", "--curve", "--n", "11"});
    REQUIRE(curve.code == 0);
    CHECK(parse_csv(curve.out).front().size() == 12);
}

TEST_CASE("minimize and compare") {
    auto m = run({"minimize", "--a", "2.7"});
    REQUIRE(m.code == 0);
    CHECK(num(parse_csv(m.out)[1][1]) == doctest::Approx(0.2042752999).epsilon(1e-8));

    auto c = run({"compare", "--n", "5000", "--format", "json"});
    REQUIRE(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["crossover"].get<double>() == doctest::Approx(0.3409060162).epsilon(1e-9));
}

TEST_CASE("scan streams rows") {
    auto r = run({"scan", "--alpha", "0.5", "--beta", "0.5:1:2", "--gamma", "-1.5:1:3", "--n", "2000"});
    REQUIRE(r.code == 0);
    auto recs = parse_csv(r.out);
    REQUIRE(recs.size() == 7);
    CHECK(recs[0].back() == "note");
    int errors = 0;
    for (std::size_t i = 1; i < recs.size(); ++i) errors += recs[i][3] == "Error";
    CHECK(errors == 1);
}

TEST_CASE("--out writes a file") {
    auto path = std::filesystem::temp_directory_path() / "carlson_cli_out_test.csv";
    std::filesystem::remove(path);
    auto r = run({"eval", "--a", "0", "--x", "0.5", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(parse_csv(ss.str()).size() == 2);
    std::filesystem::remove(path);
}
