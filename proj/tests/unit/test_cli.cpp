#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"
#include "weylres/projections.hpp"
#include "weylres/symbol.hpp"

using namespace weylres;
using namespace weylres::cli;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "weylres");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex parsing") {
    CHECK(parse_complex("0") == Complex(0.0));
    CHECK(parse_complex("-1.5") == Complex(-1.5));
    CHECK(parse_complex("0.9i") == Complex(0.0, 0.9));
    CHECK(parse_complex("-2+3i") == Complex(-2.0, 3.0));
    CHECK(parse_complex("1e-3-2.5i") == Complex(1e-3, -2.5));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK_THROWS_AS(parse_complex("2+"), UsageError);
    CHECK_THROWS_AS(parse_complex("abc"), UsageError);
}

TEST_CASE("dimension and range parsing") {
    CHECK(parse_dims("3") == std::vector<int>{3});
    CHECK(parse_dims("1:4") == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(parse_dims("two"), UsageError);
    CHECK_THROWS_AS(parse_dims("4:1"), UsageError);
    CHECK(parse_rho("2.5") == std::vector<double>{2.5});
    const std::vector<double> lin = parse_rho("0:1:5:lin");
    CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const std::vector<double> lg = parse_rho("1e-3:1e2:6:log");
    CHECK(lg == std::vector<double>{1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0});
    CHECK_THROWS_AS(parse_rho("0:1:5:log"), UsageError);
    CHECK_THROWS_AS(parse_rho("1:2:0:lin"), UsageError);
    CHECK_THROWS_AS(parse_rho("1:2:3:cubic"), UsageError);
    // value ranges are checked once the whole command line is known
    CHECK(invoke({"eval", "--d", "0", "--rho", "1"}).status == 2);
    CHECK(invoke({"eval", "--d", "1", "--rho=-1"}).status == 2);
}

TEST_CASE("eval: example row") {
    const Outcome o = invoke({"eval", "--d", "2", "--z", "0", "--rho", "1"});
    REQUIRE(o.status == 0);
    const nlohmann::json j = nlohmann::json::parse(o.out);
    CHECK(j["command"] == "eval");
    REQUIRE(j["rows"].size() == 1);
    const auto& row = j["rows"][0];
    CHECK(row["value_re"].get<double>() == doctest::Approx(0.632120559).epsilon(1e-9));
    CHECK(row["value_im"].get<double>() == 0.0);
    CHECK(row["err_est"].get<double>() <= 1e-10);
    CHECK(row["rho"].get<double>() == 1.0);
    CHECK(j["failures"].empty());
}

TEST_CASE("projection: example row") {
    const Outcome o = invoke({"projection", "--d", "1", "--n", "0", "--rho", "0"});
    REQUIRE(o.status == 0);
    const nlohmann::json j = nlohmann::json::parse(o.out);
    CHECK(j["rows"][0]["value_re"].get<double>() == 2.0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"bogus"}).status == 2);
    CHECK(invoke({"eval", "--d", "2"}).status == 2);
    CHECK(invoke({"eval", "--d", "2", "--rho", "1", "--tol", "1"}).status == 2);
    CHECK(invoke({"eval", "--d", "2", "--rho", "1", "--tol", "0"}).status == 2);
    CHECK(invoke({"eval", "--d", "2", "--rho", "1", "--method", "magic"}).status == 2);
    CHECK(invoke({"eval", "--d", "2", "--rho", "1", "--format", "xml"}).status == 2);
    CHECK(invoke({"eval", "--d", "2", "--rho", "1", "--z", "1+"}).status == 2);
    const Outcome o = invoke({"eval", "--d", "x", "--rho", "1"});
    CHECK(o.status == 2);
    CHECK_FALSE(o.err.empty());
}

TEST_CASE("both ways of passing z agree") {
    const Outcome a = invoke({"eval", "--d", "3", "--z=-2+3i", "--rho", "0.7"});
    const Outcome b = invoke({"eval", "--d", "3", "--z-re", "-2", "--z-im", "3", "--rho", "0.7"});
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    CHECK(nlohmann::json::parse(a.out)["rows"] == nlohmann::json::parse(b.out)["rows"]);
}

TEST_CASE("JSON report round-trips bit for bit") {
    const Outcome o = invoke({"eval", "--d", "1:3", "--z", "0.5+0.9i", "--rho", "1e-3:1e2:11:log"});
    REQUIRE(o.status == 0);
    const nlohmann::json j = nlohmann::json::parse(o.out);
    const Complex z(j["inputs"]["z_re"].get<double>(), j["inputs"]["z_im"].get<double>());
    REQUIRE(j["rows"].size() == 33);
    for (const auto& row : j["rows"]) {
        const ProblemPoint p{row["d"].get<int>(), z, row["rho"].get<double>()};
        const Method m = *parse_method(row["method"].get<std::string>());
        const EvalResult r = symbol::eval(p, m);
        CHECK(r.value.real() == row["value_re"].get<double>());
        CHECK(r.value.imag() == row["value_im"].get<double>());
        CHECK(r.abs_error_estimate == row["err_est"].get<double>());
    }
}

TEST_CASE("CSV mirrors the JSON rows") {
    const Outcome js = invoke({"eval", "--d", "2", "--rho", "0.5:2:3:lin"});
    const Outcome cs = invoke({"eval", "--d", "2", "--rho", "0.5:2:3:lin", "--format", "csv"});
    REQUIRE(cs.status == 0);
    std::istringstream lines(cs.out);
    std::string header, line;
    std::getline(lines, header);
    CHECK(header.rfind("rho,value_re,value_im,err_est,method", 0) == 0);
    int count = 0;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++count;
    }
    CHECK(count == static_cast<int>(nlohmann::json::parse(js.out)["rows"].size()));
}

TEST_CASE("other commands produce rows") {
    const Outcome coeffs = invoke({"series-coeffs", "--d", "2", "--k", "4"});
    REQUIRE(coeffs.status == 0);
    const nlohmann::json c = nlohmann::json::parse(coeffs.out);
    REQUIRE(c["rows"].size() == 5);
    CHECK(c["rows"][1]["value_re"].get<double>() == doctest::Approx(-0.5));
    CHECK(c["rows"][1]["rho"].is_null());

    const Outcome deriv = invoke({"derivative", "--d", "2", "--rho", "1", "--n", "1"});
    REQUIRE(deriv.status == 0);
    CHECK(nlohmann::json::parse(deriv.out)["rows"][0]["value_re"].get<double>() ==
          doctest::Approx(2.0 * std::exp(-1.0) - 1.0).epsilon(1e-12));

    const Outcome asym = invoke({"asymptotic", "--d", "3", "--z", "1", "--rho", "1000", "--n", "3"});
    REQUIRE(asym.status == 0);
    CHECK(nlohmann::json::parse(asym.out)["rows"][0]["method"] == "asymptotic");

    const Outcome cert = invoke({"certify", "--d", "2", "--z", "-1", "--n", "3", "--method", "quadrature"});
    REQUIRE(cert.status == 0);
    const nlohmann::json ce = nlohmann::json::parse(cert.out);
    CHECK(ce["rows"].size() == 4);
    CHECK(ce["rows"][0]["rho"].is_null());
    CHECK(ce["failures"].empty());
}

TEST_CASE("verify: example run passes and is deterministic by seed") {
    const Outcome a = invoke({"verify", "--d", "1:4", "--tol", "1e-8"});
    CHECK(a.status == 0);
    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j["failures"].empty());
    CHECK(j["rows"].size() > 0);
    const Outcome b = invoke({"verify", "--d", "1:4", "--tol", "1e-8"});
    CHECK(a.out == b.out);
    const Outcome c = invoke({"verify", "--d", "2", "--rho", "0.5", "--seed", "5"});
    const Outcome e = invoke({"verify", "--d", "2", "--rho", "0.5", "--seed", "5"});
    const Outcome f = invoke({"verify", "--d", "2", "--rho", "0.5", "--seed", "6"});
    CHECK(c.status == 0);
    CHECK(c.out == e.out);
    CHECK(c.out != f.out);
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "weylres_cli_test_report.json";
    const Outcome o = invoke({"eval", "--d", "2", "--rho", "1", "--out", path});
    REQUIRE(o.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["rows"].size() == 1);
    in.close();
    std::remove(path.c_str());
}
