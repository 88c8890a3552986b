// Command line: literal grammar, exit codes, output formats, determinism.
#include "doctest.h"

#include "debyekit/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

using namespace dk;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("literal grammar") {
    PrecisionGuard g(30);
    Real tol = eps_digits(27);
    Polar a = cli::parse_complex("10*exp(1.6i*pi)");
    CHECK(abs(a.r - 10) < tol);
    CHECK(abs(a.theta - Real("1.6") * pi()) < tol);
    Polar b = cli::parse_complex("3+4i");
    CHECK(abs(b.r - 5) < tol);
    CHECK(abs(b.value().im - 4) < tol);
    Polar c = cli::parse_complex("2 exp(-0.5 i pi)");
    CHECK(abs(c.theta + pi() / 2) < tol);
    CHECK(abs(cli::parse_real("pi/3") - pi() / 3) < tol);
    CHECK(abs(cli::parse_real("6pi/13") - 6 * pi() / 13) < tol);
    CHECK(abs(cli::parse_real("sec(pi/3)") - 2) < tol);
    CHECK(abs(cli::parse_real("1.5e-3") - Real("0.0015")) < tol);
    CHECK(abs(cli::parse_real("-2^2") + 4) < tol);
    CHECK(cli::parse_complex("-3").theta == pi());
    CHECK_THROWS_AS(cli::parse_real("1+i"), DomainError);
    CHECK_THROWS_AS(cli::parse_complex("foo"), DomainError);
    CHECK_THROWS_AS(cli::parse_complex("(1+2"), DomainError);
    CHECK_THROWS_AS(cli::parse_complex("1/0"), DomainError);
    CHECK_THROWS_AS(cli::parse_complex(""), DomainError);
}

TEST_CASE("exit codes and error records") {
    auto ok = run({"--digits", "20", "eval", "--fn", "H1", "--nu", "10", "--x", "2", "--method", "debye", "--N", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.err.empty());
    auto sector = run({"eval", "--fn", "H1", "--nu", "10*exp(1.6i*pi)", "--x", "2", "--method", "debye"});
    CHECK(sector.code == 3);
    auto j = nlohmann::json::parse(sector.err);
    CHECK(j["error"] == "sector");
    CHECK(j["exit_code"] == 3);
    CHECK(run({"eval", "--nu", "10"}).code == 2);                // missing x/beta
    CHECK(run({"eval", "--nu", "10", "--x", "0.5"}).code == 2);  // x < 1
    CHECK(run({"--digits", "10", "coeffs", "d", "--n", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--json", "--csv", "coeffs", "d", "--n", "2"}).code == 2);
    CHECK(run({"--digits", "20", "late", "u", "--n", "10", "--M", "10"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval records") {
    auto r = run({"--json", "--digits", "25", "eval", "--fn", "J", "--nu", "8", "--x", "1", "--method", "oracle"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["method"] == "oracle");
    CHECK(j["regime"] == "turning");
    CHECK(j["digits"] == 25);
    // J_8(8) = 0.2234549863511029542836632858...
    CHECK(std::string(j["value_re"]).rfind("2.2345498635110295428366", 0) == 0);

    auto d = run({"--json", "--digits", "25", "debye", "--fn", "H1", "--nu", "10", "--beta", "pi/3"});
    REQUIRE(d.code == 0);
    auto k = nlohmann::json::parse(d.out);
    CHECK(k["N"] == 14);
    CHECK(k.contains("abs_bound"));
    CHECK(k.contains("bound_rule"));

    auto h = run({"--json", "--digits", "25", "hyper", "eval", "--nu", "10", "--x", "2", "--K", "2", "--L", "1"});
    REQUIRE(h.code == 0);
    auto m = nlohmann::json::parse(h.out);
    CHECK(m["K"] == 2);
    CHECK(m["L"] == 1);
    CHECK(m.contains("est_err"));
    CHECK(run({"hyper", "eval", "--fn", "J", "--nu", "10", "--x", "2"}).code == 2);
}

TEST_CASE("tables in paper format and CSV") {
    auto t = run({"--digits", "40", "--paper-format", "tables", "1"});
    REQUIRE(t.code == 0);
    // the printed table truncates this one to ...47599
    CHECK(t.out.find("-0.14230192249287421747600 x 10^56") != std::string::npos);
    CHECK(t.out.find("-0.25922998993906052149604 x 10^111") != std::string::npos);
    auto c = run({"--digits", "40", "--csv", "--paper-format", "tables", "2"});
    REQUIRE(c.code == 0);
    std::istringstream is(c.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "command,table,key,M,quantity,value");
    int rows = 0;
    bool found = false;
    while (std::getline(is, line)) {
        ++rows;
        if (line == "tables,2,25,12,error,-0.26370817691340436761594 x 10^-19") found = true;
    }
    CHECK(rows == 16);
    CHECK(found);
    auto l = run({"--json", "--digits", "40", "late", "table2"});
    CHECK(l.code == 0);
}

TEST_CASE("determinism and the digits default") {
    std::vector<std::string> args{"--json", "--seed", "9", "--digits", "20", "verify", "inequalities"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"--json", "--seed", "10", "--digits", "20", "verify", "inequalities"});
    CHECK(c.out != a.out);

    setenv("DEBYEKIT_DIGITS", "22", 1);
    CHECK(cli::default_digits() == 22);
    auto e = run({"--json", "coeffs", "d", "--n", "1"});
    CHECK(nlohmann::json::parse(e.out)["digits"] == 22);
    setenv("DEBYEKIT_DIGITS", "x", 1);
    CHECK(run({"coeffs", "d", "--n", "1"}).code == 2);
    unsetenv("DEBYEKIT_DIGITS");
    CHECK(cli::default_digits() == 60);
}

TEST_CASE("verify reports failures through the exit code") {
    auto r = run({"--digits", "20", "verify", "no-such-suite"});
    CHECK(r.code == 2);
    auto ok = run({"--digits", "30", "verify", "coeffs"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS coeffs") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);
}
