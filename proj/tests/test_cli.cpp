#include <doctest.h>

#include <sstream>

#include "arcinv/cli.hpp"
#include "arcinv/io.hpp"

using namespace arcinv;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("normalize") {
    auto r = run({"normalize", "-2*x1^3 + x2^2 - x3^2"});
    CHECK(r.status == 0);
    CHECK(r.out == "x1^2 - x2^2 - x3^3\n");
    r = run({"normalize", "x1^2 + x1^3"});
    CHECK(r.status == 2);
    CHECK(contains(r.err, "repeated variable"));
    CHECK(run({"normalize", "-x1^4"}).out == "-x1^4\n");
}

TEST_CASE("classify exit statuses") {
    auto r = run({"classify", "x1^2+x2^4+x3^4", "-x1^2-x2^4-x3^4"});
    CHECK(r.status == 1);
    CHECK(contains(r.out, "sign-mismatch at exponent 2"));
    CHECK(run({"classify", "x1^3+x2^6", "x1^3-x2^6"}).status == 0);
    r = run({"classify", "x1^2", "x1^4"});
    CHECK(r.status == 1);
    CHECK(contains(r.out, "exponent-mismatch"));
    CHECK(run({"classify", "x1^2", "x1^2+x2^2"}).status == 2);
    CHECK(run({"classify", "x1^2", "x1^^2"}).status == 2);
    const json j = json::parse(run({"classify", "x1^2", "x1^4", "--format", "json"}).out);
    CHECK(j["reason"] == "exponent-mismatch");
    CHECK(j["equivalent"] == false);
}

TEST_CASE("fiber") {
    auto r = run({"fiber", "x1^4 - x2^4", "0"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "2*u - 1"));
    CHECK(contains(r.out, "chi_c:     -3"));
    r = run({"fiber", "-x1^2 - x2^2", "1"});
    CHECK(contains(r.out, "closed:    0"));
    CHECK(run({"fiber", "x1^2 + x2^2", "-1"}).status == 0);
    CHECK(run({"fiber", "x1^2", "2"}).status == 2);
    const json j = json::parse(run({"fiber", "x1^2 + x2^4", "1", "--format", "json"}).out);
    CHECK(laurent_from_json(j["beta"]) == LaurentPoly::power(1) + 1);
    CHECK(j["chi_c"] == 0);
    // With an odd exponent chi_c is read off beta at u = -1.
    CHECK(json::parse(run({"fiber", "x1^2 + x2^3", "0", "--format", "json"}).out)["chi_c"] == -1);
}

TEST_CASE("zeta") {
    auto r = run({"zeta", "x1^2+x2^2", "--order", "2"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "bbar: -u + 1  fplus: -1  fminus: -1"));
    r = run({"zeta", "x1^2", "--kind", "plain", "--order", "2", "--format", "csv"});
    CHECK(r.out == "n,bbar,fplus,fminus\n1,\"0\",\"0\",\"0\"\n2,\"1 - u^-1\",\"2*u^-1\",\"0\"\n");
    const json j = json::parse(run({"zeta", "x1^4 - x2^4", "--format", "json"}).out);
    CHECK(j["order"] == 8);
    CHECK(zeta_from_json<ZetaKind::modified>(j) == modified_zeta(parse("x1^4 - x2^4"), 8));
    CHECK(run({"zeta", "x1^2", "--kind", "other"}).status == 2);
    CHECK(run({"zeta", "x1^2", "--order", "0"}).status == 2);
}

TEST_CASE("recover") {
    auto r = run({"recover", "x1^4 - x2^4"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "sigma+=1  sigma-=1"));
    CHECK(contains(r.out, "branch=negative"));
    const json j = json::parse(run({"recover", "x1^2 - x2^4", "--format", "json"}).out);
    REQUIRE(j.size() == 2);
    CHECK(j[1]["k"] == 4);
    CHECK(j[1]["sigma_minus"] == 1);
    CHECK(j[1]["branch"] == "positive");
}

TEST_CASE("table") {
    auto r = run({"table", "--min-d", "1", "--max-d", "1", "--max-exp", "3"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "# d=1: 3 classes"));
    r = run({"table", "--min-d", "2", "--max-d", "2", "--max-exp", "2", "--format", "json"});
    std::istringstream lines(r.out);
    std::string line, last;
    std::size_t records = 0;
    while (std::getline(lines, line)) {
        if (!json::parse(line).contains("summary")) ++records;
        last = line;
    }
    CHECK(records == 3);
    CHECK(json::parse(last)["summary"]["classes"] == 3);
    r = run({"table", "--max-d", "1", "--max-exp", "2", "--format", "csv"});
    CHECK(r.out.rfind("polynomial,representative,class,K,sign_counts\n", 0) == 0);
    CHECK(run({"table", "--min-d", "3", "--max-d", "2"}).status == 2);
}

TEST_CASE("selfcheck and usage errors") {
    auto r = run({"selfcheck", "--max-d", "1", "--max-exp", "4", "--order", "8"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "all suites passed"));
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}
