#include "cli/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using qstir::cli::run;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("poly") {
    auto r = call({"poly", "--multiset", "1,2,1", "--method", "both"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "t + 7t^2 + 4t^3"));
    CHECK(contains(r.out, "agree=true"));
    CHECK(contains(r.out, "plus one"));

    r = call({"poly", "--multiset", "2,2", "--method", "words"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "words: t + 3t^2"));

    r = call({"poly", "--multiset", "0,1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "\"0\""));

    r = call({"poly", "--multiset", "1,2,1", "--method", "both", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["polynomials"]["trees"] == "4*t^3 + 7*t^2 + 1*t");
    CHECK(doc["agree"] == true);

    r = call({"poly", "--multiset", "1,2,1", "--format", "csv"});
    CHECK(r.out == "method,polynomial\nwords,4*t^3 + 7*t^2 + 1*t\n");
}

TEST_CASE("verify-identity") {
    auto r = call({"verify-identity", "--multiset", "1,2,1", "--terms", "8"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\npass\n"));

    r = call({"verify-identity", "--multiset", "2,2,2", "--terms", "6", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["K"] == 6);
    CHECK(doc["n"] == 3);
    CHECK(doc["m_max"] == 6);
    REQUIRE(doc["rows"].size() == 7);
    CHECK(doc["rows"][2]["series"] == "20");
    CHECK(doc["rows"][6]["closed_form"] == "4536");
    CHECK(doc["pass"] == true);

    r = call({"verify-identity", "--multiset", "1", "--terms", "5", "--format", "csv"});
    CHECK(r.out == "m,series,closed_form,ok\n0,0,0,true\n1,1,1,true\n2,2,2,true\n3,3,3,true\n"
                   "4,4,4,true\n5,5,5,true\n");
}

TEST_CASE("bijections") {
    auto r = call({"bijections", "--multiset", "1,1,2,1,3,1,2", "--phi-only", "--spot", "27175633545"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(cdes, first, last) = (5, 2, 5)"));
    CHECK(contains(r.out, "= 27175633545"));

    r = call({"bijections", "--multiset", "1,2", "--m", "0..3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "|BT| = 18, |T*| = 18, |P| = 18, closed form = 18"));

    r = call({"bijections", "--multiset", "2,2", "--m", "0..2", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"].size() == 3 + 3 * 3);

    r = call({"bijections", "--multiset", "2,2", "--spot", "1212"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "abab"));
    r = call({"bijections", "--multiset", "1,2", "--spot", "1213"});
    CHECK(r.code == 2);
    r = call({"bijections", "--multiset", "1,2", "--m", "3..1"});
    CHECK(r.code == 2);
    r = call({"bijections", "--multiset", "1,2", "--m", "x"});
    CHECK(r.code == 2);
}

TEST_CASE("analyze") {
    auto r = call({"analyze", "--multiset", "1,2,1"});
    CHECK(r.code == 0);
    for (const char* line : {"all_real=true", "log_concave=true", "unimodal=true", "M'={1^2,2,3}", "equal=true"}) {
        CHECK(contains(r.out, line));
    }

    r = call({"analyze", "--multiset", "2,2,2", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"multiset", "polynomial", "all_real", "all_nonpositive", "log_concave",
                                           "unimodal", "corollary_M_prime", "corollary_equal"});
    CHECK(doc["corollary_M_prime"] == "4,1,1");

    r = call({"analyze", "--multiset", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "polynomial: t\n"));
}

TEST_CASE("count") {
    auto r = call({"count", "--multiset", "2,2,2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "predicted 30, observed 30"));
    CHECK(contains(r.out, "predicted 16, observed 16"));
    r = call({"count", "--multiset", "3,3", "--format", "csv"});
    CHECK(contains(r.out, "words with des = n,\"predicted 5, observed 5\",true"));
}

TEST_CASE("sweep") {
    auto r = call({"sweep", "--max-size", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "checked 3 multisets"));

    r = call({"sweep", "--max-size", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["checked"] == 15);
    CHECK(doc["multisets"][0]["multiset"] == "1");
    CHECK(doc["multisets"][14]["multiset"] == "4");
    // Byte-deterministic output.
    CHECK(call({"sweep", "--max-size", "4", "--format", "json"}).out == r.out);

    r = call({"sweep", "--max-size", "99"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "exceeds cap"));
}

TEST_CASE("usage errors and caps") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"poly"}).code == 2);
    CHECK(call({"poly", "--multiset", "1", "--format", "xml"}).code == 2);
    CHECK(call({"poly", "--multiset", "1", "--method", "magic"}).code == 2);
    CHECK(call({"poly", "--multiset", "1", "--max-size", "0"}).code == 2);
    CHECK(call({"poly", "--multiset", "5,5"}).code == 2);
    CHECK(call({"poly", "--help"}).code == 0);

    ::setenv("QSTIRLING_GLOBAL_CAP", "3", 1);
    CHECK(qstir::cli::global_cap() == 3);
    CHECK(call({"poly", "--multiset", "1,1", "--max-size", "4"}).code == 2);
    CHECK(call({"sweep", "--max-size", "3"}).code == 0);
    ::setenv("QSTIRLING_GLOBAL_CAP", "junk", 1);
    CHECK(qstir::cli::global_cap() == 10);
    ::unsetenv("QSTIRLING_GLOBAL_CAP");
}
