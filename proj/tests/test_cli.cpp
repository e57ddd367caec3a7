#include <doctest.h>

#include "fig8/cli.hpp"
#include "fig8/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace fig8;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_config(const RunConfig& c) {
    std::ostringstream out, err;
    int st = run(c, out, err);
    return {st, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("jones at the Kashaev point") {
    RunConfig c;
    c.command = Command::jones;
    c.M = {3};
    c.N = {3};
    Outcome o = run_config(c);
    REQUIRE(o.status == 0);
    auto ls = lines(o.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind("M,N,", 0) == 0);
    CHECK(ls[1].rfind("3,3,0,0,1.30000000000000000000000000000", 0) == 0);
}

TEST_CASE("tv r = 5 gives one row") {
    RunConfig c;
    c.command = Command::tv;
    c.r = {5};
    Outcome o = run_config(c);
    REQUIRE(o.status == 0);
    auto ls = lines(o.out);
    REQUIRE(ls.size() == 2);
    // log 8.30131556174964248389559523684
    CHECK(ls[1].rfind("5,2.11641400365814960913030623789", 0) == 0);

    c.format = OutputFormat::json;
    Outcome j = run_config(c);
    REQUIRE(j.status == 0);
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    const auto& v = doc[0]["TV"];
    CHECK(v.contains("log_mag"));
    CHECK(v.contains("arg_mod_2pi"));
    CHECK(v["decimal"]["re"].get<std::string>().rfind("8.30131556174964248389559523684", 0) == 0);
}

TEST_CASE("configuration errors exit with 2 and a JSON record") {
    RunConfig c;
    c.command = Command::tv;
    c.r = {5};
    c.zeta = 0.3;
    c.delta = 0.3;
    Outcome o = run_config(c);
    CHECK(o.status == 2);
    auto rec = nlohmann::json::parse(o.err);
    CHECK(rec["error"] == "ConfigError");
    CHECK(rec.contains("message"));

    RunConfig p;
    p.command = Command::jones;
    p.M = {200};
    p.N = {200};
    p.precision_bits = 128;
    CHECK(run_config(p).status == 2);
    p.precision_bits.reset();
    CHECK(run_config(p).status == 0);

    RunConfig s;
    s.command = Command::sweep;
    s.estimate = "nope";
    CHECK(run_config(s).status == 2);
}

TEST_CASE("numerical failures exit with 3") {
    RunConfig c;
    c.command = Command::tv;
    c.r = {4};
    Outcome o = run_config(c);
    CHECK(o.status == 3);
    CHECK(nlohmann::json::parse(o.err)["error"] == "DomainError");
}

TEST_CASE("output does not depend on the worker count") {
    RunConfig c;
    c.command = Command::sweep;
    c.estimate = "tv";
    c.r = {21, 41, 61};
    c.workers = 1;
    Outcome a = run_config(c);
    c.workers = 8;
    Outcome b = run_config(c);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 4);
}

TEST_CASE("precision from the environment") {
    RunConfig c;
    CHECK(c.effective_precision() == default_precision_bits());
    setenv("FIG8_PRECISION_BITS", "320", 1);
    CHECK(default_precision_bits() == 320);
    c.command = Command::jones;
    c.M = {3};
    c.N = {3};
    CHECK(c.effective_precision() == 320);
    unsetenv("FIG8_PRECISION_BITS");
    CHECK(default_precision_bits() == 256);
}
