#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/cli.hpp"
#include "goldman/io.hpp"

#include <sstream>

using namespace goldman;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return parse_json_text(r.out); }

}  // namespace

TEST_CASE("documented examples") {
  Run pair = run({"pair", "--closed", "1", "a1^2 a2", "a1 a2^3"});
  CHECK(pair.code == kExitOk);
  CHECK(json_of(pair).dump() == R"({"value":"5"})");

  Run center = run({"center", "--boundary", "1", "3"});
  CHECK(json_of(center).dump() == R"({"generators":["a3","a4"]})");
  CHECK(json_of(run({"center", "--closed", "2"})).dump() == R"({"generators":[]})");

  Run proj = run({"chain-project", "--n", "1", "--c", "1", "a1^5"});
  CHECK(json_of(proj).dump() == R"({"word":"a1"})");
  CHECK(json_of(run({"chain-project", "--n", "3", "--c", "1", "a1^8 a2"})).dump() ==
        R"({"word":"a2"})");
}

TEST_CASE("bracket and ab") {
  Run b = run({"bracket", "--closed", "1", "a1^2 a2", "a1 a2^3"});
  CHECK(json_of(b).dump() == R"({"ring":"Z","terms":[{"exp":[3,4],"coef":"5"}]})");
  Run q = run({"bracket", "--closed", "1",
               R"({"ring":"Q","terms":[{"exp":[1,0],"coef":"1/2"}]})", "a2"});
  CHECK(json_of(q).dump() == R"({"ring":"Q","terms":[{"exp":[1,1],"coef":"1/2"}]})");
  Run a = run({"ab", "--n", "2", "--term", "1:a1 a2 a1^-1", "--term", "-1:a2"});
  CHECK(json_of(a).dump() == R"({"ring":"Z","terms":[]})");
  Run aq = run({"ab", "--closed", "1", "--term", "1/2:a1", "--term", "1/2:a1"});
  CHECK(json_of(aq).dump() == R"({"ring":"Q","terms":[{"exp":[1,0],"coef":"1"}]})");
  CHECK(run({"ab", "--n", "2", "--ring", "Z", "--term", "1/2:a1"}).code == kExitUsage);
  CHECK(run({"ab", "--n", "2", "--term", "a1"}).code == kExitUsage);
}

TEST_CASE("ideal-check verdicts and exit codes") {
  Run ik = run({"ideal-check", "--closed", "1", "--rule", "ik", "--K", "[(1,0)]", "--box", "10",
                "--samples", "10000", "--seed", "7"});
  CHECK(ik.code == kExitOk);
  Json j = json_of(ik);
  CHECK(j["verdict"] == true);
  CHECK(j["seed"] == 7);

  const std::string table =
      R"({"box":10,"default":"1","entries":[{"exp":[1,0],"alpha":"2"},{"exp":[1,1],"alpha":"3"}]})";
  Run bad = run({"ideal-check", "--closed", "1", "--rule", "table", "--table", table, "--box",
                 "2", "--exhaustive"});
  CHECK(bad.code == kExitFalse);
  CHECK(json_of(bad)["verdict"] == false);
  CHECK(json_of(bad).contains("counterexample"));
  Run prop = run({"ideal-check", "--closed", "1", "--rule", "table", "--table", table, "--box",
                  "2", "--exhaustive", "--criterion", "divisibility"});
  CHECK(prop.code == kExitFalse);

  // sampled checks need an explicit seed
  CHECK(run({"ideal-check", "--closed", "1", "--rule", "ik", "--K", "[]", "--box", "3"}).code ==
        kExitUsage);
}

TEST_CASE("ik-family") {
  Run r = run({"ik-family", "--closed", "1", "--K0", "[(1,0)]", "--count", "3"});
  CHECK(r.code == kExitOk);
  Json j = json_of(r);
  REQUIRE(j["family"].size() == 3);
  CHECK(j["family"][0]["K"].dump() == "[[1,0]]");
  CHECK(j["family"][2]["K"].size() == 3);
}

TEST_CASE("ideal-closure and ideal-member") {
  const std::string gen =
      R"({"ring":"Q","terms":[{"exp":[1,0,0],"coef":"2"},{"exp":[1,0,1],"coef":"3"},{"exp":[0,0,2],"coef":"5"}]})";
  Run c = run({"ideal-closure", "--boundary", "1", "2", "--gen", gen});
  CHECK(c.code == kExitOk);
  Json ideal = json_of(c);
  CHECK(ideal["labels"].dump() ==
        R"([{"ring":"Q","terms":[{"exp":[0,0,0],"coef":"1"},{"exp":[0,0,1],"coef":"3/2"}]}])");
  CHECK(ideal["central_basis"].dump() ==
        R"([{"ring":"Q","terms":[{"exp":[0,0,2],"coef":"1"}]}])");

  Run in = run({"ideal-member", "--boundary", "1", "2", "--ideal", ideal.dump(), "--elem", gen});
  CHECK(in.code == kExitOk);
  CHECK(json_of(in)["verdict"] == true);
  Run out = run({"ideal-member", "--boundary", "1", "2", "--ideal", ideal.dump(), "--elem",
                 R"({"ring":"Z","terms":[{"exp":[0,0,1],"coef":"1"}]})"});
  CHECK(out.code == kExitFalse);
  CHECK(json_of(out)["verdict"] == false);
  CHECK(run({"ideal-member", "--boundary", "1", "2", "--ideal", "{}", "--elem", gen}).code ==
        kExitUsage);
}

TEST_CASE("chain-separate") {
  Run sep = run({"chain-separate", "--c", "1", "a1^8", ""});
  CHECK(sep.code == kExitOk);
  CHECK(json_of(sep)["level"] == 4);
  Run conj = run({"chain-separate", "--c", "1", "a1 a2", "a2 a1"});
  CHECK(conj.code == kExitFalse);
  Run far = run({"chain-separate", "--c", "1", "--nmax", "2", "a1^64", ""});
  CHECK(far.code == kExitFalse);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"pair", "--closed", "1", "a3", "a1"}).code == kExitUsage);
  CHECK(run({"pair", "--closed", "1", "--boundary", "1", "2", "a1", "a1"}).code == kExitUsage);
  CHECK(run({"pair", "a1", "a2"}).code == kExitUsage);
  CHECK(run({"pair", "--closed", "1", "a1^", "a2"}).code == kExitUsage);
  CHECK(run({"center", "--boundary", "0", "1"}).code == kExitUsage);
  CHECK(run({"selftest"}).code == kExitUsage);
  CHECK(run({"chain-project", "--n", "1", "--c", "3", "--rank", "2", "a1"}).code == kExitUsage);
}

TEST_CASE("text format") {
  Run t = run({"pair", "--closed", "1", "--format", "text", "a1", "a2"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find('5') == std::string::npos);
  CHECK(t.out.find("value") != std::string::npos);
  CHECK(t.out.find('{') == std::string::npos);
}

TEST_CASE("selftest output is deterministic") {
  Run a = run({"selftest", "--seed", "5", "--scale", "0.01"});
  Run b = run({"selftest", "--seed", "5", "--scale", "0.01"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  Json j = json_of(a);
  CHECK(j["verdict"] == true);
  CHECK(j["seed"] == 5);
  Run zero = run({"selftest", "--seed", "1", "--scale", "0"});
  CHECK(zero.code == kExitOk);
  for (const auto& s : json_of(zero)["suites"]) {
    CHECK(s["cases"] == 0);
  }
  Run faulty = run({"selftest", "--seed", "5", "--scale", "0.01", "--inject-fault", "pairing-sign"});
  CHECK(faulty.code == kExitFalse);
  CHECK(json_of(faulty)["verdict"] == false);
}
