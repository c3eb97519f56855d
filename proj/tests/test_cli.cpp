#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hilbertk/cli.hpp"

using hilbertk::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("field subcommand") {
  const auto r = call({"field", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "elliptic trace candidates: 7"));
  CHECK(contains(r.out, "allowed orders: 2 3 5"));
  CHECK_FALSE(contains(r.out, "sigma1"));
  CHECK(contains(call({"field", "5", "--approx"}).out, "sigma1 ~ 1.618033989"));
  CHECK(call({"field", "12"}).code == 2);
  CHECK(call({"field", "x"}).code == 2);
  CHECK(call({"field"}).code == 2);
}

TEST_CASE("ranks subcommand") {
  const auto r = call({"ranks", "5", "--q", "5,7,1,2,0,-1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  std::vector<int> got;
  for (const auto& row : j["result"]["rows"]) got.push_back(row["rank_diff"].get<int>());
  CHECK(got == std::vector<int>{8, 6, 2, 0, 0, 0});
  CHECK(j["result"]["rows"][0]["case"] == "q>2, q=1 mod 4");
  CHECK(j["provenance"]["class_counts"] == "paper-table");

  const auto user = json::parse(call({"ranks", "--classes", "2:1,3:1", "--q", "1", "--json"}).out);
  CHECK(user["provenance"]["class_counts"] == "user-input");
  CHECK(user["result"]["rows"][0]["rank_diff"] == 0);

  CHECK(call({"ranks", "7", "--q", "1"}).code == 3);
  CHECK(call({"ranks", "5", "--classes", "4:1"}).code == 2);
  CHECK(call({"ranks", "--q", "1"}).code == 2);
  CHECK(call({"ranks", "5", "--q", "a"}).code == 2);
}

TEST_CASE("whitehead subcommand") {
  CHECK(contains(call({"whitehead", "5", "--mode", "psl", "--q", "1"}).out, "Z^2"));
  CHECK(contains(call({"whitehead", "5", "--mode", "sl", "--q", "1"}).out, "Z^2 + Z/2"));
  CHECK(contains(call({"whitehead", "5"}).out, "2*Wh_q(Z_2) + 2*Wh_q(Z_3) + 2*Wh_q(Z_5)"));
  CHECK(contains(call({"whitehead", "--classes", "2:1,3:1", "--mode", "sl", "--q", "1", "--ab", "Z/6"}).out,
                 "Z/6 + Z/2"));
  CHECK(call({"whitehead", "--classes", "2:1,3:1", "--mode", "sl", "--q", "1"}).code == 4);
  CHECK(call({"whitehead", "5", "--mode", "sl", "--q", "2"}).code == 2);
  CHECK(call({"whitehead", "5", "--mode", "sl"}).code == 2);
  CHECK(call({"whitehead", "5", "--mode", "gl"}).code == 2);
  CHECK(call({"whitehead", "7"}).code == 3);
  CHECK(call({"whitehead", "5", "--mode", "sl", "--q", "-1"}).code == 0);
}

TEST_CASE("reps, classnum and chains subcommands") {
  const auto reps = json::parse(call({"reps", "6", "--json"}).out);
  CHECK(reps["result"]["r"] == 4);
  CHECK(reps["result"]["primes"]["3"]["k_p"] == 4);
  CHECK(call({"reps", "0"}).code == 2);

  const auto cn = call({"classnum", "-23"});
  CHECK(cn.code == 0);
  CHECK(contains(cn.out, "h(-23) = 3"));
  CHECK(call({"classnum", "-5"}).code == 2);

  const auto ch = call({"chains", "--poset", "sl", "--m", "2", "--p", "1", "--page", "relative"});
  CHECK(ch.code == 0);
  CHECK(contains(ch.out, "5 chains"));
  CHECK(call({"chains", "--poset", "sl", "--m", "2", "--p", "1", "--page", "absolute"}).code == 2);
  CHECK(call({"chains", "--poset", "tree", "--m", "2", "--p", "1"}).code == 2);
  CHECK(call({"chains", "--poset", "psl", "--m", "-1", "--p", "1"}).code == 2);
}

TEST_CASE("unknown or missing subcommand") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("JSON envelopes are stable and fully tagged") {
  const std::vector<std::vector<std::string>> commands{
      {"field", "5", "--json"},
      {"field", "2", "--approx", "--json"},
      {"ranks", "5", "--json"},
      {"whitehead", "5", "--json"},
      {"whitehead", "5", "--mode", "sl", "--q", "0", "--json"},
      {"reps", "12", "--json"},
      {"classnum", "-23", "--json"},
      {"chains", "--poset", "psl", "--m", "3", "--p", "0", "--page", "absolute", "--json"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const auto r = call(args);
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["schema_version"] == hilbertk::cli::kSchemaVersion);
    CHECK(j["command"] == args[0]);
    CHECK(j.contains("inputs"));
    for (const auto& [key, value] : j["result"].items()) {
      CAPTURE(key);
      REQUIRE(j["provenance"].contains(key));
      const auto tag = j["provenance"][key].get<std::string>();
      CHECK((tag == "paper-table" || tag == "computed" || tag == "user-input"));
    }
  }
}
