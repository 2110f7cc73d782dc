#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace sympow;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SYMPOW_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CheckFermatBoth) {
  Outcome o = run({"check", "fermat:3", "--field", "GF(7)", "--method", "both", "--json"});
  ASSERT_EQ(o.code, cli::ok) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["target"], "fermat:3");
  EXPECT_EQ(j["field"], "GF(7)");
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["r"], 2);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["method"], "criterion");
  EXPECT_EQ(j["results"][0]["contained"], false);
  EXPECT_EQ(j["results"][1]["method"], "oracle");
  EXPECT_EQ(j["results"][1]["contained"], false);
  EXPECT_TRUE(j["results"][1]["witness"].is_string());
  EXPECT_TRUE(j["timings_ms"].contains("oracle"));
  EXPECT_EQ(j["version"], cli::kVersion);
}

TEST(Cli, JsonIsStableApartFromTimings) {
  auto strip = [](std::string text) {
    json j = json::parse(text);
    j.erase("timings_ms");
    return j.dump();
  };
  std::vector<std::string> args{"check", "star3", "--field", "Q", "--json"};
  EXPECT_EQ(strip(run(args).out), strip(run(args).out));
}

TEST(Cli, StarAndKlein) {
  Outcome star = run({"check", "star3", "--field", "Q", "--json"});
  ASSERT_EQ(star.code, cli::ok);
  json j = json::parse(star.out);
  for (const auto& r : j["results"]) EXPECT_EQ(r["contained"], true);
  EXPECT_EQ(j["results"][0]["certificate"].size(), 12u);

  Outcome klein = run({"check", "klein", "--field", "GF(11)", "--method", "criterion"});
  EXPECT_EQ(klein.code, cli::ok);
  EXPECT_NE(klein.out.find("criterion: not contained"), std::string::npos);
}

TEST(Cli, CharacteristicThree) {
  Outcome o = run({"check", "star3", "--field", "GF(3)", "--json"});
  EXPECT_EQ(o.code, cli::characteristic_refused);
  json j = json::parse(o.out);
  EXPECT_TRUE(j["results"][0]["contained"].is_null());
  EXPECT_EQ(j["results"][1]["contained"], true);
  EXPECT_TRUE(j["results"][1].contains("note"));
  EXPECT_NE(cli::characteristic_refused, cli::disagreement);
}

TEST(Cli, Resolve) {
  Outcome o = run({"resolve", "fermat:3", "--field", "GF(7)", "--power", "3", "--json"});
  ASSERT_EQ(o.code, cli::ok) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["betti"]["ranks"], json({10, 12, 3}));
  EXPECT_EQ(j["betti"]["ranks"], j["betti"]["predicted"]["ranks"]);
  EXPECT_EQ(j["last_map_matches_Y"], true);
  EXPECT_EQ(run({"resolve", "star3", "--power", "4"}).code, cli::usage_error);
}

TEST(Cli, SyzygyAndPoints) {
  json s = json::parse(run({"syzygy", "klein", "--field", "GF(11)", "--json"}).out);
  EXPECT_EQ(s["degrees"], json({3, 5}));
  json p = json::parse(run({"points", "klein", "--field", "GF(11)", "--json"}).out);
  EXPECT_EQ(p["points"].size(), 49u);
  EXPECT_EQ(p["multiplicity"], 49);
  EXPECT_EQ(p["incidence"], json::parse(R"([{"lines":3,"points":28},{"lines":4,"points":21}])"));
  EXPECT_EQ(p["pair_count"], 210);
}

TEST(Cli, Witness) {
  json w = json::parse(run({"witness", "klein", "--field", "GF(11)", "--json"}).out);
  EXPECT_EQ(w["in_symbolic_power"], true);
  EXPECT_EQ(w["in_ordinary_power"], false);
  json nine = json::parse(run({"witness", "fermat:3", "--field", "GF(7)", "--form",
                               "(x^3-y^3)*(y^3-z^3)*(z^3-x^3)", "--json"})
                              .out);
  EXPECT_EQ(nine["witness"], true);
}

TEST(Cli, IdealFiles) {
  Outcome star = run({"check", data("star.ideal"), "--json"});
  ASSERT_EQ(star.code, cli::ok) << star.err;
  EXPECT_EQ(json::parse(star.out)["field"], "Q");
  Outcome fermat = run({"check", data("fermat3.ideal")});
  EXPECT_EQ(fermat.code, cli::ok) << fermat.err;
  EXPECT_NE(fermat.out.find("methods agree"), std::string::npos);
  EXPECT_EQ(run({"check", data("fermat3.ideal"), "--field", "GF(11)"}).code, cli::usage_error);
  EXPECT_EQ(run({"check", data("missing.ideal")}).code, cli::usage_error);
  EXPECT_EQ(run({"points", data("star.ideal")}).code, cli::usage_error);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::usage_error);
  EXPECT_EQ(run({"check", "star3", "--method", "guess"}).code, cli::usage_error);
  EXPECT_EQ(run({"check", "star3", "--m", "4"}).code, cli::usage_error);
  EXPECT_EQ(run({"check", "star3", "--m", "4", "--method", "oracle"}).code, cli::ok);
  EXPECT_EQ(run({"check", "fermat:3", "--field", "GF(5)"}).code, cli::hypothesis_failed);
}
