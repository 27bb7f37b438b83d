#include <gtest/gtest.h>

#include <filesystem>

#include "qschubert/cli.hpp"

using namespace qschubert;
using namespace qschubert::cli;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qschubert_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(CliDegree, AnchorAndSmallCases) {
  const Caps caps;
  const Json all = cmd_degree(3, 2, 1, "all", caps);
  EXPECT_EQ(all["value"], "55");
  EXPECT_TRUE(all["agree"].get<bool>());
  EXPECT_EQ(all["methods"].size(), 5u);
  EXPECT_EQ(cmd_degree(2, 2, 0, "all", caps)["value"], "2");
  EXPECT_EQ(cmd_degree(5, 1, 7, "all", caps)["value"], "1");
  EXPECT_EQ(cmd_degree(3, 2, 1, "ring", caps)["methods"].size(), 1u);
  EXPECT_THROW(cmd_degree(3, 2, 1, "guess", caps), ValidationError);
  EXPECT_THROW(cmd_degree(0, 2, 1, "all", caps), ValidationError);
}

TEST(CliDegree, CapIsAnErrorNotATruncation) {
  Caps caps;
  caps.poset = 10;
  try {
    cmd_degree(2, 2, 9, "chains", caps);
    FAIL() << "cap not enforced";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), "poset");
  }
  EXPECT_EQ(cmd_degree(2, 2, 9, "closed", caps)["agree"], true);
}

TEST(CliPoset, Dumps) {
  const Caps caps;
  const Json fig = cmd_poset(3, 2, 1, true, caps);
  EXPECT_EQ(fig["size"], 20);
  EXPECT_EQ(fig["elements"].size(), 20u);
  EXPECT_EQ(fig["elements"].back()["chains"], "55");
  const Json chain = cmd_poset(3, 1, 2, true, caps);
  EXPECT_EQ(chain["size"], 2 * 4 + 3 + 1);
  for (const auto& e : chain["elements"]) EXPECT_LE(e["covers"].size(), 1u);
  const Json g24 = cmd_poset(2, 2, 0, true, caps);
  EXPECT_EQ(g24["size"], 6);
  EXPECT_EQ(g24["degree"], "2");
  EXPECT_FALSE(cmd_poset(2, 2, 0, false, caps).contains("elements"));
}

TEST(CliQlr, TopClassSquaresToQSquared) {
  const Json r = cmd_qlr({3, 4}, {3, 4}, 2, 2);
  ASSERT_EQ(r["entries"].size(), 1u);
  EXPECT_EQ(r["entries"][0]["d"], 2);
  EXPECT_EQ(r["entries"][0]["n"], "1");
}

TEST(CliVi, InitialConditionAndCorrelators) {
  const Caps caps;
  const Json r = cmd_vi({1, 2}, 2, 2, "high", caps);
  EXPECT_EQ(r["exact"], "1");
  EXPECT_EQ(r["numeric"]["nearest"], "1");
  EXPECT_LT(std::stod(r["deviation"].get<std::string>()), 1e-9);
  EXPECT_EQ(cmd_vi({1, 2}, 2, 2, "double", caps)["numeric"]["nearest"], "1");
  EXPECT_TRUE(cmd_vi({0, 1}, 2, 2, "high", caps)["numeric"].is_null());
  EXPECT_THROW(cmd_vi({1, 2}, 2, 2, "quad", caps), ValidationError);
  EXPECT_THROW(cmd_vi({1, 2, 3}, 2, 2, "high", caps), ValidationError);

  const Json c = cmd_correlator("c1^8", 0, 2, 2, "high", caps);
  EXPECT_EQ(c["exact"], "8");
  EXPECT_EQ(c["degree"], 1);
  EXPECT_EQ(cmd_correlator("", 1, 2, 2, "high", caps)["numeric"]["nearest"], "6");
  EXPECT_EQ(cmd_correlator("c1^2 S(2,4)", 0, 2, 2, "high", caps)["classes"].size(), 3u);
  EXPECT_THROW(cmd_correlator("x7", 0, 2, 2, "high", caps), ValidationError);
}

TEST(CliIdeal, CountsAndQuadrics) {
  const Caps caps;
  const Json r = cmd_ideal(2, 2, 0, 3, true, 7, caps);
  EXPECT_EQ(r["incomparable_pairs"], 1);
  EXPECT_EQ(r["degree"], "2");
  EXPECT_EQ(r["hilbert"][1], "6");
  ASSERT_EQ(r["quadrics"]["basis"].size(), 1u);
  EXPECT_EQ(r["quadrics"]["basis"][0]["(1,3)^(0)*(2,4)^(0)"], "-1");
  EXPECT_EQ(cmd_ideal(3, 2, 1, 2, false, 7, caps)["degree"], "55");
  Caps tight;
  tight.samples = 10;
  EXPECT_THROW(cmd_ideal(2, 2, 1, 2, true, 7, tight), CapExceeded);
}

TEST(CliPolePlace, InputAndRandom) {
  const Json input = Json::parse(R"({
    "planes": [[[1,0],[0,1],[2,3],[5,7]], [[1,0],[0,1],["1/2",4],[1,1]],
               [[1,0],[0,1],[3,1],[2,9]], [[1,0],[0,1],[-2,5],[6,1]]],
    "s": [1, 2, "-1", "1/3"]})");
  const Json r = cmd_poleplace(input, 1, 0);
  EXPECT_TRUE(r["verified"].get<bool>());
  if (r["degeneracy"].is_null()) EXPECT_EQ(r["solutions_with_multiplicity"], 2);
  const Json batch = cmd_poleplace(std::nullopt, 5, 11);
  EXPECT_EQ(batch["instances"].size(), 5u);
  EXPECT_EQ(batch["summary"]["count"], 5);
  EXPECT_THROW(cmd_poleplace(Json::parse(R"({"planes": []})"), 1, 0), ValidationError);
}

TEST(CliVerify, SelectedCriteria) {
  const Json r = cmd_verify({2, 4}, "small", 1);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_EQ(r["criteria"].size(), 2u);
  EXPECT_THROW(cmd_verify({13}, "small", 1), ValidationError);
  EXPECT_THROW(cmd_verify({2}, "huge", 1), ValidationError);
}

TEST(CliOutput, DeterministicRendering) {
  const Caps caps;
  const Json params{{"m", 3}, {"p", 2}, {"q", 1}};
  const std::string a = render(envelope("degree", params, cmd_degree(3, 2, 1, "all", caps)));
  const std::string b = render(envelope("degree", params, cmd_degree(3, 2, 1, "all", caps)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"schema\": 1"), std::string::npos);
  EXPECT_EQ(parse_int_list("1, 2,3"), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(parse_int_list("1,,2"), ValidationError);
  EXPECT_THROW(parse_int_list("1,2x"), ValidationError);
}

TEST(CliCache, HitsMatchRecomputation) {
  const ResultCache cache(fresh_dir("cache"));
  const Json params{{"m", 2}, {"p", 2}, {"q", 1}, {"dump", true}};
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return cmd_poset(2, 2, 1, true, Caps{});
  };
  const CacheOutcome first = cached(&cache, "poset", params, compute);
  EXPECT_FALSE(first.hit);
  const CacheOutcome second = cached(&cache, "poset", params, compute, true);
  EXPECT_TRUE(second.hit);
  EXPECT_EQ(first.result.dump(), second.result.dump());
  EXPECT_EQ(computed, 2);  // the checked hit recomputes once

  const Json other{{"m", 2}, {"p", 2}, {"q", 2}, {"dump", true}};
  EXPECT_NE(ResultCache::key("poset", params), ResultCache::key("poset", other));
  EXPECT_FALSE(cache.load("poset", other).has_value());
  for (const auto& e : std::filesystem::directory_iterator(cache.dir()))
    EXPECT_EQ(e.path().extension(), ".json");  // no stray temporaries
}

TEST(CliCache, CorruptedEntryIsDetectedOnCheck) {
  const ResultCache cache(fresh_dir("corrupt"));
  const Json params{{"k", 1}};
  cache.store("probe", params, Json{{"v", "1"}});
  EXPECT_THROW(cached(&cache, "probe", params, [] { return Json{{"v", "2"}}; }, true), InternalConsistencyError);
  EXPECT_EQ(cached(&cache, "probe", params, [] { return Json{{"v", "2"}}; }).result["v"], "1");
}

TEST(CliCache, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}
