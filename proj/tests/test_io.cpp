#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fanostab/catalog.hpp"
#include "fanostab/io.hpp"

using namespace fanostab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("variety documents round-trip byte-identically for every preset") {
  for (const auto& id : threefold_preset_ids()) {
    const Variety3Fold x = threefold_preset(id);
    const Json j = variety_to_json(x);
    const Variety3Fold back = variety_from_json(j);
    CHECK(variety_to_json(back).dump(2) == j.dump(2));
    CHECK(back.name == x.name);
    CHECK(back.anticanonical_degree() == x.anticanonical_degree());
    CHECK(back.curves.size() == x.curves.size());
    CHECK(back.fibrations.size() == x.fibrations.size());
    CHECK(back.classes.size() == x.classes.size());
    CHECK(back.provenance == x.provenance);
  }
}

TEST_CASE("variety documents use the documented field set") {
  const Json j = variety_to_json(threefold_preset("example1"));
  for (const char* field :
       {"name", "rank", "basis", "triples", "K", "curves", "fibrations", "classes",
        "provenance"})
    CHECK(j.contains(field));
  CHECK(j["rank"] == 4);
  // triples are sorted 4-tuples [i, j, k, value] with i <= j <= k
  for (const auto& t : j["triples"]) {
    REQUIRE(t.is_array());
    REQUIRE(t.size() == 4);
    CHECK(t[0].get<int>() <= t[1].get<int>());
    CHECK(t[1].get<int>() <= t[2].get<int>());
  }
}

TEST_CASE("surface documents round-trip") {
  for (const auto& id : surface_preset_ids()) {
    const Surface s = surface_preset(id);
    const Json j = surface_to_json(s);
    const Surface back = surface_from_json(j);
    CHECK(surface_to_json(back).dump(2) == j.dump(2));
    CHECK(back.canonical_square() == s.canonical_square());
  }
}

TEST_CASE("constraint systems round-trip") {
  for (const auto& cs : {example2_tangent_system(), example2_cotangent_system()}) {
    const Json j = constraint_system_to_json(cs);
    const ConstraintSystem back = constraint_system_from_json(j);
    CHECK(constraint_system_to_json(back).dump(2) == j.dump(2));
    CHECK(back.name == cs.name);
    CHECK(back.variables == cs.variables);
    CHECK(maximize_slope(back).max_value == maximize_slope(cs).max_value);
  }
}

TEST_CASE("lp results serialize with stringified rationals") {
  const LpResult r = maximize_slope(example2_cotangent_system());
  const Json j = lp_result_to_json(r);
  CHECK(j["status"] == "optimal");
  CHECK(j["max"] == "-17");
  REQUIRE(j["point"].is_array());
  CHECK(j["point"][0] == "1");
  CHECK(j["point"][1] == "-2");
  CHECK(j["point"][2] == "0");

  LpResult unb;
  unb.status = LpStatus::unbounded;
  const Json ju = lp_result_to_json(unb);
  CHECK(ju["status"] == "unbounded");
  CHECK_FALSE(ju.contains("max"));
}

TEST_CASE("verdict serialization carries the witness against the reference slope") {
  const Json unstable = verdict_to_json(theorem1_check(threefold_preset("example1")));
  CHECK(unstable["status"] == "unstable");
  REQUIRE(unstable.contains("witness"));
  CHECK(unstable["witness"]["sheaf"]["name"] == "g*Omega1_{p1}");
  CHECK(unstable["witness"]["slope"] == "-14");
  CHECK(unstable["witness"]["mu_tx"] == "-46/3");
  REQUIRE(unstable["candidates"].is_array());
  CHECK(unstable["candidates"].size() == 2);

  const Json vacuous = verdict_to_json(theorem1_check(threefold_preset("p3")));
  CHECK(vacuous["status"] == "stable-among-tested");
  CHECK(vacuous["witness"].is_null());
  CHECK(vacuous["candidates"].empty());
}

TEST_CASE("rule traces serialize with statements and citations") {
  const Json j = b2one_to_json(check_b2_one_stability(IndexedFano{3, 4, Integer(1)}));
  CHECK(j["status"] == "stable");
  REQUIRE(j["trace"].is_array());
  REQUIRE(j["trace"].size() == 2);
  CHECK(j["trace"][0]["condition"] == "A1");
  CHECK(j["trace"][0]["rule"] == "bott");
  CHECK(j["trace"][0]["established"] == true);
  CHECK_FALSE(j["trace"][0]["statement"].get<std::string>().empty());
  CHECK_FALSE(j["trace"][0]["citation"].get<std::string>().empty());
}

TEST_CASE("malformed variety documents are rejected with input errors") {
  const Json good = variety_to_json(threefold_preset("p3_blowup_line"));

  Json missing_name = good;
  missing_name.erase("name");
  CHECK_THROWS_AS(variety_from_json(missing_name), input_error);

  Json missing_k = good;
  missing_k.erase("K");
  CHECK_THROWS_AS(variety_from_json(missing_k), input_error);

  Json bad_rank = good;
  bad_rank["rank"] = 5;
  CHECK_THROWS_AS(variety_from_json(bad_rank), input_error);

  Json bad_triple = good;
  bad_triple["triples"].push_back(Json::array({0, 1, 7, 1}));
  CHECK_THROWS_AS(variety_from_json(bad_triple), input_error);

  Json short_triple = good;
  short_triple["triples"].push_back(Json::array({0, 1, 1}));
  CHECK_THROWS_AS(variety_from_json(short_triple), input_error);

  Json float_value = good;
  float_value["K"][0] = 1.5;
  CHECK_THROWS_AS(variety_from_json(float_value), input_error);

  Json short_k = good;
  short_k["K"] = Json::array({-4});
  CHECK_THROWS_AS(variety_from_json(short_k), input_error);

  Json bad_curve = good;
  bad_curve["curves"][0]["meets"] = Json::array({0});
  CHECK_THROWS_AS(variety_from_json(bad_curve), input_error);

  Json bad_fibration = good;
  bad_fibration["fibrations"][0]["target_dim"] = 3;
  CHECK_THROWS_AS(variety_from_json(bad_fibration), input_error);

  Json empty_basis = good;
  empty_basis["basis"] = Json::array();
  CHECK_THROWS_AS(variety_from_json(empty_basis), input_error);
}

TEST_CASE("malformed surface documents are rejected") {
  const Json good = surface_to_json(surface_dp(2));

  Json asym = good;
  asym["pairing"][0][1] = 5;
  CHECK_THROWS_AS(surface_from_json(asym), input_error);

  Json ragged = good;
  ragged["pairing"][0] = Json::array({1, 0});
  CHECK_THROWS_AS(surface_from_json(ragged), input_error);
}

TEST_CASE("file integers are bounded to 64 bits") {
  CHECK(to_file_int(Integer(-14)) == -14);
  CHECK(to_file_int(Integer("9223372036854775807")) == 9223372036854775807LL);
  CHECK_THROWS_AS(to_file_int(Integer("9223372036854775808")), input_error);
  CHECK_THROWS_AS(to_file_int(Integer("-123456789012345678901234567890")), input_error);
}

TEST_CASE("rational arrays serialize as p/q strings") {
  const std::vector<Rational> v = {make_rational(Integer(-46), Integer(3)), Rational(5)};
  const Json j = rational_array(v);
  CHECK(j[0] == "-46/3");
  CHECK(j[1] == "5");
  const auto back = rational_array_from_json(j, "test");
  CHECK(back == v);
  CHECK_THROWS_AS(rational_array_from_json(Json::array({"1/0"}), "test"), input_error);
}

TEST_CASE("shipped data files regenerate byte-identically") {
  const std::string dir = FANOSTAB_DATA_DIR;
  CHECK(slurp(dir + "/catalog.json") == catalog_to_json().dump(2) + "\n");
  CHECK(slurp(dir + "/ex2-case1.json") ==
        constraint_system_to_json(example2_tangent_system()).dump(2) + "\n");
  CHECK(slurp(dir + "/ex2-case2.json") ==
        constraint_system_to_json(example2_cotangent_system()).dump(2) + "\n");
}

TEST_CASE("shipped catalog document is self-consistent") {
  const Json j = Json::parse(slurp(std::string(FANOSTAB_DATA_DIR) + "/catalog.json"));
  REQUIRE(j["entries"].size() == 105);
  CHECK(j["counts"]["total"] == 105);
  CHECK(j["counts"]["b2_ge_2"]["total"] == 87);
  int with_variety = 0;
  for (const auto& e : j["entries"]) {
    if (!e["variety"].is_null()) {
      ++with_variety;
      // embedded varieties parse and match their construction's preset
      const Variety3Fold x = variety_from_json(e["variety"]);
      CHECK(x.name == e["construction"].get<std::string>());
      REQUIRE_FALSE(e["witness"].is_null());
    } else {
      CHECK(e["witness"].is_null());
    }
  }
  CHECK(with_variety == 22);
}
