#include <filesystem>
#include <fstream>

#include "nervelab/constructions.hpp"
#include "nervelab/corpus.hpp"
#include "nervelab/io.hpp"
#include "nervelab/subdivision.hpp"
#include "nervelab/verify.hpp"
#include "support.hpp"

using namespace nervelab;
using test::complex;

TEST_CASE("complex JSON round-trip") {
  for (const auto& k : corpus()) {
    const auto back = complex_from_json(complex_to_json(k));
    CHECK(back == k);
    CHECK(back.name() == k.name());
  }
  const auto s = sd_n(boundary_complex(2), 2);
  CHECK(complex_from_json(complex_to_json(s)) == s);
}

TEST_CASE("integer labels are normalized") {
  const auto k = complex_from_json(Json::parse(R"({"name": "t", "facets": [[1, 2], [2, "3"]]})"));
  CHECK(k == complex({{"1", "2"}, {"2", "3"}}));
  CHECK(complex_from_json(Json::parse(R"({"facets": [[1]]})")).name().empty());
}

TEST_CASE("malformed complexes are rejected") {
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"name": "x"})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[1.5]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [["a", "a"]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [["[1,"]]})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[""]]})")), Error);
  CHECK_NOTHROW(validate_label("[[1],[1,2]]"));
  CHECK_THROWS_AS(validate_label("a,b"), Error);
}

TEST_CASE("cover JSON round-trip") {
  const auto c = star_cover(boundary_complex(2));
  const auto back = cover_from_json(cover_to_json(c));
  CHECK(back.ambient() == c.ambient());
  CHECK(back.indices() == c.indices());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(back.members()[i] == c.members()[i]);
  CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"ambient": {"facets": [[1]]}})")), Error);
  CHECK_THROWS_AS(
      cover_from_json(Json::parse(R"({"ambient": {"facets": [[1]]}, "members": {"a": [[2]]}})")),
      Error);
}

TEST_CASE("homology JSON") {
  const Json j = homology_to_json(homology(rp2_6()));
  CHECK(j["ring"] == "Z");
  CHECK(j["groups"][1]["betti"] == 0);
  CHECK(j["groups"][1]["torsion"] == Json::array({2}));
  CHECK(homology_to_json(homology(rp2_6(), false, 2))["ring"] == "Z/2");
}

TEST_CASE("file reading") {
  const auto dir = std::filesystem::temp_directory_path() / "nervelab-io-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "k.json";
  std::ofstream(path) << complex_to_json(rp2_6()).dump();
  CHECK(read_complex_file(path) == rp2_6());
  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK_THROWS_AS(read_json_file(dir / "bad.json"), Error);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("corpus contents") {
  CHECK(corpus_lookup("boundary-delta-3")->f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(corpus_lookup("csaszar-torus")->f_vector() == std::vector<std::size_t>{7, 21, 14});
  CHECK(corpus_lookup("rp2-6")->euler_characteristic() == 1);
  CHECK_FALSE(corpus_lookup("nope").has_value());
  std::set<std::string> names;
  for (const auto& k : corpus()) names.insert(k.name());
  CHECK(names.size() == corpus().size());
  for (const char* n : {"delta-4", "boundary-delta-4", "crosspolytope-3", "collar-3", "cycle-4",
                        "path-3", "c-boundary-delta-3", "c-boundary-delta-4"})
    CHECK(names.count(n) == 1);
}

TEST_CASE("suite runner structure") {
  SuiteConfig small;
  small.small = true;
  const auto r = run_suite("star-cover", small);
  CHECK(r.checks.size() == corpus_small().size());
  CHECK(r.all_passed());
  for (const auto& c : r.checks) CHECK_FALSE(c.anchor.empty());
  CHECK_THROWS_AS(run_suite("no-such-suite"), UnknownSuiteError);
  const Json j = r.to_json();
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are deterministic") {
  SuiteConfig small;
  small.small = true;
  for (const char* s : {"star-cover", "derived-nbhd", "pi1"})
    CHECK(run_suite(s, small).to_json().dump() == run_suite(s, small).to_json().dump());
}

TEST_CASE("single-input verification") {
  CHECK(verify_star_cover(rp2_6()).all_passed());
  const SubcomplexCover bad(boundary_complex(2), {{"all", boundary_complex(2)}});
  const auto r = verify_cover_nerve_theorem(bad);
  CHECK_FALSE(r.all_passed());
  CHECK(r.exit_code() == 1);
  CHECK(r.checks[0].details.find("precondition failed") != std::string::npos);
  CHECK(verify_representation(simplex_complex(1), boundary_complex(2)).all_passed());
}
