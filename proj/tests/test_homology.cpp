#include <random>

#include "nervelab/constructions.hpp"
#include "nervelab/corpus.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/presentation.hpp"
#include "nervelab/subdivision.hpp"
#include "support.hpp"

using namespace nervelab;
using test::complex;

namespace {

HomologyGroups groups(std::vector<HomologyGroup> g, bool reduced = false) {
  HomologyGroups h;
  h.groups = std::move(g);
  h.reduced = reduced;
  return h;
}

GroupPresentation pres(std::size_t gens, std::vector<Word> rels) {
  GroupPresentation p;
  for (std::size_t i = 0; i < gens; ++i) p.generators.push_back("g" + std::to_string(i + 1));
  p.relators = std::move(rels);
  return p;
}

}  // namespace

TEST_CASE("spheres, torus and projective plane") {
  CHECK(same_groups(homology(boundary_complex(3), true), groups({{}, {}, {1, {}}}, true)));
  CHECK(same_groups(homology(csaszar_torus()), groups({{1, {}}, {2, {}}, {1, {}}})));
  const auto rp2 = homology(rp2_6());
  CHECK(rp2.at_degree(1) == HomologyGroup{0, {BigInt(2)}});
  CHECK(rp2.at_degree(2).trivial());
  CHECK(homology(rp2_6(), false, 2).at_degree(2).betti == 1);
  CHECK(homology(rp2_6(), false, 3).at_degree(1).betti == 0);
  CHECK(rp2.to_string() == "[Z, Z/2, 0]");
}

TEST_CASE("homology matches the dense oracle") {
  std::vector<SimplicialComplex> inputs = corpus_small();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) inputs.push_back(random_complex(rng, 7, 3));
  for (const auto& k : inputs) {
    const auto want = oracle::homology(test::faces(k));
    CHECK(test::oracle_groups(homology(k)) == want);
  }
}

TEST_CASE("reduced homology and acyclicity") {
  CHECK(is_acyclic(simplex_complex(2)));
  CHECK_FALSE(is_acyclic(boundary_complex(2)));
  CHECK(is_acyclic(SimplicialComplex()));
  CHECK(homology(complex({{"a"}, {"b"}}), true).at_degree(0).betti == 1);
  CHECK(is_homology_sphere(boundary_complex(4), 3));
  CHECK(is_homology_sphere(collar(2), 1));
  CHECK_FALSE(is_homology_sphere(simplex_complex(3), 3));
  CHECK(is_homology_ball(simplex_complex(3), 3));
  CHECK_FALSE(is_homology_ball(SimplicialComplex(), 0));
}

TEST_CASE("boundary squares to zero and Euler characteristic") {
  for (const auto& k : corpus()) {
    const auto c = simplicial_chain_complex(k);
    CHECK(c.boundary_squares_to_zero());
    CHECK(homology(k).euler_characteristic() == k.euler_characteristic());
  }
}

TEST_CASE("edge-path presentations") {
  auto p = edge_path_presentation(boundary_complex(2));
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
  p = edge_path_presentation(boundary_complex(3));
  CHECK(p.generators.size() == 3);
  CHECK(p.relators.size() == 4);
  CHECK(abelianization(p).trivial());
  CHECK(edge_path_presentation(simplex_complex(1)).generators.empty());
  CHECK(abelianization(edge_path_presentation(csaszar_torus())) == HomologyGroup{2, {}});
  CHECK(abelianization(edge_path_presentation(rp2_6())) == HomologyGroup{0, {BigInt(2)}});
  CHECK_THROWS_AS(edge_path_presentation(complex({{"a"}, {"b"}})), Error);
  for (const auto& k : corpus()) {
    if (connected_components(k).size() != 1) continue;
    const auto q = edge_path_presentation(k);
    CHECK(q.well_formed());
    CHECK(abelianization(q) == homology(k).at_degree(1));
  }
}

TEST_CASE("abelianization of small presentations") {
  CHECK(abelianization(pres(1, {})) == HomologyGroup{1, {}});
  CHECK(abelianization(pres(1, {{1, 1}})) == HomologyGroup{0, {BigInt(2)}});
  CHECK(abelianization(pres(2, {{1, 2, -1, -2}})) == HomologyGroup{2, {}});
}

TEST_CASE("Tietze simplification") {
  auto r = tietze_simplify(pres(1, {{1}}));
  CHECK(r.status == TietzeStatus::trivialized);
  CHECK(r.presentation.generators.empty());
  r = tietze_simplify(pres(1, {}));
  CHECK(r.status != TietzeStatus::trivialized);
  CHECK(r.presentation.generators.size() == 1);
  r = tietze_simplify(edge_path_presentation(boundary_complex(3)), 100);
  CHECK(r.status == TietzeStatus::trivialized);
  r = tietze_simplify(edge_path_presentation(csaszar_torus()));
  CHECK(r.status != TietzeStatus::trivialized);
  CHECK(abelianization(r.presentation) == HomologyGroup{2, {}});
  r = tietze_simplify(edge_path_presentation(rp2_6()));
  CHECK(abelianization(r.presentation) == HomologyGroup{0, {BigInt(2)}});
  r = tietze_simplify(edge_path_presentation(crosspolytope(3)), 0);
  CHECK(r.status == TietzeStatus::exhausted);
  CHECK(to_string(TietzeStatus::trivialized) == "trivialized");
}

TEST_CASE("Tietze moves preserve the abelianization") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t gens = 1 + rng() % 4;
    std::vector<Word> rels;
    const std::size_t nrel = rng() % 4;
    for (std::size_t i = 0; i < nrel; ++i) {
      Word w;
      const std::size_t len = 1 + rng() % 6;
      for (std::size_t j = 0; j < len; ++j) {
        const int g = static_cast<int>(1 + rng() % gens);
        w.push_back(rng() % 2 ? g : -g);
      }
      rels.push_back(w);
    }
    const auto p = pres(gens, rels);
    const auto r = tietze_simplify(p);
    CHECK(r.presentation.well_formed());
    CHECK(abelianization(r.presentation) == abelianization(p));
  }
}
