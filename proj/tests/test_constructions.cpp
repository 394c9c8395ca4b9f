#include <random>

#include "nervelab/constructions.hpp"
#include "nervelab/corpus.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/neighborhoods.hpp"
#include "nervelab/subdivision.hpp"
#include "support.hpp"

using namespace nervelab;
using test::complex;

TEST_CASE("remove_facet") {
  const auto b = remove_facet(boundary_complex(3), {"1", "2", "3"});
  CHECK(b.f_vector() == std::vector<std::size_t>{4, 6, 3});
  CHECK(is_acyclic(b));
  const auto p = remove_facet(boundary_complex(2), {"1", "2"});
  CHECK(p.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(is_acyclic(p));
  CHECK_THROWS_AS(remove_facet(boundary_complex(3), {"1", "2"}), Error);
  CHECK_THROWS_AS(remove_facet(boundary_complex(3), {"1", "9"}), Error);
  CHECK_THROWS_AS(remove_facet(complex({{"1", "2", "3"}, {"3", "4"}}), {"3", "4"}), Error);
}

TEST_CASE("collar complexes") {
  CHECK(collar(1).f_vector() == std::vector<std::size_t>{4, 2});
  CHECK(connected_components(collar(1)).size() == 2);
  const auto g2 = collar(2);
  CHECK(g2.f_vector() == std::vector<std::size_t>{6, 12, 6});
  CHECK(is_homology_sphere(g2, 1));
  CHECK(is_homology_sphere(collar(3), 2));
  CHECK_FALSE(g2.contains(Simplex{"u1", "u2", "u3"}));
  CHECK_FALSE(g2.contains(Simplex{"v1", "v2", "v3"}));
  CHECK_THROWS_AS(collar(0), Error);
  // The collar is the cross-polytope boundary minus the two opposite facets.
  for (int d = 1; d <= 3; ++d) {
    auto want = test::faces(crosspolytope(d));
    oracle::LabelSet u, v;
    for (int j = 1; j <= d + 1; ++j) {
      u.push_back("u" + std::to_string(j));
      v.push_back("v" + std::to_string(j));
    }
    want.erase(oracle::sorted(u));
    want.erase(oracle::sorted(v));
    CHECK(test::faces(collar(d)) == want);
  }
}

TEST_CASE("attach_collar and cap") {
  const auto c = build_c(boundary_complex(3), {"1", "2", "3"});
  CHECK(c.c.f_vector() == std::vector<std::size_t>{7, 15, 9});
  CHECK(c.c.euler_characteristic() == 1);
  CHECK(is_acyclic(c.c));
  CHECK(c.collar_vertices == std::vector<Label>{"v#1", "v#2", "v#3"});
  CHECK(c.c.name() == "c-boundary-delta-3");
  const auto capped = cap(c);
  CHECK(capped.euler_characteristic() == 2);
  CHECK(is_homology_sphere(capped, 2));
  CHECK(capped.facets().size() == c.c.facets().size() + 1);
  CHECK(remove_facet(capped, {"v#1", "v#2", "v#3"}) == c.c);
  CHECK_THROWS_AS(cap(capped, c.collar_vertices), Error);

  const auto b = remove_facet(boundary_complex(3), {"1", "2", "3"});
  CHECK_THROWS_AS(attach_collar(boundary_complex(3), {"1", "2", "3"}), Error);
  // Edge 12 is missing, so the boundary of u is not in B.
  CHECK_THROWS_AS(attach_collar(complex({{"1", "3", "4"}, {"2", "3", "4"}}), {"1", "2", "3"}), Error);
  CHECK(same_groups(homology(attach_collar(b, {"1", "2", "3"}).c), homology(b)));
}

TEST_CASE("collar on every corpus sphere") {
  for (const auto& sigma : {boundary_complex(2), boundary_complex(3), boundary_complex(4),
                            crosspolytope(2), csaszar_torus(), rp2_6()}) {
    const Simplex facet = sigma.facets().front();
    const auto c = build_c(sigma, facet);
    CHECK(same_groups(homology(c.c), homology(c.b)));
    CHECK(same_groups(homology(cap(c)), homology(sigma)));
  }
}

TEST_CASE("star covers") {
  const auto sc = star_cover(simplex_complex(1));
  CHECK(sc.indices() == std::vector<std::string>{"1", "2"});
  CHECK(cover_intersection(sc, {"1", "2"}) == complex({{"[1,2]"}}));
  CHECK(nerve_of_subcomplexes(sc) == simplex_complex(1));
  CHECK(is_isomorphic(nerve_of_subcomplexes(star_cover(simplex_complex(2))), simplex_complex(2)));
  CHECK_THROWS_AS(star_cover(SimplicialComplex()), Error);
}

TEST_CASE("default ambient contains K") {
  const auto k = path_complex(3);
  const auto m = default_ambient(k);
  CHECK(is_subcomplex(k, m));
  CHECK(is_homology_sphere(m, 2));
}

TEST_CASE("representation pipeline") {
  const auto m = boundary_complex(3);
  const auto r = representation_pipeline(boundary_complex(2), m);
  CHECK(r.nerve_isomorphic);
  CHECK(r.nerve_matches_stars);
  CHECK(r.all_collapse);
  CHECK(r.passed());
  CHECK(r.ambient_facets == 864);
  CHECK(r.intersections.size() == 6);

  const auto small = representation_pipeline(simplex_complex(1), boundary_complex(2));
  CHECK(small.nerve == simplex_complex(1));
  CHECK(small.passed());

  const auto whole = representation_pipeline(m, m);
  CHECK(is_isomorphic(whole.nerve, m));
  CHECK(whole.passed());

  CHECK_THROWS_AS(representation_pipeline(complex({{"1", "9"}}), m), Error);
  CHECK_THROWS_AS(representation_pipeline(boundary_complex(2), m, 100), SizeCapError);
  CHECK_THROWS_AS(representation_pipeline(simplex_complex(1),
                                          complex({{"1", "2", "3"}, {"3", "4"}})),
                  Error);
}
