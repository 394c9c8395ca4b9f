#include <random>

#include "nervelab/complex.hpp"
#include "nervelab/corpus.hpp"
#include "support.hpp"

using namespace nervelab;
using test::complex;

TEST_CASE("from_facets closes downward") {
  CHECK(complex({{"a", "b", "c"}}).f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(complex({{"a", "b"}, {"b", "c"}, {"a", "c"}}).f_vector() ==
        std::vector<std::size_t>{3, 3});
  CHECK(complex({{"a"}}).f_vector() == std::vector<std::size_t>{1});
  CHECK(complex({{"a", "b"}, {"a", "b"}, {"a"}}).facets() == std::vector<Simplex>{{"a", "b"}});
  CHECK(SimplicialComplex().empty());
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("from_facets rejects repeated labels and empty facets") {
  CHECK_THROWS_AS(complex({{"a", "a"}}), Error);
  CHECK_THROWS_AS(complex({{}}), Error);
}

TEST_CASE("faces are in canonical order and indexed") {
  const auto k = complex({{"3", "1", "2"}, {"2", "4"}});
  CHECK(k.vertices() == std::vector<Label>{"1", "2", "3", "4"});
  for (std::size_t i = 1; i < k.num_faces(); ++i) CHECK(k.face(i - 1) < k.face(i));
  for (std::size_t i = 0; i < k.num_faces(); ++i) CHECK(k.index_of(k.face(i)) == i);
  CHECK(k.contains(Simplex{"2", "4"}));
  CHECK_FALSE(k.contains(Simplex{"1", "4"}));
  CHECK_FALSE(k.to_face({"9"}).has_value());
  CHECK(k.facets() == std::vector<Simplex>{{"1", "2", "3"}, {"2", "4"}});
}

TEST_CASE("closure matches the brute-force subset enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialComplex k = random_complex(rng, 8, 4);
    const oracle::FaceSet want = oracle::closure(k.facets());
    CHECK(test::faces(k) == want);
    CHECK(k.f_vector() == oracle::f_vector(want));
  }
}

TEST_CASE("induced subcomplex") {
  const auto b3 = boundary_complex(3);
  const auto k = induced(b3, {"1", "2", "3"});
  CHECK(k.facets() == std::vector<Simplex>{{"1", "2", "3"}});
  const auto cyc = boundary_complex(2);
  CHECK(induced(cyc, {"1", "3"}).f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(induced(complex({{"1", "2"}, {"2", "3"}}), {"1", "3"}).f_vector() ==
        std::vector<std::size_t>{2});
  CHECK(induced(b3, {}).empty());
}

TEST_CASE("star and link") {
  const auto path = complex({{"a", "b"}, {"b", "c"}});
  CHECK(test::faces(star("a", path)) == oracle::closure({{"a", "b"}}));
  CHECK(star("1", simplex_complex(2)).f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(star("1", boundary_complex(2)) == complex({{"1", "2"}, {"1", "3"}}));
  CHECK(link("1", boundary_complex(2)) == complex({{"2"}, {"3"}}));
  CHECK(link("1", boundary_complex(3)).f_vector() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("standard families") {
  CHECK(simplex_complex(0).f_vector() == std::vector<std::size_t>{1});
  CHECK(boundary_complex(3).f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(crosspolytope(1).f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(crosspolytope(2).f_vector() == std::vector<std::size_t>{6, 12, 8});
  CHECK(crosspolytope(3).f_vector() == std::vector<std::size_t>{8, 24, 32, 16});
  CHECK(cycle_complex(4).f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(path_complex(4).f_vector() == std::vector<std::size_t>{4, 3});
  CHECK(csaszar_torus().f_vector() == std::vector<std::size_t>{7, 21, 14});
  CHECK(rp2_6().f_vector() == std::vector<std::size_t>{6, 15, 10});
  CHECK(rp2_6().euler_characteristic() == 1);
  CHECK(csaszar_torus().euler_characteristic() == 0);
  CHECK(is_pseudomanifold(csaszar_torus()));
  CHECK(is_pseudomanifold(rp2_6()));
  CHECK_FALSE(is_pseudomanifold(path_complex(3)));
}

TEST_CASE("crosspolytope agrees with the pair-avoiding enumeration") {
  for (int d = 1; d <= 3; ++d) {
    const int n = d + 1;
    oracle::FaceSet want;
    for (std::uint64_t code = 1; code < std::uint64_t(1) << (2 * n); ++code) {
      oracle::LabelSet s;
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        const bool u = code >> j & 1, v = code >> (n + j) & 1;
        if (u && v) ok = false;
        if (u) s.push_back("u" + std::to_string(j + 1));
        if (v) s.push_back("v" + std::to_string(j + 1));
      }
      if (ok) want.insert(oracle::sorted(s));
    }
    CHECK(test::faces(crosspolytope(d)) == want);
  }
}

TEST_CASE("skeleton, cone, union, intersection") {
  const auto d3 = simplex_complex(3);
  CHECK(k_skeleton(d3, 1).f_vector() == std::vector<std::size_t>{4, 6});
  const auto c = cone("x", boundary_complex(2));
  CHECK(c.f_vector() == std::vector<std::size_t>{4, 6, 3});
  CHECK_THROWS_AS(cone("1", boundary_complex(2)), Error);
  const auto a = complex({{"1", "2"}}), b = complex({{"2", "3"}});
  CHECK(subcomplex_union(a, b) == complex({{"1", "2"}, {"2", "3"}}));
  CHECK(subcomplex_intersection(a, b) == complex({{"2"}}));
  CHECK(subcomplex_intersection(complex({{"1"}}), complex({{"2"}})).empty());
  CHECK(is_subcomplex(a, d3));
  CHECK_FALSE(is_subcomplex(complex({{"1", "5"}}), d3));
}

TEST_CASE("connected components") {
  const auto cc = connected_components(boundary_complex(2));
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].size() == 3);
  CHECK(connected_components(complex({{"a", "b"}, {"c", "d"}})).size() == 2);
  CHECK(connected_components(SimplicialComplex()).empty());
}

TEST_CASE("isomorphism search agrees with exhaustive permutations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const SimplicialComplex a = random_complex(rng, 6, 2);
    const SimplicialComplex b = random_complex(rng, 6, 2);
    const bool want = oracle::isomorphic(test::faces(a), test::faces(b));
    CHECK(is_isomorphic(a, b) == want);
    auto map = find_isomorphism(a, a);
    REQUIRE(map.has_value());
  }
  // A relabelled torus is isomorphic; the projective plane is not.
  const auto t = csaszar_torus();
  std::vector<std::vector<Label>> shifted;
  for (const auto& f : t.facets()) {
    std::vector<Label> g;
    for (const auto& v : f) g.push_back("x" + v);
    shifted.push_back(g);
  }
  CHECK(is_isomorphic(t, complex(shifted)));
  CHECK_FALSE(is_isomorphic(t, rp2_6()));
  CHECK(is_isomorphic(cycle_complex(4), crosspolytope(1)));
}

TEST_CASE("euler characteristic is the alternating face count") {
  for (const auto& k : corpus()) {
    long long chi = 0;
    const auto f = k.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(f[i]);
    CHECK(k.euler_characteristic() == chi);
  }
}
