#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/covers.hpp"

namespace nervelab {

/// Deletes one top-dimensional facet; its proper faces stay.
SimplicialComplex remove_facet(const SimplicialComplex& sigma, const Simplex& facet);

/// The collar: the d-dimensional cross-polytope boundary on u1..u{d+1},
/// v1..v{d+1} without the two opposite facets U and V. A combinatorial
/// S^{d-1} x [0,1].
SimplicialComplex collar(int d);

/// B with a collar glued along the boundary of a missing facet U.
struct CollaredComplex {
  std::optional<SimplicialComplex> sigma;  // set when built from a closed Sigma
  Simplex removed_facet;                   // U, in the order used to pair uj with vj
  std::vector<Label> collar_vertices;      // V = v#1 .. v#(d+1)
  SimplicialComplex b;
  SimplicialComplex gamma;
  SimplicialComplex c;  // B u Gamma
};

/// Glues the collar onto B along U. U's proper faces must all be in B and U
/// itself must not be; uj is paired with the fresh vertex v#j.
CollaredComplex attach_collar(const SimplicialComplex& b, const std::vector<Label>& u);

/// remove_facet followed by attach_collar.
CollaredComplex build_c(const SimplicialComplex& sigma, const Simplex& facet);

/// C with the facet V added; a subdivision of Sigma.
SimplicialComplex cap(const CollaredComplex& c);
SimplicialComplex cap(const SimplicialComplex& c, const std::vector<Label>& collar_vertices);

/// X_v = st({v}, sd K) for every vertex v of K, as a cover of sd K indexed
/// by the vertex labels of K.
SubcomplexCover star_cover(const SimplicialComplex& k,
                           std::size_t max_facets = kDefaultMaxFacets);

/// Boundary of the simplex on the vertices of K plus one fresh vertex; it
/// contains K as a subcomplex.
SimplicialComplex default_ambient(const SimplicialComplex& k);

struct RepresentationReport {
  SimplicialComplex k;
  SimplicialComplex m;
  std::size_t ambient_facets = 0;  // facets of sd^3 M
  SimplicialComplex star_nerve;    // nerve of {X_v} in sd M
  SimplicialComplex nerve;         // nerve of {N(X_v)} in sd^3 M
  bool nerve_isomorphic = false;   // nerve ~ K
  bool nerve_matches_stars = false;
  struct Intersection {
    Simplex indices;
    std::size_t faces = 0;
    bool collapsed = false;
  };
  std::vector<Intersection> intersections;
  bool all_collapse = false;

  bool passed() const { return nerve_isomorphic && nerve_matches_stars && all_collapse; }
};

/// Builds the stars X_v of sd K inside sd M, thickens each to its derived
/// neighborhood in sd sd (sd M), and checks that the thickened family still
/// has nerve K and that every nonempty intersection collapses to a point.
/// K must be a subcomplex of M and M must be pure.
RepresentationReport representation_pipeline(const SimplicialComplex& k,
                                             const SimplicialComplex& m,
                                             std::size_t max_facets = kDefaultMaxFacets);

}  // namespace nervelab
