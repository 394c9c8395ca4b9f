#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/subdivision.hpp"

namespace nervelab {

/// M together with sd M and sd sd M and the bookkeeping that maps the
/// vertices of each level back to faces of the level below.
struct DerivedAmbient {
  Subdivision first;   // base = M, complex = sd M
  Subdivision second;  // base = sd M, complex = sd sd M

  const SimplicialComplex& base() const { return first.base; }
  const SimplicialComplex& sd2() const { return second.complex; }

  /// mu(mu(f)) as an index into base().faces(), for a face f of sd sd M.
  std::size_t mu_mu_index(const Face& f) const;
};

DerivedAmbient derived_ambient(const SimplicialComplex& m,
                               std::size_t max_facets = kDefaultMaxFacets);

/// A subcomplex of sd sd M built from a core L of M.
struct DerivedNeighborhood {
  std::shared_ptr<const DerivedAmbient> ambient;
  SimplicialComplex core;
  SimplicialComplex faces;
};

/// N(L) = { s in sd sd M : mu(mu(s)) in L }. Throws if L is not a subcomplex of M.
DerivedNeighborhood derived_neighborhood(const SimplicialComplex& l,
                                         std::shared_ptr<const DerivedAmbient> ambient);
DerivedNeighborhood derived_neighborhood(const SimplicialComplex& l, const SimplicialComplex& m,
                                         std::size_t max_facets = kDefaultMaxFacets);

/// Independent construction of N(L) from the geometric description: the
/// closed facets of sd sd M that meet |L|. Because sd sd L is a full
/// subcomplex, a facet meets |L| iff one of its vertices, read back from its
/// label as a chain of chains, has its carrier in L.
SimplicialComplex derived_neighborhood_oracle(const SimplicialComplex& l,
                                              const DerivedAmbient& ambient);
SimplicialComplex derived_neighborhood_oracle(const SimplicialComplex& l,
                                              const SimplicialComplex& m,
                                              std::size_t max_facets = kDefaultMaxFacets);

/// N(L1 n L2) == N(L1) n N(L2) as face sets.
bool verify_nbhd_intersection(const SimplicialComplex& l1, const SimplicialComplex& l2,
                              std::shared_ptr<const DerivedAmbient> ambient);
bool verify_nbhd_intersection(const SimplicialComplex& l1, const SimplicialComplex& l2,
                              const SimplicialComplex& m,
                              std::size_t max_facets = kDefaultMaxFacets);

/// Induced subcomplex of sd sd M on the vertices outside N(L). This is the
/// full-subcomplex model of the closed complement of the neighborhood.
SimplicialComplex simplicial_complement(const SimplicialComplex& l,
                                        std::shared_ptr<const DerivedAmbient> ambient);
SimplicialComplex simplicial_complement(const SimplicialComplex& l, const SimplicialComplex& m,
                                        std::size_t max_facets = kDefaultMaxFacets);

/// Least vertex a with s u {a} in K for every face s, if any.
std::optional<Label> is_cone(const SimplicialComplex& k);

/// Every facet of a nonempty K contains `apex`.
bool is_cone_with_apex(const SimplicialComplex& k, const Label& apex);

enum class CollapseStatus { collapsed_to_point, stuck };

struct CollapseResult {
  CollapseStatus status = CollapseStatus::stuck;
  /// What is left; a single vertex on success.
  SimplicialComplex remaining;
  std::size_t pairs_removed = 0;
  /// Stuck on the input itself: no free face and more than one face.
  /// That is a certain "not collapsible"; any other stuck state is not.
  bool definitive = false;
};

/// Removes free pairs (a face with exactly one proper coface) until none is
/// left, always taking the canonically smallest free face. Greedy, hence
/// incomplete: getting stuck does not prove non-collapsibility.
CollapseResult greedy_collapse(const SimplicialComplex& k);

}  // namespace nervelab
