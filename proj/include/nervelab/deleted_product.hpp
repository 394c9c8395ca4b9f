#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/product_cells.hpp"

namespace nervelab {

/// All cells s x t with s, t faces of K and s n t empty, with the swap
/// involution (s, t) <-> (t, s).
struct DeletedProductComplex {
  SimplicialComplex base;
  ProductCellComplex cells;
  /// involution[i] is the index of the swapped cell.
  std::vector<std::size_t> involution;

  /// Bijective, of order two, and without fixed cells.
  bool involution_is_free() const;
};

/// Throws if K has fewer than two vertices (the deleted product is empty).
DeletedProductComplex deleted_product(const SimplicialComplex& k);

/// No edge of L joins a vertex of alpha to a vertex of beta. Shared vertices
/// are not edges, so overlapping faces can still be remote here.
bool is_remote(const Simplex& alpha, const Simplex& beta, const SimplicialComplex& l);

/// Disjoint and remote.
bool is_strictly_remote(const Simplex& alpha, const Simplex& beta, const SimplicialComplex& l);

/// Maps each face of L to the face of K that carries it.
using CarrierMap = std::function<Simplex(const Simplex&)>;

struct FinenessReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  struct Counterexample {
    Simplex alpha, beta;    // faces of L
    Simplex gamma, delta;   // their disjoint carriers in K
  };
  std::optional<Counterexample> counterexample;
};

/// Checks that any two faces of L whose carriers in K are disjoint are
/// remote in L. Exhaustive over ordered pairs of faces of L. Throws if the
/// carrier map leaves K or is not monotone.
FinenessReport fineness_check(const SimplicialComplex& l, const SimplicialComplex& k,
                              const CarrierMap& carrier_map);

/// Fineness of sd K over K with the chain carrier.
FinenessReport fineness_check_sd(const SimplicialComplex& k,
                                 std::size_t max_facets = kDefaultMaxFacets);

/// 3k <= 2d - 3.
bool in_metastable_range(int k, int d);

}  // namespace nervelab
