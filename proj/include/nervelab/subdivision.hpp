#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nervelab/complex.hpp"

namespace nervelab {

/// A face of sd K: base faces strictly increasing by inclusion.
struct ChainFace {
  std::vector<Simplex> chain;

  bool operator==(const ChainFace&) const = default;
};

/// Inclusion-minimal element of the chain.
Simplex mu(const ChainFace& c);

/// Inclusion-maximal element; the smallest base face whose realization
/// contains the realization of the chain.
Simplex carrier(const ChainFace& c);

/// Vertex label of sd K standing for a base face: "[a,b,c]".
std::string face_label(const Simplex& face);

/// Inverse of face_label. Splits on top-level commas, so nested labels
/// from iterated subdivision survive intact.
Simplex parse_face_label(std::string_view label);

/// Label of a chain viewed as a single vertex of the next subdivision,
/// e.g. "[[1],[1,2]]". Elements are listed in label order.
std::string chain_label(const ChainFace& c);

/// Parses a chain label and orders its elements by inclusion.
/// Throws if the elements do not form a strict chain.
ChainFace parse_chain_label(std::string_view label);

/// Barycentric subdivision together with the map from its vertices back to
/// the base faces they stand for.
struct Subdivision {
  SimplicialComplex base;
  SimplicialComplex complex;
  /// base_face[v] is the index in base.faces() of the face labelling vertex v.
  std::vector<std::size_t> base_face;

  /// Index of mu(f) in base.faces(); f is a face of `complex`.
  std::size_t mu_index(const Face& f) const;
  std::size_t carrier_index(const Face& f) const;
  ChainFace chain(const Face& f) const;
};

/// Predicted facet count of the n-fold subdivision, saturating at SIZE_MAX.
std::size_t predicted_sd_facets(const SimplicialComplex& k, int n);

Subdivision barycentric(const SimplicialComplex& k, std::size_t max_facets = kDefaultMaxFacets);

SimplicialComplex sd(const SimplicialComplex& k, std::size_t max_facets = kDefaultMaxFacets);

/// n-fold iterated subdivision; sd_n(K, 0) = K. Refuses with SizeCapError
/// before doing any work if the predicted facet count exceeds the cap.
SimplicialComplex sd_n(const SimplicialComplex& k, int n,
                       std::size_t max_facets = kDefaultMaxFacets);

}  // namespace nervelab
