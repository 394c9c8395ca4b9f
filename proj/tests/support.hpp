#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/homology.hpp"
#include "oracle.hpp"

namespace test {

inline oracle::FaceSet faces(const nervelab::SimplicialComplex& k) {
  oracle::FaceSet out;
  for (std::size_t i = 0; i < k.num_faces(); ++i) out.insert(k.simplex(i));
  return out;
}

inline std::vector<oracle::Group> oracle_groups(const nervelab::HomologyGroups& h) {
  std::vector<oracle::Group> out;
  for (const auto& g : h.groups) out.push_back({g.betti, g.torsion});
  return out;
}

inline nervelab::SimplicialComplex complex(const std::vector<std::vector<std::string>>& facets,
                                           std::string name = {}) {
  return nervelab::SimplicialComplex::from_facets(facets, std::move(name));
}

}  // namespace test
