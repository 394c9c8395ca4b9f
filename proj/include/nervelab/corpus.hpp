#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nervelab/complex.hpp"

namespace nervelab {

/// The bundled test complexes, in a fixed order.
const std::vector<SimplicialComplex>& corpus();

/// The corpus complexes of dimension at most 2.
std::vector<SimplicialComplex> corpus_small();

std::optional<SimplicialComplex> corpus_lookup(std::string_view name);

/// Cycle on vertices 1..n.
SimplicialComplex cycle_complex(int n);

/// Path on vertices 1..n.
SimplicialComplex path_complex(int n);

/// Seven-vertex torus.
SimplicialComplex csaszar_torus();

/// Six-vertex projective plane.
SimplicialComplex rp2_6();

/// A random complex on at most `max_vertices` vertices with facets of
/// dimension at most `max_dim`. Deterministic for a given generator state.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim);

/// A random nonempty subcomplex of K: the closure of a random set of faces.
SimplicialComplex random_subcomplex(std::mt19937_64& rng, const SimplicialComplex& k);

}  // namespace nervelab
