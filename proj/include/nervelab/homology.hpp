#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/snf.hpp"

namespace nervelab {

/// Free chain complex of finite rank: cells[k] generators in degree k and
/// boundary[k] : C_k -> C_{k-1} (boundary[0] has zero rows).
struct ChainComplex {
  std::vector<std::size_t> cells;
  std::vector<SparseMatrix> boundary;

  bool boundary_squares_to_zero() const;
};

/// Simplicial chains with the sorted-vertex orientation: the i-th face of
/// [v0 < ... < vk] carries sign (-1)^i. Cells in canonical face order.
ChainComplex simplicial_chain_complex(const SimplicialComplex& k);

/// One homology group: Z^betti plus the listed cyclic torsion summands.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// Groups in degrees 0..top. `modulus` is 0 for integer coefficients or a
/// prime p, in which case only Betti numbers over Z/p are reported.
struct HomologyGroups {
  std::vector<HomologyGroup> groups;
  bool reduced = false;
  std::uint32_t modulus = 0;

  const HomologyGroup& operator[](std::size_t k) const { return groups[k]; }
  HomologyGroup at_degree(std::size_t k) const {
    return k < groups.size() ? groups[k] : HomologyGroup{};
  }
  std::size_t size() const { return groups.size(); }
  long long euler_characteristic() const;
  std::string to_string() const;
};

/// Degree-wise isomorphism, treating missing top degrees as zero.
bool same_groups(const HomologyGroups& a, const HomologyGroups& b);

HomologyGroups homology(const ChainComplex& c, bool reduced = false, std::uint32_t modulus = 0);
HomologyGroups homology(const SimplicialComplex& k, bool reduced = false,
                        std::uint32_t modulus = 0);

/// Empty, or every reduced homology group vanishes.
bool is_acyclic(const SimplicialComplex& k);

/// Reduced homology equals that of the d-sphere. Homology comparison only:
/// no manifold test is made (see is_pseudomanifold for a weak surrogate).
bool is_homology_sphere(const SimplicialComplex& k, int d);

/// Nonempty with the homology of a point. Homology comparison only; the
/// dimension argument is validated but cannot be seen by homology.
bool is_homology_ball(const SimplicialComplex& k, int d);

}  // namespace nervelab
