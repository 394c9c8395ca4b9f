#include "nervelab/homology.hpp"

#include <algorithm>

namespace nervelab {

bool ChainComplex::boundary_squares_to_zero() const {
  for (std::size_t k = 2; k < boundary.size(); ++k)
    if (!is_zero(multiply(boundary[k - 1], boundary[k]))) return false;
  return true;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& k) {
  ChainComplex c;
  const int top = k.dimension();
  // Position of each face inside its own dimension.
  std::vector<std::uint32_t> pos(k.num_faces(), 0);
  for (int d = 0; d <= top; ++d) {
    auto layer = k.faces_of_dim(d);
    for (std::size_t i = 0; i < layer.size(); ++i) pos[layer[i]] = static_cast<std::uint32_t>(i);
  }
  for (int d = 0; d <= top; ++d) {
    auto layer = k.faces_of_dim(d);
    c.cells.push_back(layer.size());
    SparseMatrix m(d == 0 ? 0 : k.faces_of_dim(d - 1).size(), layer.size());
    if (d > 0) {
      for (std::size_t j = 0; j < layer.size(); ++j) {
        const Face& f = k.face(layer[j]);
        auto& col = m.columns[j];
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
          Face g;
          g.reserve(f.size() - 1);
          for (std::size_t i = 0; i < f.size(); ++i)
            if (i != drop) g.push_back(f[i]);
          col.emplace_back(pos[*k.index_of(g)], drop % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

long long HomologyGroups::euler_characteristic() const {
  long long chi = reduced ? 1 : 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].betti);
  return chi;
}

std::string HomologyGroups::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k) out += ", ";
    const auto& g = groups[k];
    std::string term;
    if (g.betti > 0) {
      term = modulus ? "Z/" + std::to_string(modulus) : std::string("Z");
      if (g.betti > 1) term += "^" + std::to_string(g.betti);
    }
    for (const auto& t : g.torsion) {
      if (!term.empty()) term += " + ";
      term += "Z/" + t.str();
    }
    out += term.empty() ? "0" : term;
  }
  return out + "]";
}

bool same_groups(const HomologyGroups& a, const HomologyGroups& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.at_degree(k) != b.at_degree(k)) return false;
  return true;
}

HomologyGroups homology(const ChainComplex& c, bool reduced, std::uint32_t modulus) {
  HomologyGroups h;
  h.reduced = reduced;
  h.modulus = modulus;
  const std::size_t degrees = c.cells.size();
  if (degrees == 0) return h;

  // rank[k] = rank of boundary C_k -> C_{k-1}; rank[0] is the augmentation.
  std::vector<std::size_t> rank(degrees + 1, 0);
  std::vector<std::vector<BigInt>> torsion_of(degrees + 1);
  rank[0] = reduced && c.cells[0] > 0 ? 1 : 0;
  for (std::size_t k = 1; k < degrees; ++k) {
    if (modulus) {
      rank[k] = rank_mod_p(c.boundary[k], modulus);
    } else {
      SNFResult snf = smith_normal_form(c.boundary[k]);
      rank[k] = snf.rank;
      for (auto& f : snf.invariant_factors)
        if (f > 1) torsion_of[k].push_back(std::move(f));
    }
  }
  h.groups.resize(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    h.groups[k].betti = c.cells[k] - rank[k] - rank[k + 1];
    h.groups[k].torsion = std::move(torsion_of[k + 1]);
  }
  return h;
}

HomologyGroups homology(const SimplicialComplex& k, bool reduced, std::uint32_t modulus) {
  return homology(simplicial_chain_complex(k), reduced, modulus);
}

bool is_acyclic(const SimplicialComplex& k) {
  if (k.empty()) return true;
  auto h = homology(k, true);
  return std::all_of(h.groups.begin(), h.groups.end(),
                     [](const HomologyGroup& g) { return g.trivial(); });
}

bool is_homology_sphere(const SimplicialComplex& k, int d) {
  if (d < 0) throw Error("sphere dimension must be >= 0");
  if (k.empty() || k.dimension() < d) return false;
  auto h = homology(k, true);
  for (std::size_t i = 0; i < h.size(); ++i) {
    HomologyGroup want;
    if (static_cast<int>(i) == d) want.betti = 1;
    if (h[i] != want) return false;
  }
  return true;
}

bool is_homology_ball(const SimplicialComplex& k, int d) {
  if (d < 0) throw Error("ball dimension must be >= 0");
  return !k.empty() && is_acyclic(k);
}

}  // namespace nervelab
