#include "nervelab/neighborhoods.hpp"

#include <algorithm>
#include <set>

namespace nervelab {

std::size_t DerivedAmbient::mu_mu_index(const Face& f) const {
  const std::size_t in_sd = second.mu_index(f);
  return first.mu_index(first.complex.face(in_sd));
}

DerivedAmbient derived_ambient(const SimplicialComplex& m, std::size_t max_facets) {
  const std::size_t predicted = predicted_sd_facets(m, 2);
  if (predicted > max_facets)
    throw SizeCapError("second subdivision would have " + std::to_string(predicted) +
                           " facets, cap is " + std::to_string(max_facets),
                       predicted, max_facets);
  DerivedAmbient a;
  a.first = barycentric(m, max_facets);
  a.second = barycentric(a.first.complex, max_facets);
  return a;
}

namespace {

void require_subcomplex(const SimplicialComplex& l, const SimplicialComplex& m) {
  if (!is_subcomplex(l, m)) throw Error("core complex is not a subcomplex of the ambient");
}

// in_core[i] says whether face i of M lies in L.
std::vector<char> core_mask(const SimplicialComplex& l, const SimplicialComplex& m) {
  std::vector<char> mask(m.num_faces(), 0);
  for (const Face& f : l.faces()) mask[*m.index_of(*translate_face(f, l, m))] = 1;
  return mask;
}

}  // namespace

DerivedNeighborhood derived_neighborhood(const SimplicialComplex& l,
                                         std::shared_ptr<const DerivedAmbient> ambient) {
  require_subcomplex(l, ambient->base());
  const auto in_core = core_mask(l, ambient->base());
  const SimplicialComplex& sd2 = ambient->sd2();
  std::vector<Face> kept;
  for (const Face& f : sd2.faces())
    if (in_core[ambient->mu_mu_index(f)]) kept.push_back(f);
  DerivedNeighborhood n;
  n.core = l;
  n.faces = SimplicialComplex::from_faces(sd2.vertices(), std::move(kept));
  n.ambient = std::move(ambient);
  return n;
}

DerivedNeighborhood derived_neighborhood(const SimplicialComplex& l, const SimplicialComplex& m,
                                         std::size_t max_facets) {
  require_subcomplex(l, m);
  return derived_neighborhood(l, std::make_shared<const DerivedAmbient>(derived_ambient(m, max_facets)));
}

SimplicialComplex derived_neighborhood_oracle(const SimplicialComplex& l,
                                              const DerivedAmbient& ambient) {
  require_subcomplex(l, ambient.base());
  const SimplicialComplex& sd2 = ambient.sd2();
  // A vertex of sd sd M is a face of sd M, i.e. a chain of faces of M; its
  // label spells that chain out.
  std::vector<char> touches(sd2.num_vertices(), 0);
  for (VertexId v = 0; v < sd2.num_vertices(); ++v)
    touches[v] = l.contains(carrier(parse_chain_label(sd2.vertices()[v]))) ? 1 : 0;
  std::vector<Face> kept;
  for (std::size_t fi : sd2.facet_indices()) {
    const Face& f = sd2.face(fi);
    if (std::any_of(f.begin(), f.end(), [&](VertexId v) { return touches[v] != 0; }))
      kept.push_back(f);
  }
  return SimplicialComplex::from_faces(sd2.vertices(), std::move(kept));
}

SimplicialComplex derived_neighborhood_oracle(const SimplicialComplex& l,
                                              const SimplicialComplex& m,
                                              std::size_t max_facets) {
  require_subcomplex(l, m);
  return derived_neighborhood_oracle(l, derived_ambient(m, max_facets));
}

bool verify_nbhd_intersection(const SimplicialComplex& l1, const SimplicialComplex& l2,
                              std::shared_ptr<const DerivedAmbient> ambient) {
  auto n1 = derived_neighborhood(l1, ambient);
  auto n2 = derived_neighborhood(l2, ambient);
  auto n12 = derived_neighborhood(subcomplex_intersection(l1, l2), ambient);
  return subcomplex_intersection(n1.faces, n2.faces) == n12.faces;
}

bool verify_nbhd_intersection(const SimplicialComplex& l1, const SimplicialComplex& l2,
                              const SimplicialComplex& m, std::size_t max_facets) {
  require_subcomplex(l1, m);
  require_subcomplex(l2, m);
  return verify_nbhd_intersection(
      l1, l2, std::make_shared<const DerivedAmbient>(derived_ambient(m, max_facets)));
}

SimplicialComplex simplicial_complement(const SimplicialComplex& l,
                                        std::shared_ptr<const DerivedAmbient> ambient) {
  const SimplicialComplex& sd2 = ambient->sd2();
  auto n = derived_neighborhood(l, ambient);
  std::vector<Label> outside;
  for (const Label& v : sd2.vertices())
    if (!n.faces.vertex_id(v)) outside.push_back(v);
  return induced(sd2, outside);
}

SimplicialComplex simplicial_complement(const SimplicialComplex& l, const SimplicialComplex& m,
                                        std::size_t max_facets) {
  require_subcomplex(l, m);
  return simplicial_complement(
      l, std::make_shared<const DerivedAmbient>(derived_ambient(m, max_facets)));
}

std::optional<Label> is_cone(const SimplicialComplex& k) {
  if (k.empty()) return std::nullopt;
  // a is an apex iff every facet contains a.
  const auto facets = k.facet_indices();
  for (VertexId a = 0; a < k.num_vertices(); ++a) {
    const bool apex = std::all_of(facets.begin(), facets.end(), [&](std::size_t f) {
      return std::binary_search(k.face(f).begin(), k.face(f).end(), a);
    });
    if (apex) return k.vertices()[a];
  }
  return std::nullopt;
}

bool is_cone_with_apex(const SimplicialComplex& k, const Label& apex) {
  const auto a = k.vertex_id(apex);
  if (k.empty() || !a) return false;
  for (std::size_t f : k.facet_indices())
    if (!std::binary_search(k.face(f).begin(), k.face(f).end(), *a)) return false;
  return true;
}

CollapseResult greedy_collapse(const SimplicialComplex& k) {
  if (k.empty()) throw Error("cannot collapse the empty complex");
  const std::size_t n = k.num_faces();
  std::vector<std::vector<std::size_t>> facets_of(n), cofaces_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Face& f = k.face(i);
    if (f.size() < 2) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face g;
      g.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) g.push_back(f[j]);
      std::size_t gi = *k.index_of(g);
      facets_of[i].push_back(gi);
      cofaces_of[gi].push_back(i);
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> coface_count(n);
  std::set<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    coface_count[i] = cofaces_of[i].size();
    if (coface_count[i] == 1) free.insert(i);
  }

  CollapseResult result;
  auto touch = [&](std::size_t i) {
    if (alive[i] && coface_count[i] == 1)
      free.insert(i);
    else
      free.erase(i);
  };
  while (!free.empty()) {
    const std::size_t tau = *free.begin();
    std::size_t sigma = n;
    for (std::size_t c : cofaces_of[tau])
      if (alive[c]) sigma = c;
    alive[tau] = 0;
    alive[sigma] = 0;
    free.erase(tau);
    free.erase(sigma);
    for (std::size_t r : facets_of[sigma]) {
      --coface_count[r];
      touch(r);
    }
    for (std::size_t r : facets_of[tau]) {
      --coface_count[r];
      touch(r);
    }
    ++result.pairs_removed;
  }

  std::vector<Face> left;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) left.push_back(k.face(i));
  result.remaining = SimplicialComplex::from_faces(k.vertices(), std::move(left));
  result.status = result.remaining.num_faces() == 1 ? CollapseStatus::collapsed_to_point
                                                     : CollapseStatus::stuck;
  result.definitive = result.pairs_removed == 0 && n > 1;
  return result;
}

}  // namespace nervelab
