#include "nervelab/constructions.hpp"

#include <algorithm>

#include "nervelab/neighborhoods.hpp"
#include "nervelab/subdivision.hpp"

namespace nervelab {

SimplicialComplex remove_facet(const SimplicialComplex& sigma, const Simplex& facet) {
  auto f = sigma.to_face(make_simplex(facet));
  if (!f || !sigma.contains(*f)) throw Error("remove_facet: face is not in the complex");
  const auto facets = sigma.facet_indices();
  if (std::find(facets.begin(), facets.end(), *sigma.index_of(*f)) == facets.end())
    throw Error("remove_facet: " + face_label(sigma.simplex(*f)) + " is not a facet");
  if (static_cast<int>(f->size()) - 1 != sigma.dimension())
    throw Error("remove_facet: facet has dimension " + std::to_string(f->size() - 1) +
                ", complex has dimension " + std::to_string(sigma.dimension()));
  std::vector<Face> kept;
  for (const Face& g : sigma.faces())
    if (g != *f) kept.push_back(g);
  return SimplicialComplex::from_faces(sigma.vertices(), std::move(kept), sigma.name());
}

namespace {

// Collar faces on u[j], v[j]: one of {none, uj, vj} per j, excluding U and V.
SimplicialComplex collar_on(const std::vector<Label>& u, const std::vector<Label>& v) {
  const std::size_t n = u.size();
  std::vector<Label> labels = u;
  labels.insert(labels.end(), v.begin(), v.end());
  std::vector<Face> faces;
  std::size_t patterns = 1;
  for (std::size_t j = 0; j < n; ++j) patterns *= 3;
  for (std::size_t code = 0; code < patterns; ++code) {
    Face f;
    std::size_t rest = code, us = 0, vs = 0;
    for (std::size_t j = 0; j < n; ++j, rest /= 3) {
      if (rest % 3 == 1) {
        f.push_back(static_cast<VertexId>(j));
        ++us;
      } else if (rest % 3 == 2) {
        f.push_back(static_cast<VertexId>(n + j));
        ++vs;
      }
    }
    if (f.empty() || us == n || vs == n) continue;
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

}  // namespace

SimplicialComplex collar(int d) {
  if (d < 1) throw Error("collar dimension must be >= 1");
  std::vector<Label> u, v;
  for (int j = 1; j <= d + 1; ++j) {
    u.push_back("u" + std::to_string(j));
    v.push_back("v" + std::to_string(j));
  }
  return collar_on(u, v).renamed("collar-" + std::to_string(d));
}

CollaredComplex attach_collar(const SimplicialComplex& b, const std::vector<Label>& u) {
  if (u.empty()) throw Error("attach_collar: empty facet");
  const Simplex sorted = make_simplex(u);
  if (b.contains(sorted)) throw Error("attach_collar: the facet to be capped is still a face of B");
  for (std::size_t drop = 0; drop < sorted.size() && sorted.size() > 1; ++drop) {
    Simplex ridge = sorted;
    ridge.erase(ridge.begin() + static_cast<long>(drop));
    if (!b.contains(ridge))
      throw Error("attach_collar: boundary face " + face_label(ridge) + " is missing from B");
  }
  if (sorted.size() == 1 && !b.empty())
    throw Error("attach_collar: a vertex facet has no boundary to glue along");

  CollaredComplex out;
  out.removed_facet = u;
  for (std::size_t j = 1; j <= u.size(); ++j) {
    Label fresh = "v#" + std::to_string(j);
    if (b.vertex_id(fresh)) throw Error("attach_collar: label '" + fresh + "' already in use");
    out.collar_vertices.push_back(std::move(fresh));
  }
  out.b = b;
  out.gamma = collar_on(u, out.collar_vertices);
  out.c = subcomplex_union(b, out.gamma).renamed(b.name().empty() ? "" : "c-" + b.name());
  return out;
}

CollaredComplex build_c(const SimplicialComplex& sigma, const Simplex& facet) {
  CollaredComplex out = attach_collar(remove_facet(sigma, facet), facet);
  out.sigma = sigma;
  if (!sigma.name().empty()) out.c = out.c.renamed("c-" + sigma.name());
  return out;
}

SimplicialComplex cap(const SimplicialComplex& c, const std::vector<Label>& collar_vertices) {
  const Simplex v = make_simplex(collar_vertices);
  auto f = c.to_face(v);
  if (!f) throw Error("cap: collar vertex missing from the complex");
  if (c.contains(*f)) throw Error("cap: the complex is already capped");
  std::vector<Face> faces = c.faces();
  faces.push_back(*f);
  return SimplicialComplex::from_faces(c.vertices(), std::move(faces), c.name());
}

SimplicialComplex cap(const CollaredComplex& c) { return cap(c.c, c.collar_vertices); }

SubcomplexCover star_cover(const SimplicialComplex& k, std::size_t max_facets) {
  if (k.empty()) throw Error("star cover of the empty complex");
  SimplicialComplex sdk = sd(k, max_facets);
  std::map<std::string, SimplicialComplex> members;
  for (const Label& v : k.vertices()) members.emplace(v, star(face_label({v}), sdk));
  return SubcomplexCover(std::move(sdk), std::move(members));
}

SimplicialComplex default_ambient(const SimplicialComplex& k) {
  std::vector<Label> all = k.vertices();
  Label fresh = "o#";
  while (k.vertex_id(fresh)) fresh += "#";
  all.push_back(fresh);
  std::vector<std::vector<Label>> facets;
  for (std::size_t drop = 0; drop < all.size(); ++drop) {
    std::vector<Label> f;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != drop) f.push_back(all[i]);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets, "ambient-sphere");
}

RepresentationReport representation_pipeline(const SimplicialComplex& k,
                                             const SimplicialComplex& m,
                                             std::size_t max_facets) {
  if (k.empty()) throw Error("representation pipeline needs a nonempty complex");
  if (!is_subcomplex(k, m)) throw Error("K is not a subcomplex of M");
  for (std::size_t f : m.facet_indices())
    if (static_cast<int>(m.face(f).size()) - 1 != m.dimension())
      throw Error("ambient complex M is not pure");
  const std::size_t predicted = predicted_sd_facets(m, 3);
  if (predicted > max_facets)
    throw SizeCapError("third subdivision of M would have " + std::to_string(predicted) +
                           " facets, cap is " + std::to_string(max_facets),
                       predicted, max_facets);

  RepresentationReport report;
  report.k = k;
  report.m = m;
  const SimplicialComplex sdm = sd(m, max_facets);
  const SimplicialComplex sdk = sd(k, max_facets);
  auto ambient = std::make_shared<const DerivedAmbient>(derived_ambient(sdm, max_facets));
  report.ambient_facets = ambient->sd2().facet_indices().size();

  std::map<std::string, SimplicialComplex> stars, thickened;
  for (const Label& v : k.vertices()) {
    SimplicialComplex x = star(face_label({v}), sdk);
    thickened.emplace(v, derived_neighborhood(x, ambient).faces);
    stars.emplace(v, std::move(x));
  }
  SubcomplexCover star_family(sdm, std::move(stars));
  SubcomplexCover cover(ambient->sd2(), std::move(thickened));
  report.star_nerve = nerve_of_subcomplexes(star_family);
  report.nerve = nerve_of_subcomplexes(cover);
  report.nerve_isomorphic = is_isomorphic(report.nerve, k);
  report.nerve_matches_stars = report.nerve == report.star_nerve;

  report.all_collapse = true;
  for (std::size_t s = 0; s < report.nerve.num_faces(); ++s) {
    RepresentationReport::Intersection item;
    item.indices = report.nerve.simplex(s);
    SimplicialComplex x = cover_intersection(cover, item.indices);
    item.faces = x.num_faces();
    item.collapsed = greedy_collapse(x).status == CollapseStatus::collapsed_to_point;
    report.all_collapse = report.all_collapse && item.collapsed;
    report.intersections.push_back(std::move(item));
  }
  return report;
}

}  // namespace nervelab
