#include "nervelab/covers.hpp"

#include <algorithm>

#include "nervelab/neighborhoods.hpp"

namespace nervelab {

SimplicialComplex nerve_of_sets(const SetCover& cover, bool drop_empty) {
  std::map<std::string, std::vector<Label>> holders;  // element -> member indices
  for (const auto& [index, elements] : cover.members) {
    if (elements.empty()) {
      if (drop_empty) continue;
      throw Error("cover member '" + index + "' is empty");
    }
    for (const auto& e : elements) holders[e].push_back(index);
  }
  std::vector<std::vector<Label>> facets;
  for (auto& [element, indices] : holders) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    facets.push_back(std::move(indices));
  }
  return SimplicialComplex::from_facets(facets, "nerve");
}

SubcomplexCover::SubcomplexCover(SimplicialComplex ambient,
                                 std::map<std::string, SimplicialComplex> members,
                                 bool drop_empty)
    : ambient_(std::move(ambient)) {
  for (auto& [index, member] : members) {
    if (member.empty()) {
      if (drop_empty) continue;
      throw Error("cover member '" + index + "' is empty");
    }
    if (!is_subcomplex(member, ambient_))
      throw Error("cover member '" + index + "' is not a subcomplex of the ambient complex");
    indices_.push_back(index);
    members_.push_back(std::move(member));
  }
}

const SimplicialComplex& SubcomplexCover::member(const std::string& index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) throw Error("unknown cover index '" + index + "'");
  return members_[static_cast<std::size_t>(it - indices_.begin())];
}

namespace {

using Mask = std::vector<char>;

// Membership of every ambient face in every member.
std::vector<Mask> member_masks(const SubcomplexCover& cover) {
  const SimplicialComplex& amb = cover.ambient();
  std::vector<Mask> masks;
  for (const SimplicialComplex& m : cover.members()) {
    Mask mask(amb.num_faces(), 0);
    for (const Face& f : m.faces()) mask[*amb.index_of(*translate_face(f, m, amb))] = 1;
    masks.push_back(std::move(mask));
  }
  return masks;
}

std::size_t position_of(const SubcomplexCover& cover, const std::string& index) {
  const auto& ix = cover.indices();
  auto it = std::lower_bound(ix.begin(), ix.end(), index);
  if (it == ix.end() || *it != index) throw Error("unknown cover index '" + index + "'");
  return static_cast<std::size_t>(it - ix.begin());
}

Mask intersect(const SubcomplexCover& cover, const std::vector<Mask>& masks,
               const std::vector<std::string>& indices) {
  if (indices.empty()) throw Error("intersection over an empty index set");
  Mask out = masks[position_of(cover, indices.front())];
  for (std::size_t i = 1; i < indices.size(); ++i) {
    const Mask& m = masks[position_of(cover, indices[i])];
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = out[f] && m[f];
  }
  return out;
}

SimplicialComplex from_mask(const SimplicialComplex& amb, const Mask& mask) {
  std::vector<Face> faces;
  for (std::size_t f = 0; f < mask.size(); ++f)
    if (mask[f]) faces.push_back(amb.face(f));
  return SimplicialComplex::from_faces(amb.vertices(), std::move(faces));
}

}  // namespace

SimplicialComplex nerve_of_subcomplexes(const SubcomplexCover& cover) {
  std::vector<std::vector<Label>> facets;
  for (const Label& v : cover.ambient().vertices()) {
    std::vector<Label> holders;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (cover.members()[i].vertex_id(v)) holders.push_back(cover.indices()[i]);
    if (!holders.empty()) facets.push_back(std::move(holders));
  }
  return SimplicialComplex::from_facets(facets, "nerve");
}

SimplicialComplex cover_intersection(const SubcomplexCover& cover,
                                     const std::vector<std::string>& indices) {
  return from_mask(cover.ambient(), intersect(cover, member_masks(cover), indices));
}

SimplicialComplex cover_union(const SubcomplexCover& cover) {
  SimplicialComplex out;
  for (const auto& m : cover.members()) out = subcomplex_union(out, m);
  return out;
}

std::string to_string(CoverClass c) {
  switch (c) {
    case CoverClass::certified_good:
      return "certified-good";
    case CoverClass::acyclic:
      return "acyclic";
    case CoverClass::neither:
      return "neither";
  }
  return "unknown";
}

CoverClassification classify_cover(const SubcomplexCover& cover) {
  const auto masks = member_masks(cover);
  const SimplicialComplex nerve = nerve_of_subcomplexes(cover);
  CoverClassification out;
  bool all_certified = true, all_acyclic = true;
  for (std::size_t s = 0; s < nerve.num_faces(); ++s) {
    IntersectionReport r;
    r.indices = nerve.simplex(s);
    SimplicialComplex x = from_mask(cover.ambient(), intersect(cover, masks, r.indices));
    r.faces = x.num_faces();
    r.cone_apex = is_cone(x);
    r.greedy_collapsible = greedy_collapse(x).status == CollapseStatus::collapsed_to_point;
    r.acyclic = is_acyclic(x);
    all_certified = all_certified && (r.cone_apex || r.greedy_collapsible);
    all_acyclic = all_acyclic && r.acyclic;
    out.intersections.push_back(std::move(r));
  }
  out.label = all_certified ? CoverClass::certified_good
              : all_acyclic ? CoverClass::acyclic
                            : CoverClass::neither;
  return out;
}

ProductCellComplex blowup_complex(const SubcomplexCover& cover) {
  const auto masks = member_masks(cover);
  SimplicialComplex nerve = nerve_of_subcomplexes(cover);
  std::vector<ProductCellComplex::Cell> cells;
  for (std::size_t s = 0; s < nerve.num_faces(); ++s) {
    Mask m = intersect(cover, masks, nerve.simplex(s));
    for (std::size_t t = 0; t < m.size(); ++t)
      if (m[t]) cells.push_back({s, t});
  }
  return ProductCellComplex(std::move(nerve), cover.ambient(), std::move(cells));
}

NerveTheoremReport verify_nerve_theorem(const SubcomplexCover& cover) {
  NerveTheoremReport report;
  const auto masks = member_masks(cover);
  const SimplicialComplex nerve = nerve_of_subcomplexes(cover);
  for (std::size_t s = 0; s < nerve.num_faces(); ++s) {
    Simplex idx = nerve.simplex(s);
    if (!is_acyclic(from_mask(cover.ambient(), intersect(cover, masks, idx))))
      report.non_acyclic.push_back(std::move(idx));
  }
  report.precondition_met = report.non_acyclic.empty();
  if (!report.precondition_met) return report;

  report.nerve = homology(nerve);
  report.union_ = homology(cover_union(cover));
  report.blowup = homology(blowup_complex(cover).chain_complex());
  report.agree = same_groups(*report.nerve, *report.union_) &&
                 same_groups(*report.nerve, *report.blowup);
  return report;
}

}  // namespace nervelab
