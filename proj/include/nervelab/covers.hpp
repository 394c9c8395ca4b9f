#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/product_cells.hpp"

namespace nervelab {

/// Indexed family of finite sets.
struct SetCover {
  std::map<std::string, std::vector<std::string>> members;
};

/// Complex on the index set; a subfamily spans a face iff its members share
/// an element. Empty members are an error unless `drop_empty` is set.
SimplicialComplex nerve_of_sets(const SetCover& cover, bool drop_empty = false);

/// An ambient complex and named subcomplexes of it.
///
/// This is the combinatorial stand-in for an open cover: the open sets are
/// replaced by closed subcomplexes (typically derived neighborhoods, whose
/// interiors are the open sets one would use geometrically).
class SubcomplexCover {
 public:
  SubcomplexCover() = default;
  SubcomplexCover(SimplicialComplex ambient, std::map<std::string, SimplicialComplex> members,
                  bool drop_empty = false);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::vector<std::string>& indices() const { return indices_; }
  const std::vector<SimplicialComplex>& members() const { return members_; }
  const SimplicialComplex& member(const std::string& index) const;
  std::size_t size() const { return members_.size(); }

 private:
  SimplicialComplex ambient_;
  std::vector<std::string> indices_;
  std::vector<SimplicialComplex> members_;
};

/// Nerve on the index labels. Members of a subfamily meet iff they share a
/// vertex, since members are downward closed.
SimplicialComplex nerve_of_subcomplexes(const SubcomplexCover& cover);

/// Face-set intersection of the selected members; `indices` must be nonempty.
SimplicialComplex cover_intersection(const SubcomplexCover& cover,
                                     const std::vector<std::string>& indices);

/// Union of all members (the U_empty convention).
SimplicialComplex cover_union(const SubcomplexCover& cover);

struct IntersectionReport {
  Simplex indices;
  std::size_t faces = 0;
  std::optional<Label> cone_apex;
  bool greedy_collapsible = false;
  bool acyclic = false;
};

enum class CoverClass { certified_good, acyclic, neither };
std::string to_string(CoverClass c);

struct CoverClassification {
  std::vector<IntersectionReport> intersections;  // one per nerve face, canonical order
  CoverClass label = CoverClass::neither;
};

/// Evidence per nonempty intersection, strongest first: cone, greedy
/// collapse to a point, acyclic. "certified-good" needs a cone or a collapse
/// everywhere; "acyclic" needs acyclicity everywhere.
CoverClassification classify_cover(const SubcomplexCover& cover);

/// Cells s x t for s in the nerve and t in the intersection U_s; the left
/// factor is the nerve and the right factor is the ambient complex.
ProductCellComplex blowup_complex(const SubcomplexCover& cover);

struct NerveTheoremReport {
  bool precondition_met = false;
  std::vector<Simplex> non_acyclic;  // offending index sets
  std::optional<HomologyGroups> nerve;
  std::optional<HomologyGroups> union_;
  std::optional<HomologyGroups> blowup;
  bool agree = false;
};

/// Compares the homology of the nerve, of the union and of the blowup
/// complex. Groups are compared abstractly per degree; no maps are built.
/// A non-acyclic cover is reported, not raised.
NerveTheoremReport verify_nerve_theorem(const SubcomplexCover& cover);

}  // namespace nervelab
