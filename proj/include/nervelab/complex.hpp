#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nervelab {

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed the configured facet cap.
class SizeCapError : public Error {
 public:
  SizeCapError(const std::string& what, std::size_t predicted, std::size_t cap)
      : Error(what), predicted_(predicted), cap_(cap) {}
  std::size_t predicted() const noexcept { return predicted_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t predicted_;
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultMaxFacets = 1'000'000;

using Label = std::string;

/// A face given by its vertex labels, strictly increasing.
using Simplex = std::vector<Label>;

/// Index into the sorted label table of one complex. Ids preserve label order.
using VertexId = std::uint32_t;

/// A face given by vertex ids, strictly increasing.
using Face = std::vector<VertexId>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Sorts and validates a list of labels into a Simplex.
/// Throws on an empty list or a repeated label.
Simplex make_simplex(std::vector<Label> labels);

/// Abstract simplicial complex with the full downward closure stored.
///
/// Labels are kept sorted, so vertex ids inherit the label order and the
/// lexicographic order on id vectors is the canonical face order. The empty
/// face is never stored. Values are immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets. Duplicates are merged.
  static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets,
                                       std::string name = {});

  /// Downward closure of faces expressed as indices into `labels`.
  /// `labels` need not be sorted; unused labels are dropped.
  static SimplicialComplex from_faces(std::span<const Label> labels, std::vector<Face> faces,
                                      std::string name = {});

  const std::string& name() const noexcept { return name_; }
  SimplicialComplex renamed(std::string name) const;

  const std::vector<Label>& vertices() const noexcept { return labels_; }
  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::size_t num_faces() const noexcept { return faces_.size(); }
  const Face& face(std::size_t index) const { return faces_[index]; }
  bool empty() const noexcept { return faces_.empty(); }

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  /// Indices into faces() of the k-dimensional faces, in canonical order.
  std::span<const std::size_t> faces_of_dim(int k) const;

  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  std::optional<VertexId> vertex_id(std::string_view label) const;
  std::optional<std::size_t> index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }
  bool contains(const Simplex& s) const;

  /// Converts labels to ids; nullopt if a label is unknown.
  std::optional<Face> to_face(const Simplex& s) const;
  Simplex simplex(const Face& f) const;
  Simplex simplex(std::size_t index) const { return simplex(faces_[index]); }

  /// Indices of faces not properly contained in another face.
  std::vector<std::size_t> facet_indices() const;
  std::vector<Simplex> facets() const;

  /// Same vertex labels and same faces. Names are ignored.
  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && faces_ == other.faces_;
  }

 private:
  void index_faces();

  std::string name_;
  std::vector<Label> labels_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::unordered_map<Face, std::size_t, FaceHash> index_;
};

/// K[U]: the faces of K whose vertices all lie in U.
SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Label>& vertex_set);

/// Closed star st(v, K) = { s in K : s u {v} in K }.
SimplicialComplex star(const Label& v, const SimplicialComplex& k);

/// Link of a vertex: faces of the star not containing it.
SimplicialComplex link(const Label& v, const SimplicialComplex& k);

/// Full simplex on labels 1..d+1.
SimplicialComplex simplex_complex(int d);

/// Boundary of the d-simplex on labels 1..d+1.
SimplicialComplex boundary_complex(int d);

/// Boundary of the (d+1)-dimensional cross-polytope: vertices u1..u{d+1},
/// v1..v{d+1}; a set is a face iff it contains no pair {uj, vj}.
SimplicialComplex crosspolytope(int d);

SimplicialComplex k_skeleton(const SimplicialComplex& k, int dim);

/// Cone with the given apex, which must be a fresh label.
SimplicialComplex cone(const Label& apex, const SimplicialComplex& k);

SimplicialComplex subcomplex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex subcomplex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Every face of `sub` (by labels) is a face of `ambient`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient);

/// Vertex sets of the 1-skeleton components, each sorted, ordered by least vertex.
std::vector<std::vector<Label>> connected_components(const SimplicialComplex& k);

/// Exact backtracking search for a simplicial isomorphism a -> b.
/// Returns the image label of each vertex of `a`, in vertex order.
/// Practical for up to about a dozen vertices per side.
std::optional<std::vector<Label>> find_isomorphism(const SimplicialComplex& a,
                                                   const SimplicialComplex& b);

inline bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return find_isomorphism(a, b).has_value();
}

/// Pure, every ridge in exactly two facets, facet graph connected through ridges.
/// A best-effort manifold surrogate; it does not recognize manifolds.
bool is_pseudomanifold(const SimplicialComplex& k);

/// Maps a face of `from` to the corresponding face of `to` by labels.
std::optional<Face> translate_face(const Face& f, const SimplicialComplex& from,
                                   const SimplicialComplex& to);

}  // namespace nervelab
