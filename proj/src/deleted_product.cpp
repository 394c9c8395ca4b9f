#include "nervelab/deleted_product.hpp"

#include <algorithm>

#include "nervelab/subdivision.hpp"

namespace nervelab {

namespace {

bool disjoint(const Face& a, const Face& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

}  // namespace

bool DeletedProductComplex::involution_is_free() const {
  if (involution.size() != cells.size()) return false;
  std::vector<char> hit(involution.size(), 0);
  for (std::size_t i = 0; i < involution.size(); ++i) {
    const std::size_t j = involution[i];
    if (j >= involution.size() || j == i || involution[j] != i || hit[j]) return false;
    hit[j] = 1;
  }
  return true;
}

DeletedProductComplex deleted_product(const SimplicialComplex& k) {
  if (k.num_vertices() < 2) throw Error("deleted product needs at least two vertices");
  std::vector<ProductCellComplex::Cell> cells;
  for (std::size_t s = 0; s < k.num_faces(); ++s)
    for (std::size_t t = 0; t < k.num_faces(); ++t)
      if (disjoint(k.face(s), k.face(t))) cells.push_back({s, t});

  DeletedProductComplex out;
  out.base = k;
  out.cells = ProductCellComplex(k, k, std::move(cells));
  out.involution.reserve(out.cells.size());
  for (const auto& c : out.cells.cells()) out.involution.push_back(*out.cells.index_of({c.right, c.left}));
  return out;
}

bool is_remote(const Simplex& alpha, const Simplex& beta, const SimplicialComplex& l) {
  auto a = l.to_face(alpha);
  auto b = l.to_face(beta);
  if (!a || !b || !l.contains(*a) || !l.contains(*b)) throw Error("is_remote: face not in L");
  for (VertexId x : *a)
    for (VertexId y : *b)
      if (x != y && l.contains(Face{std::min(x, y), std::max(x, y)})) return false;
  return true;
}

bool is_strictly_remote(const Simplex& alpha, const Simplex& beta, const SimplicialComplex& l) {
  if (!is_remote(alpha, beta, l)) return false;
  return disjoint(*l.to_face(alpha), *l.to_face(beta));
}

FinenessReport fineness_check(const SimplicialComplex& l, const SimplicialComplex& k,
                              const CarrierMap& carrier_map) {
  // Carriers as face indices of K.
  std::vector<std::size_t> carrier(l.num_faces());
  for (std::size_t i = 0; i < l.num_faces(); ++i) {
    auto f = k.to_face(carrier_map(l.simplex(i)));
    if (!f || !k.contains(*f))
      throw Error("carrier map sends " + face_label(l.simplex(i)) + " outside K");
    carrier[i] = *k.index_of(*f);
  }
  // A face is carried by a face containing the carriers of its vertices.
  for (std::size_t i = 0; i < l.num_faces(); ++i) {
    const Face& outer = k.face(carrier[i]);
    for (VertexId v : l.face(i)) {
      const Face& inner = k.face(carrier[*l.index_of(Face{v})]);
      if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()))
        throw Error("carrier map is not monotone at " + face_label(l.simplex(i)));
    }
  }

  std::vector<std::vector<VertexId>> nbrs(l.num_vertices());
  for (std::size_t e : l.faces_of_dim(1)) {
    nbrs[l.face(e)[0]].push_back(l.face(e)[1]);
    nbrs[l.face(e)[1]].push_back(l.face(e)[0]);
  }
  auto remote = [&](const Face& a, const Face& b) {
    for (VertexId x : a)
      for (VertexId y : nbrs[x])
        if (std::binary_search(b.begin(), b.end(), y)) return false;
    return true;
  };

  FinenessReport report;
  for (std::size_t i = 0; i < l.num_faces(); ++i) {
    for (std::size_t j = 0; j < l.num_faces(); ++j) {
      // Disjoint carriers are themselves the disjoint gamma, delta.
      if (!disjoint(k.face(carrier[i]), k.face(carrier[j]))) continue;
      ++report.pairs_checked;
      if (remote(l.face(i), l.face(j))) continue;
      report.passed = false;
      report.counterexample = FinenessReport::Counterexample{
          l.simplex(i), l.simplex(j), k.simplex(carrier[i]), k.simplex(carrier[j])};
      return report;
    }
  }
  return report;
}

FinenessReport fineness_check_sd(const SimplicialComplex& k, std::size_t max_facets) {
  Subdivision s = barycentric(k, max_facets);
  return fineness_check(s.complex, k, [&](const Simplex& face) {
    return s.base.simplex(s.carrier_index(*s.complex.to_face(face)));
  });
}

bool in_metastable_range(int k, int d) {
  if (k < 0 || d < 1) throw Error("metastable range needs k >= 0 and d >= 1");
  return 3 * k <= 2 * d - 3;
}

}  // namespace nervelab
