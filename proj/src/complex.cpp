#include "nervelab/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

namespace nervelab {

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (VertexId v : f) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Simplex make_simplex(std::vector<Label> labels) {
  if (labels.empty()) throw Error("empty face");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error("duplicate vertex '" + *std::adjacent_find(labels.begin(), labels.end()) +
                "' inside one face");
  return labels;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facets,
                                                 std::string name) {
  std::vector<Label> labels;
  for (const auto& f : facets) {
    if (f.empty()) throw Error("empty facet");
    for (const auto& l : f) {
      if (l.empty()) throw Error("empty vertex label");
      labels.push_back(l);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (const auto& f : facets) {
    Face face;
    face.reserve(f.size());
    for (const auto& l : f) {
      auto it = std::lower_bound(labels.begin(), labels.end(), l);
      face.push_back(static_cast<VertexId>(it - labels.begin()));
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw Error("duplicate vertex inside one facet");
    faces.push_back(std::move(face));
  }
  return from_faces(labels, std::move(faces), std::move(name));
}

SimplicialComplex SimplicialComplex::from_faces(std::span<const Label> labels,
                                                std::vector<Face> faces, std::string name) {
  // Closure: walk dimensions downward, adding every codimension-one face.
  std::size_t top = 0;
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    top = std::max(top, f.size());
  }
  std::vector<std::unordered_set<Face, FaceHash>> layers(top + 1);
  for (auto& f : faces) {
    if (f.empty()) continue;
    layers[f.size()].insert(std::move(f));
  }
  for (std::size_t n = top; n >= 2; --n) {
    for (const Face& f : layers[n]) {
      for (std::size_t drop = 0; drop < n; ++drop) {
        Face g;
        g.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
          if (i != drop) g.push_back(f[i]);
        layers[n - 1].insert(std::move(g));
      }
    }
  }

  // Compact the label table to the vertices actually used, keeping label order.
  std::vector<VertexId> used;
  if (layers.size() > 1)
    for (const Face& v : layers[1]) used.push_back(v[0]);
  std::sort(used.begin(), used.end(),
            [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
  std::vector<VertexId> remap(labels.size(), 0);
  SimplicialComplex k;
  k.name_ = std::move(name);
  k.labels_.reserve(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    remap[used[i]] = static_cast<VertexId>(i);
    k.labels_.push_back(labels[used[i]]);
  }
  if (std::adjacent_find(k.labels_.begin(), k.labels_.end()) != k.labels_.end())
    throw Error("duplicate vertex label '" +
                *std::adjacent_find(k.labels_.begin(), k.labels_.end()) + "'");

  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  k.faces_.reserve(total);
  for (auto& layer : layers) {
    for (const Face& f : layer) {
      Face g;
      g.reserve(f.size());
      for (VertexId v : f) g.push_back(remap[v]);
      std::sort(g.begin(), g.end());
      k.faces_.push_back(std::move(g));
    }
  }
  std::sort(k.faces_.begin(), k.faces_.end());
  k.index_faces();
  return k;
}

void SimplicialComplex::index_faces() {
  by_dim_.clear();
  index_.clear();
  index_.reserve(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    std::size_t d = faces_[i].size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(i);
    index_.emplace(faces_[i], i);
  }
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  SimplicialComplex k = *this;
  k.name_ = std::move(name);
  return k;
}

std::span<const std::size_t> SimplicialComplex::faces_of_dim(int k) const {
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(by_dim_.size());
  for (const auto& layer : by_dim_) f.push_back(layer.size());
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < by_dim_.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[k].size());
  return chi;
}

std::optional<VertexId> SimplicialComplex::vertex_id(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const Label& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Face> SimplicialComplex::to_face(const Simplex& s) const {
  Face f;
  f.reserve(s.size());
  for (const auto& l : s) {
    auto id = vertex_id(l);
    if (!id) return std::nullopt;
    f.push_back(*id);
  }
  std::sort(f.begin(), f.end());
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  auto f = to_face(s);
  return f && contains(*f);
}

Simplex SimplicialComplex::simplex(const Face& f) const {
  Simplex s;
  s.reserve(f.size());
  for (VertexId v : f) s.push_back(labels_[v]);
  return s;
}

std::vector<std::size_t> SimplicialComplex::facet_indices() const {
  std::vector<char> covered(faces_.size(), 0);
  for (const Face& f : faces_) {
    if (f.size() < 2) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face g;
      g.reserve(f.size() - 1);
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) g.push_back(f[i]);
      covered[index_.at(g)] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (!covered[i]) out.push_back(i);
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t i : facet_indices()) out.push_back(simplex(i));
  return out;
}

std::optional<Face> translate_face(const Face& f, const SimplicialComplex& from,
                                   const SimplicialComplex& to) {
  Face g;
  g.reserve(f.size());
  for (VertexId v : f) {
    auto id = to.vertex_id(from.vertices()[v]);
    if (!id) return std::nullopt;
    g.push_back(*id);
  }
  // Both tables are sorted by label, so the translated face stays sorted.
  return g;
}

namespace {

SimplicialComplex filter_faces(const SimplicialComplex& k,
                               const std::function<bool(const Face&)>& keep,
                               std::string name = {}) {
  std::vector<Face> kept;
  for (const Face& f : k.faces())
    if (keep(f)) kept.push_back(f);
  return SimplicialComplex::from_faces(k.vertices(), std::move(kept), std::move(name));
}

std::vector<Label> numbered(const std::string& prefix, int first, int last) {
  std::vector<Label> out;
  for (int i = first; i <= last; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Label>& vertex_set) {
  std::vector<char> in(k.num_vertices(), 0);
  for (const auto& l : vertex_set) {
    auto id = k.vertex_id(l);
    if (!id) throw Error("induced: unknown vertex '" + l + "'");
    in[*id] = 1;
  }
  return filter_faces(k, [&](const Face& f) {
    return std::all_of(f.begin(), f.end(), [&](VertexId v) { return in[v] != 0; });
  });
}

SimplicialComplex star(const Label& v, const SimplicialComplex& k) {
  auto id = k.vertex_id(v);
  if (!id) throw Error("star: unknown vertex '" + v + "'");
  return filter_faces(k, [&](const Face& f) {
    if (std::binary_search(f.begin(), f.end(), *id)) return true;
    Face g = f;
    g.insert(std::lower_bound(g.begin(), g.end(), *id), *id);
    return k.contains(g);
  });
}

SimplicialComplex link(const Label& v, const SimplicialComplex& k) {
  auto id = k.vertex_id(v);
  if (!id) throw Error("link: unknown vertex '" + v + "'");
  return filter_faces(k, [&](const Face& f) {
    if (std::binary_search(f.begin(), f.end(), *id)) return false;
    Face g = f;
    g.insert(std::lower_bound(g.begin(), g.end(), *id), *id);
    return k.contains(g);
  });
}

SimplicialComplex simplex_complex(int d) {
  if (d < 0) throw Error("simplex dimension must be >= 0");
  return SimplicialComplex::from_facets({numbered("", 1, d + 1)},
                                        "delta-" + std::to_string(d));
}

SimplicialComplex boundary_complex(int d) {
  if (d < 1) throw Error("boundary complex needs dimension >= 1");
  auto all = numbered("", 1, d + 1);
  std::vector<std::vector<Label>> facets;
  for (int drop = 0; drop <= d; ++drop) {
    std::vector<Label> f;
    for (int i = 0; i <= d; ++i)
      if (i != drop) f.push_back(all[static_cast<std::size_t>(i)]);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets, "boundary-delta-" + std::to_string(d));
}

SimplicialComplex crosspolytope(int d) {
  if (d < 1) throw Error("crosspolytope dimension must be >= 1");
  // Facets pick one of {uj, vj} for every j.
  std::vector<std::vector<Label>> facets;
  const int n = d + 1;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<Label> f;
    for (int j = 0; j < n; ++j)
      f.push_back(((mask >> j) & 1U ? "v" : "u") + std::to_string(j + 1));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets, "crosspolytope-" + std::to_string(d));
}

SimplicialComplex k_skeleton(const SimplicialComplex& k, int dim) {
  return filter_faces(k, [&](const Face& f) { return static_cast<int>(f.size()) <= dim + 1; });
}

SimplicialComplex cone(const Label& apex, const SimplicialComplex& k) {
  if (k.vertex_id(apex)) throw Error("cone: apex '" + apex + "' already a vertex");
  std::vector<Label> labels = k.vertices();
  labels.push_back(apex);
  const auto a = static_cast<VertexId>(labels.size() - 1);
  std::vector<Face> faces{{a}};
  for (const Face& f : k.faces()) {
    Face g = f;
    g.push_back(a);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

SimplicialComplex subcomplex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Label> labels = a.vertices();
  labels.insert(labels.end(), b.vertices().begin(), b.vertices().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id = [&](const Label& l) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) -
                                 labels.begin());
  };
  std::vector<Face> faces;
  faces.reserve(a.num_faces() + b.num_faces());
  for (const auto* k : {&a, &b}) {
    for (const Face& f : k->faces()) {
      Face g;
      g.reserve(f.size());
      for (VertexId v : f) g.push_back(id(k->vertices()[v]));
      faces.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

SimplicialComplex subcomplex_intersection(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
  return filter_faces(a, [&](const Face& f) {
    auto g = translate_face(f, a, b);
    return g && b.contains(*g);
  });
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  for (const Face& f : sub.faces()) {
    auto g = translate_face(f, sub, ambient);
    if (!g || !ambient.contains(*g)) return false;
  }
  return true;
}

std::vector<std::vector<Label>> connected_components(const SimplicialComplex& k) {
  std::vector<VertexId> parent(k.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e : k.faces_of_dim(1)) {
    VertexId a = find(k.face(e)[0]), b = find(k.face(e)[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::vector<Label>> groups;
  for (VertexId v = 0; v < k.num_vertices(); ++v) groups[find(v)].push_back(k.vertices()[v]);
  // Roots are the least id of each component and ids follow label order.
  std::vector<std::vector<Label>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

namespace {

struct IsoSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  std::vector<std::vector<std::size_t>> faces_at_a, faces_at_b;
  std::vector<std::vector<std::size_t>> sig_a, sig_b;
  std::vector<VertexId> order;
  std::vector<long> map_ab, map_ba;

  IsoSearch(const SimplicialComplex& x, const SimplicialComplex& y) : a(x), b(y) {
    faces_at_a = incidence(a);
    faces_at_b = incidence(b);
    sig_a = signatures(a, faces_at_a);
    sig_b = signatures(b, faces_at_b);
    map_ab.assign(a.num_vertices(), -1);
    map_ba.assign(b.num_vertices(), -1);
  }

  static std::vector<std::vector<std::size_t>> incidence(const SimplicialComplex& k) {
    std::vector<std::vector<std::size_t>> out(k.num_vertices());
    for (std::size_t i = 0; i < k.num_faces(); ++i)
      for (VertexId v : k.face(i)) out[v].push_back(i);
    return out;
  }

  static std::vector<std::vector<std::size_t>> signatures(
      const SimplicialComplex& k, const std::vector<std::vector<std::size_t>>& at) {
    std::vector<std::vector<std::size_t>> out(k.num_vertices());
    const auto dims = static_cast<std::size_t>(k.dimension() + 1);
    for (VertexId v = 0; v < k.num_vertices(); ++v) {
      out[v].assign(dims, 0);
      for (std::size_t i : at[v]) ++out[v][k.face(i).size() - 1];
    }
    return out;
  }

  bool consistent(const SimplicialComplex& src, const SimplicialComplex& dst,
                  const std::vector<std::size_t>& touching, const std::vector<long>& fwd) const {
    for (std::size_t i : touching) {
      const Face& f = src.face(i);
      Face g;
      g.reserve(f.size());
      bool complete = true;
      for (VertexId v : f) {
        if (fwd[v] < 0) {
          complete = false;
          break;
        }
        g.push_back(static_cast<VertexId>(fwd[v]));
      }
      if (!complete) continue;
      std::sort(g.begin(), g.end());
      if (!dst.contains(g)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    VertexId v = order[depth];
    for (VertexId w = 0; w < b.num_vertices(); ++w) {
      if (map_ba[w] >= 0 || sig_a[v] != sig_b[w]) continue;
      map_ab[v] = w;
      map_ba[w] = v;
      if (consistent(a, b, faces_at_a[v], map_ab) && consistent(b, a, faces_at_b[w], map_ba) &&
          extend(depth + 1))
        return true;
      map_ab[v] = -1;
      map_ba[w] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Label>> find_isomorphism(const SimplicialComplex& a,
                                                   const SimplicialComplex& b) {
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  IsoSearch search(a, b);
  auto sa = search.sig_a, sb = search.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  // Most constrained first, then grow along edges so partial checks bite early.
  std::vector<char> placed(a.num_vertices(), 0);
  std::vector<std::vector<VertexId>> nbrs(a.num_vertices());
  for (std::size_t e : a.faces_of_dim(1)) {
    nbrs[a.face(e)[0]].push_back(a.face(e)[1]);
    nbrs[a.face(e)[1]].push_back(a.face(e)[0]);
  }
  auto weight = [&](VertexId v) { return search.faces_at_a[v].size(); };
  while (search.order.size() < a.num_vertices()) {
    std::optional<VertexId> best;
    std::size_t best_links = 0;
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (VertexId u : nbrs[v]) links += placed[u];
      if (!best || links > best_links || (links == best_links && weight(v) > weight(*best))) {
        best = v;
        best_links = links;
      }
    }
    placed[*best] = 1;
    search.order.push_back(*best);
  }
  if (!search.extend(0)) return std::nullopt;
  std::vector<Label> image;
  image.reserve(a.num_vertices());
  for (VertexId v = 0; v < a.num_vertices(); ++v)
    image.push_back(b.vertices()[static_cast<std::size_t>(search.map_ab[v])]);
  return image;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (k.empty()) return false;
  const int d = k.dimension();
  auto facets = k.facet_indices();
  for (std::size_t f : facets)
    if (static_cast<int>(k.face(f).size()) != d + 1) return false;
  if (d == 0) return facets.size() == 1;

  std::unordered_map<std::size_t, std::vector<std::size_t>> ridge_to_facets;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const Face& f = k.face(facets[fi]);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face g;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) g.push_back(f[i]);
      ridge_to_facets[*k.index_of(g)].push_back(fi);
    }
  }
  if (ridge_to_facets.size() != k.faces_of_dim(d - 1).size()) return false;
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, incident] : ridge_to_facets) {
    if (incident.size() != 2) return false;
    parent[find(incident[0])] = find(incident[1]);
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace nervelab
