#include "nervelab/corpus.hpp"

#include <algorithm>

#include "nervelab/constructions.hpp"

namespace nervelab {

namespace {

std::string num(int i) { return std::to_string(i); }

std::vector<SimplicialComplex> build_corpus() {
  std::vector<SimplicialComplex> out;
  for (int d = 0; d <= 4; ++d) out.push_back(simplex_complex(d));
  for (int d = 1; d <= 4; ++d) out.push_back(boundary_complex(d));
  for (int d = 1; d <= 3; ++d) out.push_back(crosspolytope(d));
  for (int d = 1; d <= 3; ++d) out.push_back(collar(d));
  out.push_back(csaszar_torus());
  out.push_back(rp2_6());
  out.push_back(cycle_complex(4));
  out.push_back(path_complex(3));
  out.push_back(path_complex(4));
  out.push_back(build_c(boundary_complex(3), {"1", "2", "3"}).c);
  out.push_back(build_c(boundary_complex(4), {"1", "2", "3", "4"}).c);
  return out;
}

}  // namespace

const std::vector<SimplicialComplex>& corpus() {
  static const std::vector<SimplicialComplex> all = build_corpus();
  return all;
}

std::vector<SimplicialComplex> corpus_small() {
  std::vector<SimplicialComplex> out;
  for (const SimplicialComplex& k : corpus())
    if (k.dimension() <= 2) out.push_back(k);
  return out;
}

std::optional<SimplicialComplex> corpus_lookup(std::string_view name) {
  for (const SimplicialComplex& k : corpus())
    if (k.name() == name) return k;
  return std::nullopt;
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw Error("a cycle needs at least three vertices");
  std::vector<std::vector<Label>> facets;
  for (int i = 1; i <= n; ++i) facets.push_back({num(i), num(i % n + 1)});
  return SimplicialComplex::from_facets(facets, "cycle-" + num(n));
}

SimplicialComplex path_complex(int n) {
  if (n < 2) throw Error("a path needs at least two vertices");
  std::vector<std::vector<Label>> facets;
  for (int i = 1; i < n; ++i) facets.push_back({num(i), num(i + 1)});
  return SimplicialComplex::from_facets(facets, "path-" + num(n));
}

SimplicialComplex csaszar_torus() {
  std::vector<std::vector<Label>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({num(i + 1), num((i + 1) % 7 + 1), num((i + 3) % 7 + 1)});
    facets.push_back({num(i + 1), num((i + 2) % 7 + 1), num((i + 3) % 7 + 1)});
  }
  return SimplicialComplex::from_facets(facets, "csaszar-torus");
}

SimplicialComplex rp2_6() {
  const std::vector<std::vector<Label>> facets = {
      {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
      {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"}};
  return SimplicialComplex::from_facets(facets, "rp2-6");
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_dim) {
  if (max_vertices < 1 || max_dim < 0) throw Error("random_complex: bad bounds");
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int top = std::min(max_dim, n - 1);
  const int count = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<std::vector<Label>> facets;
  for (int f = 0; f < count; ++f) {
    const int size = std::uniform_int_distribution<int>(1, top + 1)(rng);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Label> facet;
    for (int i = 0; i < size; ++i) facet.push_back(num(pool[i]));
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(facets, "random");
}

SimplicialComplex random_subcomplex(std::mt19937_64& rng, const SimplicialComplex& k) {
  if (k.empty()) throw Error("random_subcomplex of the empty complex");
  std::uniform_int_distribution<std::size_t> pick(0, k.num_faces() - 1);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<Face> chosen;
  for (std::size_t i = 0; i < count; ++i) chosen.push_back(k.face(pick(rng)));
  return SimplicialComplex::from_faces(k.vertices(), std::move(chosen), "random-sub");
}

}  // namespace nervelab
