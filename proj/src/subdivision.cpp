#include "nervelab/subdivision.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nervelab {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

std::vector<std::string_view> split_top_level(std::string_view label) {
  if (label.size() < 2 || label.front() != '[' || label.back() != ']')
    throw Error("malformed face label '" + std::string(label) + "'");
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    char c = label[i];
    if (c == '[') ++depth;
    if (c == ']' && --depth < 0) break;
    if (c == ',' && depth == 0) {
      parts.push_back(label.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error("unbalanced brackets in label '" + std::string(label) + "'");
  parts.push_back(label.substr(start, label.size() - 1 - start));
  for (auto p : parts)
    if (p.empty()) throw Error("empty element in label '" + std::string(label) + "'");
  return parts;
}

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Simplex mu(const ChainFace& c) {
  if (c.chain.empty()) throw Error("mu of an empty chain");
  return c.chain.front();
}

Simplex carrier(const ChainFace& c) {
  if (c.chain.empty()) throw Error("carrier of an empty chain");
  return c.chain.back();
}

std::string face_label(const Simplex& face) {
  std::string out = "[";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ',';
    out += face[i];
  }
  out += ']';
  return out;
}

Simplex parse_face_label(std::string_view label) {
  std::vector<Label> parts;
  for (auto p : split_top_level(label)) parts.emplace_back(p);
  return make_simplex(std::move(parts));
}

std::string chain_label(const ChainFace& c) {
  std::vector<std::string> labels;
  labels.reserve(c.chain.size());
  for (const auto& s : c.chain) labels.push_back(face_label(s));
  return face_label(make_simplex(std::move(labels)));
}

ChainFace parse_chain_label(std::string_view label) {
  ChainFace c;
  for (auto p : split_top_level(label)) c.chain.push_back(parse_face_label(p));
  std::sort(c.chain.begin(), c.chain.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < c.chain.size(); ++i)
    if (c.chain[i - 1].size() == c.chain[i].size() || !is_subset(c.chain[i - 1], c.chain[i]))
      throw Error("label '" + std::string(label) + "' is not a chain of faces");
  return c;
}

std::size_t Subdivision::mu_index(const Face& f) const {
  std::size_t best = base_face[f.front()];
  for (VertexId v : f)
    if (base.face(base_face[v]).size() < base.face(best).size()) best = base_face[v];
  return best;
}

std::size_t Subdivision::carrier_index(const Face& f) const {
  std::size_t best = base_face[f.front()];
  for (VertexId v : f)
    if (base.face(base_face[v]).size() > base.face(best).size()) best = base_face[v];
  return best;
}

ChainFace Subdivision::chain(const Face& f) const {
  ChainFace c;
  for (VertexId v : f) c.chain.push_back(base.simplex(base_face[v]));
  std::sort(c.chain.begin(), c.chain.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return c;
}

std::size_t predicted_sd_facets(const SimplicialComplex& k, int n) {
  std::size_t total = 0;
  for (std::size_t f : k.facet_indices()) {
    std::size_t per = 1;
    const std::size_t flags = factorial(k.face(f).size());
    for (int i = 0; i < n; ++i) per = saturating_mul(per, flags);
    total = per > std::numeric_limits<std::size_t>::max() - total
                ? std::numeric_limits<std::size_t>::max()
                : total + per;
  }
  return total;
}

Subdivision barycentric(const SimplicialComplex& k, std::size_t max_facets) {
  if (k.empty()) throw Error("cannot subdivide the empty complex");
  const std::size_t predicted = predicted_sd_facets(k, 1);
  if (predicted > max_facets)
    throw SizeCapError("subdivision would have " + std::to_string(predicted) +
                           " facets, cap is " + std::to_string(max_facets),
                       predicted, max_facets);

  std::vector<Label> labels;
  labels.reserve(k.num_faces());
  for (std::size_t i = 0; i < k.num_faces(); ++i) labels.push_back(face_label(k.simplex(i)));

  // Maximal chains are the complete flags of the facets.
  std::vector<Face> flags;
  flags.reserve(predicted);
  for (std::size_t fi : k.facet_indices()) {
    Face order = k.face(fi);
    do {
      Face chain;
      Face prefix;
      chain.reserve(order.size());
      for (VertexId v : order) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(static_cast<VertexId>(*k.index_of(prefix)));
      }
      flags.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  Subdivision out;
  out.base = k;
  out.complex = SimplicialComplex::from_faces(labels, std::move(flags));
  out.base_face.resize(k.num_faces());
  std::iota(out.base_face.begin(), out.base_face.end(), std::size_t{0});
  std::sort(out.base_face.begin(), out.base_face.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return out;
}

SimplicialComplex sd(const SimplicialComplex& k, std::size_t max_facets) {
  return barycentric(k, max_facets).complex;
}

SimplicialComplex sd_n(const SimplicialComplex& k, int n, std::size_t max_facets) {
  if (n < 0) throw Error("subdivision count must be >= 0");
  if (n == 0) return k;
  const std::size_t predicted = predicted_sd_facets(k, n);
  if (predicted > max_facets)
    throw SizeCapError(std::to_string(n) + "-fold subdivision would have " +
                           std::to_string(predicted) + " facets, cap is " +
                           std::to_string(max_facets),
                       predicted, max_facets);
  SimplicialComplex current = k;
  for (int i = 0; i < n; ++i) current = sd(current, max_facets);
  return current;
}

}  // namespace nervelab
