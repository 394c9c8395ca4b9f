// Brute-force reference implementations used only by the tests.
//
// Everything here works on plain label sets and dense matrices and shares no
// code with the library beyond the BigInt type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using LabelSet = std::vector<std::string>;  // sorted
using FaceSet = std::set<LabelSet>;
using Dense = std::vector<std::vector<BigInt>>;

inline LabelSet sorted(LabelSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// All nonempty subsets of every facet.
inline FaceSet closure(const std::vector<LabelSet>& facets) {
  FaceSet out;
  for (const LabelSet& raw : facets) {
    const LabelSet f = sorted(raw);
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      LabelSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

inline std::vector<std::size_t> f_vector(const FaceSet& faces) {
  std::vector<std::size_t> f;
  for (const LabelSet& s : faces) {
    if (f.size() < s.size()) f.resize(s.size(), 0);
    ++f[s.size() - 1];
  }
  return f;
}

inline std::string bracket(const LabelSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "]";
}

/// Splits "[a,[b,c],d]" into its top-level items.
inline LabelSet unbracket(const std::string& label) {
  LabelSet out;
  if (label.size() < 2 || label.front() != '[' || label.back() != ']') return out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    const char c = label[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Faces of the barycentric subdivision: all chains of faces, each face
/// written as its bracket label.
inline FaceSet subdivision(const FaceSet& faces) {
  std::vector<LabelSet> list(faces.begin(), faces.end());
  auto subset = [](const LabelSet& a, const LabelSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  FaceSet out;
  // Extend chains upward by depth-first search from every face.
  std::vector<std::size_t> chain;
  auto grow = [&](auto&& self) -> void {
    LabelSet labels;
    for (std::size_t i : chain) labels.push_back(bracket(list[i]));
    out.insert(sorted(labels));
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (!subset(list[chain.back()], list[j])) continue;
      chain.push_back(j);
      self(self);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    chain = {i};
    grow(grow);
  }
  return out;
}

inline FaceSet facets_of(const FaceSet& faces) {
  FaceSet out;
  for (const LabelSet& s : faces) {
    bool maximal = true;
    for (const LabelSet& t : faces)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.insert(s);
  }
  return out;
}

inline LabelSet vertices_of(const FaceSet& faces) {
  LabelSet out;
  for (const LabelSet& s : faces) out.insert(out.end(), s.begin(), s.end());
  return sorted(out);
}

/// Nerve of a family of vertex sets: subsets of indices with a common element.
inline FaceSet nerve(const std::map<std::string, LabelSet>& members) {
  std::vector<std::string> idx;
  std::vector<LabelSet> sets;
  for (const auto& [k, v] : members) {
    idx.push_back(k);
    sets.push_back(sorted(v));
  }
  FaceSet out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << idx.size()); ++mask) {
    LabelSet common;
    bool first = true;
    LabelSet face;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      face.push_back(idx[i]);
      if (first) {
        common = sets[i];
        first = false;
      } else {
        LabelSet next;
        std::set_intersection(common.begin(), common.end(), sets[i].begin(), sets[i].end(),
                              std::back_inserter(next));
        common = std::move(next);
      }
    }
    if (!common.empty()) out.insert(sorted(face));
  }
  return out;
}

/// Exhaustive search over vertex bijections.
inline bool isomorphic(const FaceSet& a, const FaceSet& b) {
  const LabelSet va = vertices_of(a), vb = vertices_of(b);
  if (va.size() != vb.size() || a.size() != b.size()) return false;
  if (f_vector(a) != f_vector(b)) return false;
  std::vector<std::size_t> perm(vb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<std::string, std::string> image;
    for (std::size_t i = 0; i < va.size(); ++i) image[va[i]] = vb[perm[i]];
    bool ok = true;
    for (const LabelSet& s : a) {
      LabelSet t;
      for (const auto& v : s) t.push_back(image[v]);
      if (!b.count(sorted(t))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Oriented boundary matrix from faces of dimension k to dimension k-1,
/// faces listed in set order.
inline Dense boundary_matrix(const FaceSet& faces, std::size_t k) {
  std::vector<LabelSet> rows, cols;
  for (const LabelSet& s : faces) {
    if (s.size() == k) rows.push_back(s);
    if (s.size() == k + 1) cols.push_back(s);
  }
  Dense m(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
      LabelSet f = cols[j];
      f.erase(f.begin() + static_cast<long>(drop));
      const auto it = std::lower_bound(rows.begin(), rows.end(), f);
      m[static_cast<std::size_t>(it - rows.begin())][j] = drop % 2 ? -1 : 1;
    }
  }
  return m;
}

inline BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Textbook Smith form: move a least nonzero entry to the corner, clear its
/// row and column by division with remainder, repeat; then fix divisibility.
inline std::vector<BigInt> smith(Dense a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a[i][j] != 0 && (pi == r || babs(a[i][j]) < babs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < c; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(babs(a[t][t]));
  }
  return diag;
}

/// Determinant by fraction-free elimination.
inline BigInt det(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Invariant factors as quotients of determinantal divisors (gcd of all
/// k x k minors). Exponential; for matrices up to about 5 x 5.
inline std::vector<BigInt> determinantal_factors(const Dense& a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<BigInt> d = {1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    BigInt g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        Dense minor;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          minor.emplace_back();
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) minor.back().push_back(a[i][j]);
        }
        g = boost::multiprecision::gcd(g, babs(det(minor)));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

struct Group {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
  bool operator==(const Group&) const = default;
};

/// Unreduced integral homology in degrees 0..dim.
inline std::vector<Group> homology(const FaceSet& faces) {
  const auto f = f_vector(faces);
  std::vector<std::size_t> rank(f.size() + 1, 0);
  std::vector<std::vector<BigInt>> factors(f.size() + 1);
  for (std::size_t k = 1; k < f.size(); ++k) {
    factors[k] = smith(boundary_matrix(faces, k));
    rank[k] = factors[k].size();
  }
  std::vector<Group> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k].betti = f[k] - rank[k] - rank[k + 1];
    for (const BigInt& x : factors[k + 1])
      if (x > 1) out[k].torsion.push_back(x);
  }
  return out;
}

}  // namespace oracle
