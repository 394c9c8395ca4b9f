#include "nervelab/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "nervelab/subdivision.hpp"

namespace nervelab {

bool GroupPresentation::well_formed() const {
  const auto n = static_cast<Letter>(generators.size());
  for (const Word& w : relators)
    for (Letter l : w)
      if (l == 0 || std::abs(l) > n) return false;
  return true;
}

std::string GroupPresentation::to_string() const {
  auto letter = [&](Letter l) {
    std::string s = generators[static_cast<std::size_t>(std::abs(l) - 1)];
    return l < 0 ? s + "^-1" : s;
  };
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    if (relators[r].empty()) out += "1";
    for (std::size_t i = 0; i < relators[r].size(); ++i)
      out += (i ? " " : "") + letter(relators[r][i]);
  }
  return out + " >";
}

GroupPresentation edge_path_presentation(const SimplicialComplex& k) {
  if (k.empty() || connected_components(k).size() != 1)
    throw Error("edge-path presentation needs a connected complex");

  const std::size_t n = k.num_vertices();
  std::vector<std::vector<VertexId>> nbrs(n);
  for (std::size_t e : k.faces_of_dim(1)) {
    nbrs[k.face(e)[0]].push_back(k.face(e)[1]);
    nbrs[k.face(e)[1]].push_back(k.face(e)[0]);
  }
  for (auto& list : nbrs) std::sort(list.begin(), list.end());

  std::set<Face> tree;
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : nbrs[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree.insert(Face{std::min(v, w), std::max(v, w)});
      queue.push_back(w);
    }
  }

  GroupPresentation p;
  std::map<Face, Letter> generator_of;
  for (std::size_t e : k.faces_of_dim(1)) {
    if (tree.count(k.face(e))) continue;
    p.generators.push_back(face_label(k.simplex(e)));
    generator_of[k.face(e)] = static_cast<Letter>(p.generators.size());
  }
  auto edge_letter = [&](VertexId a, VertexId b, int sign, Word& w) {
    auto it = generator_of.find(Face{a, b});
    if (it != generator_of.end()) w.push_back(sign * it->second);
  };
  for (std::size_t t : k.faces_of_dim(2)) {
    const Face& f = k.face(t);
    Word w;
    edge_letter(f[0], f[1], 1, w);
    edge_letter(f[1], f[2], 1, w);
    edge_letter(f[0], f[2], -1, w);
    p.relators.push_back(std::move(w));
  }
  return p;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  if (!p.well_formed()) throw Error("relator uses an undeclared generator");
  std::vector<std::vector<BigInt>> m(p.relators.size(),
                                     std::vector<BigInt>(p.generators.size()));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r]) m[r][static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  SNFResult snf = smith_normal_form(m);
  HomologyGroup g;
  g.betti = p.generators.size() - snf.rank;
  for (auto& f : snf.invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::string to_string(TietzeStatus s) {
  switch (s) {
    case TietzeStatus::trivialized:
      return "trivialized";
    case TietzeStatus::simplified:
      return "simplified";
    case TietzeStatus::exhausted:
      return "exhausted";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxTotalLength = 1'000'000;

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Word cyclically_reduced(const Word& w) {
  Word stack;
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(stack.begin() + static_cast<long>(lo), stack.begin() + static_cast<long>(hi));
}

// Least rotation of w or its inverse; equal keys mean the relators are
// conjugate up to inversion and so define the same normal closure.
Word canonical_key(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + static_cast<long>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
      best = std::min(best, rot);
    }
  }
  return best;
}

}  // namespace

TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget) {
  if (!p.well_formed()) throw Error("relator uses an undeclared generator");
  TietzeResult result;
  auto spend = [&]() {
    if (result.moves >= budget) return false;
    ++result.moves;
    return true;
  };

  while (true) {
    for (Word& w : p.relators) w = cyclically_reduced(w);

    // Drop empty and repeated relators.
    std::set<Word> seen;
    std::vector<Word> kept;
    bool out_of_budget = false;
    for (Word& w : p.relators) {
      const bool redundant = w.empty() || !seen.insert(canonical_key(w)).second;
      if (redundant && spend()) continue;
      if (redundant) out_of_budget = true;
      kept.push_back(std::move(w));
    }
    p.relators = std::move(kept);
    if (out_of_budget) {
      result.status = TietzeStatus::exhausted;
      break;
    }

    if (p.generators.empty()) {
      result.status = TietzeStatus::trivialized;
      break;
    }

    // Shortest relator in which some generator occurs exactly once.
    std::optional<std::pair<std::size_t, Letter>> pick;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (pick && p.relators[r].size() >= p.relators[pick->first].size()) continue;
      std::map<Letter, int> count;
      for (Letter l : p.relators[r]) ++count[std::abs(l)];
      for (auto [g, c] : count)
        if (c == 1) {
          pick = {r, g};
          break;
        }
    }
    if (!pick) {
      result.status = TietzeStatus::simplified;
      break;
    }
    if (!spend()) {
      result.status = TietzeStatus::exhausted;
      break;
    }

    auto [r, g] = *pick;
    Word rel = p.relators[r];
    auto at = std::find_if(rel.begin(), rel.end(), [&](Letter l) { return std::abs(l) == g; });
    std::rotate(rel.begin(), at, rel.end());
    const Letter lead = rel.front();
    Word rest(rel.begin() + 1, rel.end());
    // lead * rest = 1, so g = rest^-1 when lead = g and g = rest when lead = g^-1.
    auto renumber = [g = g](Letter l) { return std::abs(l) > g ? (l > 0 ? l - 1 : l + 1) : l; };
    Word image = lead > 0 ? inverse(rest) : rest;
    for (Letter& l : image) l = renumber(l);
    const Word image_inv = inverse(image);

    std::vector<Word> next;
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == r) continue;
      Word w;
      for (Letter l : p.relators[i]) {
        if (std::abs(l) == g) {
          const Word& sub = l > 0 ? image : image_inv;
          w.insert(w.end(), sub.begin(), sub.end());
        } else {
          w.push_back(renumber(l));
        }
      }
      total += w.size();
      next.push_back(std::move(w));
    }
    if (total > kMaxTotalLength) {
      result.status = TietzeStatus::exhausted;
      break;
    }
    p.generators.erase(p.generators.begin() + (g - 1));
    p.relators = std::move(next);
  }
  result.presentation = std::move(p);
  return result;
}

}  // namespace nervelab
